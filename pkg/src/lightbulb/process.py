"""Exact terminal distribution of the toggling process.

At stage r a uniform r-subset of the n bulbs flips state.  By exchangeability
only the on-count matters, and from on-count w a stage-r flip hits j of the
on bulbs with hypergeometric probability C(w,j) C(n-w,r-j) / C(n,r), moving
the count to w + r - 2j.  Running this dynamic program through stages
1..n yields the exact law of the terminal on-count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .clubbed import parity_class_of
from .pmf import Pmf, binomial

__all__ = [
    "StageDistribution",
    "initial_stage",
    "stage_transition",
    "stage_distributions",
    "exact_terminal_pmf",
    "enumerate_terminal_pmf",
    "parity_class_of",
]


@dataclass(frozen=True)
class StageDistribution:
    """Law of the on-count after stages 1..stage of an n-bulb process."""

    stage: int
    n: int
    dist: Pmf


def initial_stage(n: int) -> StageDistribution:
    """All bulbs off before any stage has run."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return StageDistribution(0, n, Pmf.point(0, n))


def stage_transition(d: StageDistribution) -> StageDistribution:
    """Advance one stage: flip a uniform (stage+1)-subset of the bulbs."""
    if d.stage >= d.n:
        raise ValueError(f"no stage {d.stage + 1} in a process of size {d.n}")
    n = d.n
    r = d.stage + 1
    total = binomial(n, r)
    out: dict[int, Fraction] = {}
    for w, p in d.dist.mass.items():
        j_lo = max(0, r - (n - w))
        j_hi = min(w, r)
        for j in range(j_lo, j_hi + 1):
            weight = Fraction(binomial(w, j) * binomial(n - w, r - j), total)
            target = w + r - 2 * j
            out[target] = out.get(target, Fraction(0)) + p * weight
    return StageDistribution(r, n, Pmf(out, n))


def stage_distributions(n: int) -> list[StageDistribution]:
    """All intermediate laws, stage 0 through stage n."""
    stages = [initial_stage(n)]
    for _ in range(n):
        stages.append(stage_transition(stages[-1]))
    return stages


@lru_cache(maxsize=None)
def exact_terminal_pmf(n: int) -> Pmf:
    """Exact law of the number of bulbs on after the final stage."""
    return stage_distributions(n)[n].dist


def enumerate_terminal_pmf(n: int) -> Pmf:
    """Terminal law by exhaustive enumeration over bulb-state vectors.

    Tracks the exact distribution over all 2^n on/off configurations,
    applying every r-subset flip with uniform weight at each stage.  Never
    uses the on-count reduction, so it serves as an independent oracle for
    exact_terminal_pmf; exponential in n, intended for n <= 10 or so.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    weights = {0: 1}  # bitmask -> integer weight over a common denominator
    denominator = 1
    for r in range(1, n + 1):
        flips = [
            sum(1 << b for b in subset)
            for subset in combinations(range(n), r)
        ]
        denominator *= len(flips)
        nxt: dict[int, int] = {}
        for state, w in weights.items():
            for flip in flips:
                toggled = state ^ flip
                nxt[toggled] = nxt.get(toggled, 0) + w
        weights = nxt
    mass: dict[int, Fraction] = {}
    for state, w in weights.items():
        k = state.bit_count()
        mass[k] = mass.get(k, Fraction(0)) + Fraction(w, denominator)
    return Pmf(mass, n)
