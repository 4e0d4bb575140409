"""Theorem-level checks: exact total variation against the exponential bound.

Brings the exact dynamic program, the clubbed binomial target, and the Stein
norm together into per-n report rows, and carries the two purely
combinatorial ingredients of the bound's proof: the pairwise collision
probability and the exponent identity behind e^{-(n+1)/3}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .clubbed import parity_class_of, theorem_target
from .pmf import tv_distance
from .process import exact_terminal_pmf
from .stein import LEMMA_CONSTANT, sharp_sup_bound


def float_ceil(q: Fraction) -> float:
    """Smallest double >= q; exact comparisons against float bounds must
    never pass because the rational rounded down."""
    x = float(q)
    if Fraction(x) < q:
        x = math.nextafter(x, math.inf)
    return x


def theorem_bound(n: int) -> float:
    """The proven total-variation bound 2.7314 sqrt(n) e^{-(n+1)/3}."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return LEMMA_CONSTANT * math.sqrt(n) * math.exp(-(n + 1) / 3)


@lru_cache(maxsize=None)
def collision_probability(n: int) -> Fraction:
    """Exact probability that two fixed bulbs share every stage's toggle.

    Product over stages r of [r(r-1) + (n-r)(n-1-r)] / [n(n-1)]; needs
    n >= 2 for the pair to exist.
    """
    if n < 2:
        raise ValueError(f"collision probability needs n >= 2, got {n}")
    prob = Fraction(1)
    for r in range(1, n + 1):
        prob *= Fraction(r * (r - 1) + (n - r) * (n - 1 - r), n * (n - 1))
    return prob


def exponent_identity(n: int) -> bool:
    """Exact check that (2 / n(n-1)) * sum_{r=1}^n (nr - r^2) equals (n+1)/3."""
    if n < 2:
        raise ValueError(f"identity needs n >= 2, got {n}")
    total = sum(n * r - r * r for r in range(1, n + 1))
    return Fraction(2 * total, n * (n - 1)) == Fraction(n + 1, 3)


def exponent_identity_sweep(n_max: int) -> bool:
    """Exponent identity for every 2 <= n <= n_max.

    Maintains running power sums so the whole sweep is linear in n_max while
    each n's sum is still genuinely accumulated.
    """
    s1 = 1  # sum of r for r <= n
    s2 = 1  # sum of r^2 for r <= n
    for n in range(2, n_max + 1):
        s1 += n
        s2 += n * n
        if Fraction(2 * (n * s1 - s2), n * (n - 1)) != Fraction(n + 1, 3):
            return False
    return True


@dataclass(frozen=True)
class ReportRow:
    """One n's worth of verification output."""

    n: int
    m: int
    tv_exact: Fraction
    tv_float: float
    bound: float
    ratio: float
    sharp_stein_norm: Fraction | None
    collision_prob: Fraction | None
    collision_bound: float
    passed: bool


@lru_cache(maxsize=None)
def verify_theorem(n: int) -> ReportRow:
    """Exact distance to the clubbed binomial, checked against the bound.

    A violated inequality is reported through the passed flag, never
    clamped or suppressed.
    """
    parity = parity_class_of(n)
    tv = tv_distance(exact_terminal_pmf(n), theorem_target(n).dist)
    tv_up = float_ceil(tv)
    bound = theorem_bound(n)
    collision_bound = math.exp(-(n + 1) / 3)
    sharp = sharp_sup_bound(parity) if n >= 2 else None
    collision = collision_probability(n) if n >= 2 else None
    ok = tv_up <= bound
    if collision is not None:
        ok = ok and float_ceil(collision) <= collision_bound
    return ReportRow(
        n=n,
        m=parity.m,
        tv_exact=tv,
        tv_float=tv_up,
        bound=bound,
        ratio=tv_up / bound,
        sharp_stein_norm=sharp,
        collision_prob=collision,
        collision_bound=collision_bound,
        passed=ok,
    )


def build_report(n_max: int) -> list[ReportRow]:
    """Report rows for every n from 1 to n_max, in order."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    return [verify_theorem(n) for n in range(1, n_max + 1)]
