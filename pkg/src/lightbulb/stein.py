"""Stein operator and equation solver for the clubbed binomial law.

The operator acts on functions f of a lattice point x as
alpha(x) f(x+2) - beta(x) f(x).  For a target set A the Stein equation asks
for f with (A f)(x) = 1_A(x) - pi(A); its explicit solution, its exact sharp
sup-norm, and the two floating-point envelope functions used to bound that
norm all live here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .clubbed import ClubbedPmf, ParityClass, alpha, beta, clubbed_pmf
from .pmf import ZERO

LEMMA_CONSTANT = 2.7314


@dataclass(frozen=True)
class TailSplit:
    """Mass of the lattice strictly below x (points <= x-2) and its complement."""

    x: int
    lower: Fraction
    upper: Fraction


@dataclass(frozen=True)
class SteinSolution:
    """Solution of the Stein equation for one target set, stored exactly."""

    parity: ParityClass
    target: frozenset[int]
    values: Mapping[int, Fraction]

    def value(self, x: int) -> Fraction:
        if x not in self.parity:
            raise ValueError(f"{x} is not on the lattice (n={self.parity.n}, m={self.parity.m})")
        return self.values[x]


@lru_cache(maxsize=None)
def _lower_tails(parity: ParityClass) -> dict[int, Fraction]:
    """Cumulative lattice mass below each point: x -> pi([0, x-2] on lattice)."""
    club = clubbed_pmf(parity.n, parity.m)
    tails = {}
    acc = ZERO
    for x in parity.lattice:
        tails[x] = acc
        acc += club.prob(x)
    return tails


def tail_split(parity: ParityClass, x: int) -> TailSplit:
    if x not in parity:
        raise ValueError(f"{x} is not on the lattice (n={parity.n}, m={parity.m})")
    lower = _lower_tails(parity)[x]
    return TailSplit(x, lower, 1 - lower)


def stein_apply(parity: ParityClass, f: Mapping[int, Fraction], x: int) -> Fraction:
    """Apply the operator at x; f beyond the lattice top is irrelevant since
    alpha vanishes at n-1 and n."""
    if x not in parity:
        raise ValueError(f"{x} is not on the lattice (n={parity.n}, m={parity.m})")
    up = f.get(x + 2, ZERO) if x + 2 <= parity.n else ZERO
    return alpha(parity.n, x) * up - beta(x) * f[x]


def _check_target(parity: ParityClass, points: Iterable[int]) -> frozenset[int]:
    target = frozenset(points)
    bad = [x for x in target if x not in parity]
    if bad:
        raise ValueError(f"target points {sorted(bad)} outside the lattice (n={parity.n}, m={parity.m})")
    return target


@lru_cache(maxsize=4096)
def solve_singleton(parity: ParityClass, r: int) -> SteinSolution:
    """Explicit solution for a one-point target set, zero at the lattice bottom.

    Below r+2 the solution is -pi(below x) pi_r / (beta(x) pi_x); from r+2
    upward it is pi(x and above) pi_r / (beta(x) pi_x).
    """
    target = _check_target(parity, [r])
    club = clubbed_pmf(parity.n, parity.m)
    pi_r = club.prob(r)
    values: dict[int, Fraction] = {parity.m: ZERO}
    for x in parity.lattice:
        if x == parity.m:
            continue
        split = tail_split(parity, x)
        denom = beta(x) * club.prob(x)
        if x < r + 2:
            values[x] = -split.lower * pi_r / denom
        else:
            values[x] = split.upper * pi_r / denom
    return SteinSolution(parity, target, values)


def solve_set(parity: ParityClass, points: Iterable[int]) -> SteinSolution:
    """Solution for an arbitrary target set.

    Computed two independent ways, by summing singleton solutions and by the
    compact two-tail product formula, which must agree exactly; the exact
    residual of the Stein equation is also checked to vanish at every
    lattice point before the solution is returned.
    """
    target = _check_target(parity, points)
    club = clubbed_pmf(parity.n, parity.m)
    pi_a = sum((club.prob(r) for r in target), ZERO)

    by_linearity: dict[int, Fraction] = {x: ZERO for x in parity.lattice}
    for r in target:
        single = solve_singleton(parity, r)
        for x in parity.lattice:
            by_linearity[x] += single.values[x]

    values: dict[int, Fraction] = {parity.m: ZERO}
    for x in parity.lattice:
        if x == parity.m:
            continue
        split = tail_split(parity, x)
        in_lower = sum((club.prob(r) for r in target if r <= x - 2), ZERO)
        in_upper = pi_a - in_lower
        values[x] = (split.upper * in_lower - split.lower * in_upper) / (beta(x) * club.prob(x))

    if values != by_linearity:
        raise AssertionError(f"compact and linear solution forms disagree (n={parity.n}, m={parity.m}, A={sorted(target)})")
    for x in parity.lattice:
        expected = (1 if x in target else 0) - pi_a
        if stein_apply(parity, values, x) != expected:
            raise AssertionError(f"nonzero Stein residual at x={x} (n={parity.n}, m={parity.m}, A={sorted(target)})")
    return SteinSolution(parity, target, values)


def solve_forward(parity: ParityClass, points: Iterable[int]) -> dict[int, Fraction]:
    """Independent construction by the defining forward recurrence.

    Starting from 0 at the lattice bottom, each application of the operator
    equation determines the next value, so this pins the solution uniquely;
    used as a cross-check on the closed forms.
    """
    target = _check_target(parity, points)
    club = clubbed_pmf(parity.n, parity.m)
    pi_a = sum((club.prob(r) for r in target), ZERO)
    values = {parity.m: ZERO}
    for x in parity.lattice:
        if x + 2 > parity.n:
            break
        rhs = (1 if x in target else 0) - pi_a + beta(x) * values[x]
        values[x + 2] = rhs / alpha(parity.n, x)
    return values


def max_abs_residual(solution: SteinSolution) -> Fraction:
    """Largest absolute Stein-equation residual over the lattice (0 when exact)."""
    parity = solution.parity
    club = clubbed_pmf(parity.n, parity.m)
    pi_a = sum((club.prob(r) for r in solution.target), ZERO)
    worst = ZERO
    for x in parity.lattice:
        expected = (1 if x in solution.target else 0) - pi_a
        worst = max(worst, abs(stein_apply(parity, solution.values, x) - expected))
    return worst


@lru_cache(maxsize=None)
def sharp_sup_bound(parity: ParityClass) -> Fraction:
    """Exact attainable sup of |f(x)| over all target sets and lattice points.

    The solution at x is extremized by taking the target to be everything
    below x (or everything from x up), giving the two-tail product over
    beta(x) pi_x; the maximum of that expression over the lattice is sharp.
    Returns 0 for a single-point lattice, where every solution vanishes.
    """
    if parity.n < 2:
        raise ValueError(f"sup-norm bound needs n >= 2, got n={parity.n}")
    club = clubbed_pmf(parity.n, parity.m)
    best = ZERO
    for x in parity.lattice:
        if x == parity.m:
            continue
        split = tail_split(parity, x)
        best = max(best, split.lower * split.upper / (beta(x) * club.prob(x)))
    return best


def binding_bound(parity: ParityClass) -> tuple[Fraction, int]:
    """Sharp sup together with the lattice point attaining it (diagnostic)."""
    if parity.n < 2:
        raise ValueError(f"sup-norm bound needs n >= 2, got n={parity.n}")
    club = clubbed_pmf(parity.n, parity.m)
    best, argmax = ZERO, parity.m
    for x in parity.lattice:
        if x == parity.m:
            continue
        split = tail_split(parity, x)
        value = split.lower * split.upper / (beta(x) * club.prob(x))
        if value > best:
            best, argmax = value, x
    return best, argmax


def lemma_bound(n: int) -> float:
    """Proven sup-norm bound 2.7314 / (sqrt(n) (n-1)); undefined below n=2."""
    if n < 2:
        raise ValueError(f"bound requires n >= 2, got n={n}")
    return LEMMA_CONSTANT / (math.sqrt(n) * (n - 1))


def g1(n: int) -> float:
    """Envelope controlling the generic reflection case of the norm bound."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    s = math.sqrt(n)
    ratio = (s + 3) / (n / 2 + 2 + s / 2)
    geometric = 1 / (1 - (1 - ratio) ** 2)
    return (s / 4 + 1 + geometric) * s * (n - 1) / ((n / 2 + 1) * (n / 2))


def g2(n: int) -> float:
    """Envelope for the odd-n midpoint case of the norm bound."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    s = math.sqrt(n)
    tail = (n + 3 + s) / (4 + 2 * s)
    return (s / 4 + 1 + tail) * (n - 1) * s / ((n / 2 + 1) * n)
