"""Exact-arithmetic probability mass functions on small integer supports.

All probabilities are `fractions.Fraction` values, so every identity in the
rest of the package (balance equations, Stein residuals, total variation
distances) can be checked by exact equality rather than within a tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

ZERO = Fraction(0)
ONE = Fraction(1)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); returns 0 for k outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class Pmf:
    """A finite pmf on a subset of {0, ..., n} with exact rational masses.

    Only strictly positive masses are stored; querying a point outside the
    support returns an exact 0.  Construction validates that the masses sum
    to exactly 1.
    """

    mass: Mapping[int, Fraction]
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"ambient n must be >= 0, got {self.n}")
        cleaned = {}
        total = ZERO
        for point, p in self.mass.items():
            p = Fraction(p)
            if p < 0:
                raise ValueError(f"negative mass {p} at point {point}")
            if p == 0:
                continue
            if not 0 <= point <= self.n:
                raise ValueError(f"support point {point} outside [0, {self.n}]")
            cleaned[int(point)] = p
            total += p
        if total != 1:
            raise ValueError(f"masses sum to {total}, expected exactly 1")
        object.__setattr__(self, "mass", cleaned)

    @classmethod
    def point(cls, at: int, n: int) -> "Pmf":
        """Point mass at a single support point."""
        return cls({at: ONE}, n)

    def prob(self, point: int) -> Fraction:
        return self.mass.get(point, ZERO)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.mass))

    def items(self) -> Iterator[tuple[int, Fraction]]:
        for point in sorted(self.mass):
            yield point, self.mass[point]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pmf):
            return NotImplemented
        return self.n == other.n and dict(self.mass) == dict(other.mass)

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.mass.items()))))


def tv_distance(p: Pmf, q: Pmf) -> Fraction:
    """Total variation distance, (1/2) sum |p(i) - q(i)| over the joint support.

    For laws on the integers this equals the supremum over sets of the
    probability discrepancy; the result is an exact rational in [0, 1].
    """
    points = set(p.mass) | set(q.mass)
    return sum((abs(p.prob(i) - q.prob(i)) for i in points), ZERO) / 2


def mean_var(p: Pmf) -> tuple[Fraction, Fraction]:
    """Exact mean and variance of a pmf."""
    mean = sum((Fraction(i) * m for i, m in p.mass.items()), ZERO)
    second = sum((Fraction(i * i) * m for i, m in p.mass.items()), ZERO)
    return mean, second - mean * mean
