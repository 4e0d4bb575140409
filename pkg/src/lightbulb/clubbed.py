"""The clubbed binomial distribution on a parity lattice.

Merging each pair of adjacent cells of Bin(n-1, 1/2) gives a law supported on
the even (m=0) or odd (m=1) integers in {0, ..., n} with mass
C(n, i) * (1/2)^(n-1) at each lattice point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .pmf import ZERO, Pmf, binomial


@dataclass(frozen=True)
class ParityClass:
    """A parity lattice: the integers in {0, ..., n} congruent to m mod 2."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.m not in (0, 1):
            raise ValueError(f"m must be 0 or 1, got {self.m}")

    @property
    def lattice(self) -> tuple[int, ...]:
        return tuple(range(self.m, self.n + 1, 2))

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and self.m <= x <= self.n and x % 2 == self.m


def alpha(n: int, x: int) -> int:
    """Upward coefficient (n - x)(n - 1 - x) of the birth-death generator."""
    return (n - x) * (n - 1 - x)


def beta(x: int) -> int:
    """Downward coefficient x(x - 1) of the birth-death generator."""
    return x * (x - 1)


@dataclass(frozen=True)
class ClubbedPmf:
    parity: ParityClass
    dist: Pmf

    def prob(self, i: int) -> Fraction:
        """Mass at i, exactly 0 off the lattice."""
        if i not in self.parity:
            return ZERO
        return self.dist.prob(i)


@lru_cache(maxsize=None)
def clubbed_pmf(n: int, m: int) -> ClubbedPmf:
    """Clubbed binomial law on the parity lattice (n, m)."""
    parity = ParityClass(n, m)
    scale = Fraction(1, 2 ** (n - 1))
    mass = {i: binomial(n, i) * scale for i in parity.lattice}
    return ClubbedPmf(parity, Pmf(mass, n))


def verify_balance(n: int, m: int) -> bool:
    """Check the detailed-balance relation pairing adjacent lattice cells.

    For every lattice point x >= 2 the relation
    alpha(x-2) * pi(x-2) == beta(x) * pi(x) must hold exactly; points below
    the lattice carry mass 0.
    """
    club = clubbed_pmf(n, m)
    for x in club.parity.lattice:
        if x < 2:
            continue
        if alpha(n, x - 2) * club.prob(x - 2) != beta(x) * club.prob(x):
            return False
    return True


def parity_class_of(n: int) -> ParityClass:
    """The parity lattice actually supporting the terminal on-count.

    m = 0 when n mod 4 is 0 or 3, m = 1 otherwise; equivalently, m is the
    parity of the total toggle count n(n+1)/2.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m = 0 if n % 4 in (0, 3) else 1
    assert m == (n * (n + 1) // 2) % 2
    return ParityClass(n, m)


def theorem_target(n: int) -> ClubbedPmf:
    """The clubbed binomial on the lattice matching the process parity."""
    return clubbed_pmf(n, parity_class_of(n).m)
