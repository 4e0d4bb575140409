from fractions import Fraction

import pytest

from lightbulb.clubbed import (
    ParityClass,
    alpha,
    beta,
    clubbed_pmf,
    theorem_target,
    verify_balance,
)
from lightbulb.pmf import binomial

F = Fraction


def test_lattice():
    assert ParityClass(5, 1).lattice == (1, 3, 5)
    assert ParityClass(4, 0).lattice == (0, 2, 4)
    assert 3 in ParityClass(5, 1)
    assert 2 not in ParityClass(5, 1)
    assert 7 not in ParityClass(5, 1)


def test_parity_class_validation():
    with pytest.raises(ValueError):
        ParityClass(0, 0)
    with pytest.raises(ValueError):
        ParityClass(3, 2)


def test_coefficients_vanish_at_boundaries():
    for n in (3, 6, 11):
        assert alpha(n, n) == 0
        assert alpha(n, n - 1) == 0
    assert beta(0) == 0
    assert beta(1) == 0


def test_clubbed_values():
    assert dict(clubbed_pmf(4, 0).dist.mass) == {0: F(1, 8), 2: F(6, 8), 4: F(1, 8)}
    assert dict(clubbed_pmf(1, 1).dist.mass) == {1: F(1)}
    assert dict(clubbed_pmf(3, 0).dist.mass) == {0: F(1, 4), 2: F(3, 4)}


def test_off_lattice_mass_is_zero():
    club = clubbed_pmf(4, 0)
    assert club.prob(1) == 0
    assert club.prob(-2) == 0
    assert club.prob(6) == 0


def test_theorem_target():
    assert dict(theorem_target(3).dist.mass) == {0: F(1, 4), 2: F(3, 4)}
    assert dict(theorem_target(2).dist.mass) == {1: F(1)}
    assert dict(theorem_target(5).dist.mass) == {1: F(5, 16), 3: F(10, 16), 5: F(1, 16)}


def test_balance_hand_case():
    club = clubbed_pmf(4, 0)
    assert alpha(4, 0) * club.prob(0) == F(3, 2)
    assert beta(2) * club.prob(2) == F(3, 2)
    assert verify_balance(4, 0)
    assert verify_balance(1, 1)  # vacuous: no lattice point >= 2


@pytest.mark.parametrize("m", (0, 1))
@pytest.mark.parametrize("n", range(1, 31))
def test_balance_and_pascal_sweep(n, m):
    assert verify_balance(n, m)
    club = clubbed_pmf(n, m)
    scale = F(1, 2 ** (n - 1))
    for i in club.parity.lattice:
        # each clubbed cell is the sum of two adjacent Bin(n-1, 1/2) cells
        assert club.prob(i) == (binomial(n - 1, i - 1) + binomial(n - 1, i)) * scale
    assert sum(club.dist.mass.values()) == 1


@pytest.mark.parametrize("n", range(1, 21))
def test_reflection_symmetry(n):
    for m in (0, 1):
        club = clubbed_pmf(n, m)
        mirrored = clubbed_pmf(n, (n - m) % 2)
        for i in club.parity.lattice:
            assert club.prob(i) == mirrored.prob(n - i)
