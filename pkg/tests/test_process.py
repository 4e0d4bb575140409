from fractions import Fraction

import pytest

from lightbulb.clubbed import parity_class_of
from lightbulb.pmf import Pmf
from lightbulb.process import (
    enumerate_terminal_pmf,
    exact_terminal_pmf,
    initial_stage,
    stage_distributions,
    stage_transition,
)

F = Fraction


def test_initial_stage_is_all_off():
    d = initial_stage(5)
    assert d.stage == 0
    assert d.dist == Pmf.point(0, 5)
    with pytest.raises(ValueError):
        initial_stage(0)


def test_forced_transitions():
    # one bulb: must toggle on
    d = stage_transition(initial_stage(1))
    assert d.dist == Pmf.point(1, 1)
    # two bulbs, stage 2: both toggle, on-count stays at 1
    stages = stage_distributions(2)
    assert stages[1].dist == Pmf.point(1, 2)
    assert stages[2].dist == Pmf.point(1, 2)


def test_three_bulb_stage_two():
    stages = stage_distributions(3)
    assert dict(stages[2].dist.mass) == {1: F(2, 3), 3: F(1, 3)}


def test_transition_rejects_exhausted_process():
    stages = stage_distributions(3)
    with pytest.raises(ValueError):
        stage_transition(stages[3])


def test_terminal_small_cases():
    assert exact_terminal_pmf(1) == Pmf.point(1, 1)
    assert exact_terminal_pmf(2) == Pmf.point(1, 2)
    assert dict(exact_terminal_pmf(3).mass) == {0: F(1, 3), 2: F(2, 3)}


def test_parity_class_of():
    assert parity_class_of(3).m == 0
    assert parity_class_of(4).m == 0
    assert parity_class_of(5).m == 1
    for n in range(1, 40):
        assert parity_class_of(n).m == (n * (n + 1) // 2) % 2
    with pytest.raises(ValueError):
        parity_class_of(0)


@pytest.mark.parametrize("n", range(1, 31))
def test_terminal_support_in_parity_lattice(n):
    pmf = exact_terminal_pmf(n)
    parity = parity_class_of(n)
    assert sum(pmf.mass.values()) == 1
    assert all(w in parity for w in pmf.support)


def test_intermediate_stage_parity():
    # after stage r the on-count parity is fixed at (1 + ... + r) mod 2
    for n in (4, 7):
        for d in stage_distributions(n):
            toggles = d.stage * (d.stage + 1) // 2
            assert all(w % 2 == toggles % 2 for w in d.dist.support)


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_oracle_matches_dp(n):
    assert enumerate_terminal_pmf(n) == exact_terminal_pmf(n)
