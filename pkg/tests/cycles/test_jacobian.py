import math

import pytest

from cycleops import CycleOpsInvalidParameters
from cycleops.cycles import (
    cycle_from_q,
    degree_functional,
    fstar_multiplicity,
    jacobian_pushforward,
    smash_certificate,
)
from cycleops.exact import binomial
from cycleops.linear import build_s_system, kappa_functional, solve_with_avoidance
from cycleops.models.cycles import ComponentStatus


def test_jacobian_pushforward(gross_schoen_q, genus_one_q):
    assert jacobian_pushforward(cycle_from_q(3, gross_schoen_q), 2).comps == [0, 6]
    assert jacobian_pushforward(cycle_from_q(5, genus_one_q), 1).comps == [0]
    assert jacobian_pushforward(cycle_from_q(4, [0] * 4), 3).comps == [0, 0, 0]


def test_degree_functional(gross_schoen_q):
    assert degree_functional(cycle_from_q(3, gross_schoen_q)) == 0
    assert degree_functional(cycle_from_q(3, [0, 1, 0])) == 12
    assert degree_functional(cycle_from_q(5, [0] * 5)) == 0


def test_fstar_multiplicity():
    assert fstar_multiplicity(4, 2) == 4
    for m in range(1, 21):
        assert fstar_multiplicity(m, m) == math.factorial(m)
        assert fstar_multiplicity(m, 1) == math.factorial(m - 1)
        for i in range(1, m + 1):
            assert binomial(m, i) * fstar_multiplicity(m, i) == math.factorial(m)
    with pytest.raises(CycleOpsInvalidParameters):
        fstar_multiplicity(3, 0)


def test_smash_certificate_examples(gross_schoen_q, genus_one_q):
    assert smash_certificate(cycle_from_q(5, genus_one_q), 1).certified

    report = smash_certificate(cycle_from_q(3, gross_schoen_q), 2)
    assert report.certified
    assert [c.status for c in report.components] == [ComponentStatus.ZERO, ComponentStatus.SKEW]

    report = smash_certificate(cycle_from_q(3, [1, 0, 0]), 1)
    assert not report.certified
    assert report.components[0].value == 3
    assert report.components[0].status is ComponentStatus.NONZERO


def test_solved_cycles_have_vanishing_even_components():
    for g in range(1, 6):
        for n in range(3, 6):
            m = max(n + 1, 2 * g + 3)
            q = solve_with_avoidance(build_s_system(g, m), kappa_functional(m, n))
            cycle = cycle_from_q(m, q)
            comps = jacobian_pushforward(cycle, g).comps
            assert all(value == 0 for s, value in enumerate(comps) if s % 2 == 0)
            assert smash_certificate(cycle, g).certified
