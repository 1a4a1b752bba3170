import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycleops import CycleOpsInvalidInput, CycleOpsInvalidParameters
from cycleops.cycles import (
    collapse_symmetric,
    cycle_from_q,
    expand_symmetric,
    jacobian_pushforward,
    project_pushforward,
    projected_relation,
    pullback_symmetric_class,
    symmetric_power_class,
)
from cycleops.linear import p7_functional
from cycleops.models.cycles import GeneralCycle

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def test_cycle_from_q(gross_schoen_q):
    assert cycle_from_q(3, gross_schoen_q).coeffs == [1, -1, 1]
    assert cycle_from_q(4, [0, 0, 0, 0]).is_zero()
    with pytest.raises(CycleOpsInvalidInput):
        cycle_from_q(4, [1, 2, 3])


def test_project_pushforward_examples(genus_one_q):
    assert project_pushforward(cycle_from_q(4, [0, 1, 0, 0]), 2).coeffs == [2, 1]
    assert project_pushforward(cycle_from_q(4, [-1, 1, -1, 1]), 2).coeffs == [0, 0]
    assert project_pushforward(cycle_from_q(5, genus_one_q), 3).coeffs[-1] == 1
    with pytest.raises(CycleOpsInvalidParameters):
        project_pushforward(cycle_from_q(4, [1, 1, 1, 1]), 4)


def test_projection_composes():
    rng = random.Random(7)
    for m in range(3, 13):
        cycle = cycle_from_q(m, [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(m)])
        for n in range(2, m):
            for p in range(1, n):
                assert project_pushforward(project_pushforward(cycle, n), p) == project_pushforward(cycle, p)


def vector_pairs():
    return st.integers(2, 9).flatmap(
        lambda m: st.tuples(
            st.lists(rationals, min_size=m, max_size=m), st.lists(rationals, min_size=m, max_size=m), rationals
        )
    )


@given(vector_pairs())
def test_projection_is_linear(data):
    a, b, scale = data
    m = len(a)
    combined = project_pushforward(cycle_from_q(m, [x + scale * y for x, y in zip(a, b)]), m - 1)
    first = project_pushforward(cycle_from_q(m, a), m - 1)
    second = project_pushforward(cycle_from_q(m, b), m - 1)
    assert combined.coeffs == [x + scale * y for x, y in zip(first.coeffs, second.coeffs)]


def test_projected_relation(genus_one_q):
    assert projected_relation(cycle_from_q(5, genus_one_q), 3) == [1, -1, 1]
    with pytest.raises(CycleOpsInvalidParameters):
        projected_relation(cycle_from_q(4, [-1, 1, -1, 1]), 2)


def test_pullback_of_pushforward_is_multiplication_by_m_factorial():
    rng = random.Random(11)
    for m in range(1, 12):
        cycle = cycle_from_q(m, [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(m)])
        pulled = pullback_symmetric_class(symmetric_power_class(cycle), m)
        assert pulled.coeffs == [math.factorial(m) * a for a in cycle.coeffs]


def test_expand_and_collapse():
    cycle = cycle_from_q(4, [1, 0, Fraction(-1, 2), 3])
    general = expand_symmetric(cycle)
    assert len(general.coeffs) == 4 + 4 + 1
    assert general.coefficient(0b0111) == Fraction(-1, 2)
    assert general.coefficient(0b0011) == 0
    assert collapse_symmetric(general) == cycle


def test_collapse_rejects_asymmetric_cycles():
    with pytest.raises(CycleOpsInvalidInput):
        collapse_symmetric(GeneralCycle(m=3, coeffs={0b001: 1, 0b010: 2, 0b100: 1}))
    with pytest.raises(CycleOpsInvalidInput):
        collapse_symmetric(GeneralCycle(m=3, coeffs={0b011: 1}))


def test_component_functional_is_jacobian_pushforward_of_projection():
    rng = random.Random(3)
    for m in range(3, 11):
        q = [Fraction(rng.randint(-20, 20)) for _ in range(m)]
        cycle = cycle_from_q(m, q)
        for n in range(1, m):
            for i in range(0, 4):
                comps = jacobian_pushforward(project_pushforward(cycle, n), i + 2).comps
                assert p7_functional(n, m, i).evaluate(q) == comps[i + 1]
