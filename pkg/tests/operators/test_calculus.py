from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycleops import CycleOpsInvalidInput, CycleOpsInvalidParameters
from cycleops.exact import Poly, binomial
from cycleops.operators import (
    apply_T,
    binomial_power,
    moment_poly,
    one_plus_x_valuation,
    r_poly,
    shifted_power,
)

polys = st.lists(st.fractions(max_denominator=30), max_size=7).map(lambda cs: Poly(tuple(cs)))


def test_apply_T_examples():
    assert apply_T(Poly.constant(1)).is_zero()
    assert apply_T(binomial_power(2)) == Poly((0, 2, 2))
    for k in range(8):
        assert apply_T(Poly.monomial(k)) == Poly.monomial(k, k)


@given(polys, polys, st.fractions(max_denominator=10), st.fractions(max_denominator=10))
def test_apply_T_is_linear(p, q, a, b):
    assert apply_T(p.scale(a) + q.scale(b)) == apply_T(p).scale(a) + apply_T(q).scale(b)


def test_r_poly_examples():
    assert r_poly(3, 1) == Poly((0, 3, 6, 3))
    assert r_poly(3, 2) == Poly((0, 3, 12, 9))
    for m in range(1, 21):
        assert r_poly(m, 1) == shifted_power(m, 1).scale(m)


def test_moment_identity():
    for i in range(1, 9):
        for m in range(1, 26):
            p = r_poly(m, i)
            assert p == moment_poly(m, i)
            assert all(p.coefficient(k) == binomial(m, k) * k**i for k in range(m + 1))


@pytest.mark.parametrize("m, i", [(0, 1), (3, 0), (-1, 2)])
def test_r_poly_rejects_bad_parameters(m, i):
    with pytest.raises(CycleOpsInvalidParameters):
        r_poly(m, i)


def test_shifted_power():
    assert shifted_power(4, 2) == Poly((0, 0, 1, 2, 1))
    assert shifted_power(5, 0) == binomial_power(5)
    with pytest.raises(CycleOpsInvalidParameters):
        shifted_power(3, 4)


def test_valuation_examples():
    assert one_plus_x_valuation(binomial_power(4)) == 4
    assert one_plus_x_valuation(Poly.monomial(3)) == 0
    assert one_plus_x_valuation(Poly.constant(Fraction(2, 3))) == 0


def test_valuation_of_moment_polynomials():
    for m in range(1, 26):
        for i in range(1, m + 1):
            assert one_plus_x_valuation(r_poly(m, i)) == m - i


def test_valuation_of_zero_polynomial():
    with pytest.raises(CycleOpsInvalidInput):
        one_plus_x_valuation(Poly())
