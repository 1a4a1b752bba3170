from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from cycleops.exact import Poly, PolyOp, binomial, poly_arith

polys = st.lists(st.fractions(max_denominator=50), max_size=6).map(lambda cs: Poly(tuple(cs)))


def test_canonical_form_strips_trailing_zeros():
    p = Poly((Fraction(1), Fraction(0), Fraction(0)))
    assert p.coefficients == (1,)
    assert Poly((0, 0)).is_zero()
    assert Poly().degree == -1


def test_arith_examples():
    one_plus_x = Poly((1, 1))
    assert poly_arith(one_plus_x, one_plus_x, PolyOp.MUL) == Poly((1, 2, 1))
    assert poly_arith(one_plus_x, one_plus_x, PolyOp.SUB).is_zero()
    assert one_plus_x.power(3).coefficients == tuple(binomial(3, k) for k in range(4))


@given(polys, polys, polys)
def test_add_and_mul_are_associative(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)


@given(polys, polys)
def test_add_and_mul_are_commutative(p, q):
    assert poly_arith(p, q, PolyOp.ADD) == poly_arith(q, p, PolyOp.ADD)
    assert poly_arith(p, q, PolyOp.MUL) == poly_arith(q, p, PolyOp.MUL)


@given(polys, polys)
def test_degree_of_product(p, q):
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree


@given(polys, st.fractions(max_denominator=20))
def test_divide_linear(p, root):
    quotient, remainder = p.divide_linear(root)
    assert Poly((-root, 1)) * quotient + Poly.constant(remainder) == p
    assert remainder == p.evaluate(root)


def test_format_terms():
    assert Poly((0, Fraction(3), Fraction(-1, 2))).format_terms() == "3*x^1 -1/2*x^2"
    assert Poly().format_terms() == "0"


def test_coefficient_vector_pads():
    assert Poly.monomial(2, 5).coefficient_vector(4) == (0, 0, 5, 0)
