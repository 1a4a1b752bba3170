"""
Exact scalars, polynomials and combinatorial primitives shared by every other cycleops package.
"""

from .combinatorics import binomial, falling
from .poly import Poly, PolyOp, poly_arith
from .rational import (
    RationalOp,
    format_rational,
    is_canonical,
    parse_rational,
    primitive_vector,
    rat_arith,
)
