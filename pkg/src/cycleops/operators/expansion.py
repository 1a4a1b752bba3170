"""
The factorized expansion of T^i (1+x)^m in the basis x^j (1+x)^(m-j).

T^i (1+x)^m = sum_{j=1}^{i} c^i_j m[j-1] x^j (1+x)^(m-j), with c^1_1 = 1 and
c^{i+1}_j = j c^i_j + c^i_{j-1}. The table c^i_j does not depend on m, so it is built once and
shared by every m.

Functions:
    coeff_table(i_max) -> CoeffTable: The table c^i_j for i <= i_max.
    lemma1_expand(m, i, table) -> FactorizedForm: The factorized form of T^i (1+x)^m.
    expand_factorized(form) -> Poly: Expand a factorized form in the power basis.
    factorized_coordinates(p, m) -> FactorizedForm: Rewrite p in the basis x^j (1+x)^(m-j).
"""

import logging
from fractions import Fraction
from typing import List, Tuple

from .. import CycleOpsError, CycleOpsInvalidInput, CycleOpsInvalidParameters, CycleOpsOutOfRange
from ..exact.combinatorics import falling
from ..exact.poly import Poly
from ..models.operators import CoeffTable, FactorizedForm, FactorizedTerm
from .calculus import r_poly, shifted_power

LOGGER = logging.getLogger(__name__)


def coeff_table(i_max: int) -> CoeffTable:
    """
    Builds c^i_j for 1 <= j <= i <= i_max from c^1_1 = 1 and c^{i+1}_j = j c^i_j + c^i_{j-1}.

    Raises:
        CycleOpsInvalidParameters: If i_max < 1.
    """
    if i_max < 1:
        raise CycleOpsInvalidParameters(f"coeff_table needs i_max >= 1, got {i_max}")
    rows: List[Tuple[int, ...]] = [(1,)]
    for _ in range(1, i_max):
        previous = rows[-1]
        size = len(previous) + 1
        row = tuple(
            j * (previous[j - 1] if j <= len(previous) else 0) + (previous[j - 2] if j >= 2 else 0)
            for j in range(1, size + 1)
        )
        rows.append(row)
    return CoeffTable(rows=tuple(rows))


def expand_factorized(form: FactorizedForm) -> Poly:
    """
    Expands sum_j coeff_j x^j (1+x)^(m-j) in the power basis.
    """
    result = Poly()
    for term in form.terms:
        result = result + shifted_power(form.m, term.j).scale(term.coeff)
    return result


def lemma1_expand(m: int, i: int, table: CoeffTable) -> FactorizedForm:
    """
    Returns the factorized form sum_{j=1}^{i} c^i_j m[j-1] x^j (1+x)^(m-j) of T^i (1+x)^m.

    Args:
        m (int): Exponent of (1+x).
        i (int): Power of T, 1 <= i <= m.
        table (CoeffTable): Coefficient table covering row i.

    Raises:
        CycleOpsOutOfRange: If i < 1, i > m, or the table does not cover row i.
    """
    if i < 1 or i > m:
        raise CycleOpsOutOfRange(f"lemma1_expand needs 1 <= i <= m, got m={m}, i={i}")
    row = table.row(i)
    form = FactorizedForm(
        m=m,
        terms=[FactorizedTerm(j=j, coeff=Fraction(row[j - 1] * falling(m, j - 1))) for j in range(1, i + 1)],
    )
    if __debug__:
        if expand_factorized(form) != r_poly(m, i):
            raise CycleOpsError(f"factorized form of T^{i}(1+x)^{m} disagrees with T-iteration")
    return form


def factorized_coordinates(p: Poly, m: int) -> FactorizedForm:
    """
    Rewrites p, of degree <= m, in the basis x^j (1+x)^(m-j), j = 0..m.

    The basis is triangular in the power basis (x^j (1+x)^(m-j) starts at x^j with coefficient 1),
    so coordinates are peeled off from the lowest power upward.

    Raises:
        CycleOpsInvalidInput: If deg p > m.
    """
    if p.degree > m:
        raise CycleOpsInvalidInput(f"degree {p.degree} exceeds m={m}")
    remainder = p
    terms: List[FactorizedTerm] = []
    for j in range(m + 1):
        coordinate = remainder.coefficient(j)
        if coordinate != 0:
            terms.append(FactorizedTerm(j=j, coeff=coordinate))
            remainder = remainder - shifted_power(m, j).scale(coordinate)
    if not remainder.is_zero():
        raise CycleOpsInvalidInput("triangular substitution left a nonzero remainder")
    LOGGER.debug("Rewrote a degree %s polynomial with %s factorized terms", p.degree, len(terms))
    return FactorizedForm(m=m, terms=terms)
