"""
Executable checks of the independence and non-membership statements behind the construction.

Functions:
    independence_check(m, n, t) -> IndependenceReport
    reduced_vandermonde_rank(n) -> RankReport
    lemma2_membership(n, i, m) -> bool
    lemma2_rank(n, i, m) -> int
    lemma2_forced_zero(n, i, m) -> List[int]
    lemma2_find_m(n, i, m_max) -> Optional[int]
    beta_closed_forms(n, i, m, table) -> Tuple[Fraction, Fraction, Fraction]
    beta_block_residuals(n, i, m, table) -> Tuple[Fraction, Fraction, Fraction]
    beta_fourth_residual(n, i, m, table) -> Fraction
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .. import CycleOpsInvalidParameters
from ..exact.combinatorics import falling
from ..exact.poly import Poly
from ..models.linear import IndependenceReport, RankReport
from ..models.operators import CoeffTable
from ..operators.calculus import binomial_power, one_plus_x_valuation, r_poly, shifted_power
from .elimination import rank, span_coefficients

LOGGER = logging.getLogger(__name__)


def independence_check(m: int, n: int, t: int) -> IndependenceReport:
    """
    Computes the rank of {x^n (1+x)^(m-n), r_1, r_2, r_4, ..., r_2t} on C^(m+1).

    The family is independent when the rank is t + 2.

    Raises:
        CycleOpsInvalidParameters: Unless m > n >= 3, t >= 1 and 2t < m.
    """
    if not m > n >= 3 or t < 1 or 2 * t >= m:
        raise CycleOpsInvalidParameters(f"independence_check needs m > n >= 3, t >= 1, 2t < m, got m={m}, n={n}, t={t}")
    family: List[Poly] = [shifted_power(m, n), r_poly(m, 1)] + [r_poly(m, 2 * s) for s in range(1, t + 1)]
    report = IndependenceReport(
        m=m,
        n=n,
        t=t,
        rank=rank([p.coefficient_vector(m + 1) for p in family], width=m + 1),
        expected_rank=t + 2,
    )
    LOGGER.debug("independence m=%s n=%s t=%s: rank %s of %s", m, n, t, report.rank, report.expected_rank)
    return report


def reduced_vandermonde_rank(n: int) -> RankReport:
    """
    Rank of beta_1 k + sum_{s=1}^{n//2} beta_2s k^(2s) = 0 for k = 1..n-1, in the unknowns beta.

    Raises:
        CycleOpsInvalidParameters: If n < 2.
    """
    if n < 2:
        raise CycleOpsInvalidParameters(f"reduced_vandermonde_rank needs n >= 2, got {n}")
    exponents = [1] + [2 * s for s in range(1, n // 2 + 1)]
    rows = [[k**e for e in exponents] for k in range(1, n)]
    return RankReport(rows=len(rows), columns=len(exponents), rank=rank(rows, width=len(exponents)))


def _check_lemma2(n: int, i: int, m: int) -> None:
    if not 1 <= i < n - 3:
        raise CycleOpsInvalidParameters(f"the non-membership check needs 1 <= i < n-3, got n={n}, i={i}")
    if m <= n:
        raise CycleOpsInvalidParameters(f"the non-membership check needs m > n, got m={m}, n={n}")


def _lemma2_target(n: int, i: int, m: int) -> Poly:
    return binomial_power(m - n) * r_poly(n, i + 3)


def lemma2_membership(n: int, i: int, m: int) -> bool:
    """
    Decides whether (1+x)^(m-n) T^(i+3) (1+x)^n lies in the span of {r_j(m) : j in 1..n, j != i}.

    Raises:
        CycleOpsInvalidParameters: Unless 1 <= i < n-3 and m > n.
    """
    _check_lemma2(n, i, m)
    spanning = [r_poly(m, j).coefficient_vector(m + 1) for j in range(1, n + 1) if j != i]
    beta = span_coefficients(spanning, _lemma2_target(n, i, m).coefficient_vector(m + 1))
    return beta is not None


def lemma2_rank(n: int, i: int, m: int) -> int:
    """
    Rank of {r_j(m) : j in 1..n, j != i} together with the target; it exceeds n-1 exactly at a non-member.
    """
    _check_lemma2(n, i, m)
    family = [r_poly(m, j) for j in range(1, n + 1) if j != i] + [_lemma2_target(n, i, m)]
    return rank([p.coefficient_vector(m + 1) for p in family], width=m + 1)


def lemma2_forced_zero(n: int, i: int, m: int) -> List[int]:
    """
    Returns the j in {1..n} minus {i} whose r_j(m) has (1+x)-valuation below that of the target.

    Every representation of the target in the span has beta_j = 0 for these j.
    """
    _check_lemma2(n, i, m)
    target_valuation = one_plus_x_valuation(_lemma2_target(n, i, m))
    return [j for j in range(1, n + 1) if j != i and one_plus_x_valuation(r_poly(m, j)) < target_valuation]


def lemma2_find_m(n: int, i: int, m_max: int) -> Optional[int]:
    """
    Returns the smallest m in (n, m_max] at which the target is not in the span, or None.
    """
    for m in range(n + 1, m_max + 1):
        if not lemma2_membership(n, i, m):
            LOGGER.info("n=%s i=%s: first non-member at m=%s", n, i, m)
            return m
    LOGGER.info("n=%s i=%s: target in the span for every m <= %s", n, i, m_max)
    return None


def _check_block(n: int, i: int, m: int, table: CoeffTable) -> None:
    if i < 1 or not i + 3 <= n < m:
        raise CycleOpsInvalidParameters(f"the beta block needs i >= 1 and i+3 <= n < m, got n={n}, i={i}, m={m}")
    table.row(i + 3)


def beta_closed_forms(n: int, i: int, m: int, table: CoeffTable) -> Tuple[Fraction, Fraction, Fraction]:
    """
    Returns (beta_(i+3), beta_(i+2), beta_(i+1)) solving the top three equations of the block.

    With rho_k = n[k]/m[k]:
        beta_(i+3) = rho_(i+2)
        beta_(i+2) = c^(i+3)_(i+2) (rho_(i+1) - rho_(i+2))
        beta_(i+1) = c^(i+3)_(i+1) (rho_i - rho_(i+2)) - c^(i+2)_(i+1) beta_(i+2)

    Raises:
        CycleOpsInvalidParameters: Unless i >= 1 and i+3 <= n < m.
        CycleOpsOutOfRange: If the table does not cover row i+3.
    """
    _check_block(n, i, m, table)

    def rho(k: int) -> Fraction:
        return Fraction(falling(n, k), falling(m, k))

    top = rho(i + 2)
    middle = table.c(i + 3, i + 2) * (rho(i + 1) - top)
    bottom = table.c(i + 3, i + 1) * (rho(i) - top) - table.c(i + 2, i + 1) * middle
    return top, middle, bottom


def _block_residual(n: int, i: int, m: int, table: CoeffTable, betas: Dict[int, Fraction], j: int) -> Fraction:
    lhs = table.c(i + 3, j) * falling(n, j - 1)
    rhs = falling(m, j - 1) * sum((beta * table.c(k, j) for k, beta in betas.items()), Fraction(0))
    return lhs - rhs


def _closed_form_betas(n: int, i: int, m: int, table: CoeffTable) -> Dict[int, Fraction]:
    top, middle, bottom = beta_closed_forms(n, i, m, table)
    return {i + 3: top, i + 2: middle, i + 1: bottom}


def beta_block_residuals(n: int, i: int, m: int, table: CoeffTable) -> Tuple[Fraction, Fraction, Fraction]:
    """
    Residuals of the equations at x^j (1+x)^(m-j), j = i+3, i+2, i+1, after substituting the closed forms.
    """
    betas = _closed_form_betas(n, i, m, table)
    first, second, third = (_block_residual(n, i, m, table, betas, j) for j in (i + 3, i + 2, i + 1))
    return first, second, third


def beta_fourth_residual(n: int, i: int, m: int, table: CoeffTable) -> Fraction:
    """
    Residual of the equation at x^i (1+x)^(m-i) after substituting the closed forms.

    beta_i is absent from the span and every beta_j with j < i contributes nothing at x^i, so a
    nonzero residual rules out membership.
    """
    return _block_residual(n, i, m, table, _closed_form_betas(n, i, m, table), i)
