"""
The operator T = x d/dx on polynomials, the moment polynomials r_i and the (1+x)-valuation.

Functions:
    apply_T(p) -> Poly: x * dp/dx.
    binomial_power(m) -> Poly: (1+x)^m.
    shifted_power(m, n) -> Poly: x^n (1+x)^(m-n).
    r_poly(m, i) -> Poly: T^i (1+x)^m by iterating T.
    moment_poly(m, i) -> Poly: sum_k C(m,k) k^i x^k from the coefficient formula.
    one_plus_x_valuation(p) -> int: Largest e with (1+x)^e dividing p.
"""

import logging

from .. import CycleOpsInvalidInput, CycleOpsInvalidParameters
from ..exact.combinatorics import binomial
from ..exact.poly import Poly

LOGGER = logging.getLogger(__name__)


def apply_T(p: Poly) -> Poly:  # pylint: disable=invalid-name
    """
    Returns x * dp/dx; the coefficient of x^k is multiplied by k.
    """
    return Poly(tuple(k * c for k, c in enumerate(p.coefficients)))


def binomial_power(m: int) -> Poly:
    """
    Returns (1+x)^m with its binomial coefficients.
    """
    if m < 0:
        raise CycleOpsInvalidParameters(f"(1+x)^m needs m >= 0, got m={m}")
    return Poly(tuple(binomial(m, k) for k in range(m + 1)))


def shifted_power(m: int, n: int) -> Poly:
    """
    Returns x^n (1+x)^(m-n), whose coefficient of x^k is C(m-n, k-n).
    """
    if not 0 <= n <= m:
        raise CycleOpsInvalidParameters(f"x^n (1+x)^(m-n) needs 0 <= n <= m, got m={m}, n={n}")
    return Poly(tuple(binomial(m - n, k - n) for k in range(m + 1)))


def r_poly(m: int, i: int) -> Poly:
    """
    Returns r_i(x) = T^i (1+x)^m, computed by applying T i times.

    Args:
        m (int): Exponent of (1+x), m >= 1.
        i (int): Number of applications of T, i >= 1.

    Raises:
        CycleOpsInvalidParameters: If m < 1 or i < 1.
    """
    if m < 1 or i < 1:
        raise CycleOpsInvalidParameters(f"r_poly needs m >= 1 and i >= 1, got m={m}, i={i}")
    p = binomial_power(m)
    for _ in range(i):
        p = apply_T(p)
    return p


def moment_poly(m: int, i: int) -> Poly:
    """
    Returns sum_{k=1}^{m} C(m,k) k^i x^k built from the coefficient formula.
    """
    if m < 1 or i < 1:
        raise CycleOpsInvalidParameters(f"moment_poly needs m >= 1 and i >= 1, got m={m}, i={i}")
    return Poly(tuple(binomial(m, k) * k**i for k in range(m + 1)))


def one_plus_x_valuation(p: Poly) -> int:
    """
    Returns the largest e >= 0 such that (1+x)^e divides p, by repeated synthetic division at x = -1.

    Raises:
        CycleOpsInvalidInput: If p is the zero polynomial.
    """
    if p.is_zero():
        raise CycleOpsInvalidInput("the (1+x)-valuation of the zero polynomial is undefined")
    valuation = 0
    quotient, remainder = p.divide_linear(-1)
    while remainder == 0:
        valuation += 1
        quotient, remainder = quotient.divide_linear(-1)
    LOGGER.debug("(1+x)-valuation of a degree %s polynomial is %s", p.degree, valuation)
    return valuation
