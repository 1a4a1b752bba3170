"""
Binomial coefficients and falling factorials on arbitrary-precision integers.

The falling factorial follows the convention m[j] = m(m-1)...(m-j), a product of j+1 factors,
so m[0] = m.
"""

import math

from .. import CycleOpsInvalidParameters


def binomial(n: int, k: int) -> int:
    """
    Returns C(n, k), which is 0 when k < 0 or k > n.

    Args:
        n (int): Nonnegative size of the set.
        k (int): Size of the subsets.
    """
    if n < 0:
        raise CycleOpsInvalidParameters(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling(m: int, j: int) -> int:
    """
    Returns m[j] = m(m-1)...(m-j), the product of the j+1 factors m, m-1, ..., m-j.

    Raises:
        CycleOpsInvalidParameters: If j < 0; m[-1] is never needed and is left undefined.
    """
    if j < 0:
        raise CycleOpsInvalidParameters(f"falling factorial needs j >= 0, got j={j}")
    product = 1
    for factor in range(m - j, m + 1):
        product *= factor
    return product
