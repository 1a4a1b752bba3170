"""
Bookkeeping of symmetric cycles on C^m: construction, projection to the first n factors,
passage to the symmetric product and expansion to subset coefficients.

Functions:
    cycle_from_q(m, q) -> SymmetricCycle
    project_pushforward(cycle, n) -> SymmetricCycle
    projected_relation(cycle, n) -> List[Fraction]
    symmetric_power_class(cycle) -> List[Fraction]
    pullback_symmetric_class(gamma, m) -> SymmetricCycle
    expand_symmetric(cycle, subset_cap) -> GeneralCycle
    collapse_symmetric(cycle) -> SymmetricCycle
"""

import logging
import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .. import CycleOpsInvalidInput, CycleOpsInvalidParameters, CycleOpsResourceLimit
from ..exact.combinatorics import binomial
from ..exact.rational import RationalLike
from ..models.cycles import GeneralCycle, SymmetricCycle
from ..models.settings import CycleOpsSettings

LOGGER = logging.getLogger(__name__)


def cycle_from_q(m: int, q: Sequence[RationalLike]) -> SymmetricCycle:
    """
    Wraps q as the cycle sum_k q_k sum_{#T=k} Delta_T on C^m.

    Raises:
        CycleOpsInvalidInput: If len(q) != m.
    """
    if len(q) != m:
        raise CycleOpsInvalidInput(f"a cycle on C^{m} needs {m} coefficients, got {len(q)}")
    return SymmetricCycle(m=m, coeffs=[Fraction(a) for a in q])


def project_pushforward(cycle: SymmetricCycle, n: int) -> SymmetricCycle:
    """
    Pushes the cycle forward along the projection C^m -> C^n onto the first n factors.

    a'_l = sum_{j=0}^{m-n} C(m-n, j) a_{l+j}; subsets missing {1..n} push forward to zero.

    Raises:
        CycleOpsInvalidParameters: Unless 1 <= n < m.
    """
    m = cycle.m
    if not 1 <= n < m:
        raise CycleOpsInvalidParameters(f"projection C^{m} -> C^{n} needs 1 <= n < m")
    coeffs = [
        sum((binomial(m - n, j) * cycle.a(l + j) for j in range(m - n + 1)), Fraction(0)) for l in range(1, n + 1)
    ]
    return SymmetricCycle(m=n, coeffs=coeffs)


def projected_relation(cycle: SymmetricCycle, n: int) -> List[Fraction]:
    """
    Returns a'_l / kappa for l = 1..n, where kappa = a'_n; the last entry is 1.

    Raises:
        CycleOpsInvalidParameters: If kappa = 0 or the projection is undefined.
    """
    projected = project_pushforward(cycle, n)
    kappa = projected.coeffs[-1]
    if kappa == 0:
        raise CycleOpsInvalidParameters(f"the projection to C^{n} has kappa = 0")
    return [a / kappa for a in projected.coeffs]


def symmetric_power_class(cycle: SymmetricCycle) -> List[Fraction]:
    """
    Returns gamma with gamma_k = a_k C(m, k), the coefficients of the pushed-forward class on S^m.
    """
    return [cycle.a(k) * binomial(cycle.m, k) for k in range(1, cycle.m + 1)]


def pullback_symmetric_class(gamma: Sequence[RationalLike], m: int) -> SymmetricCycle:
    """
    Pulls a class on S^m back to C^m: coefficient gamma_k k! (m-k)!.

    Pulling back the pushforward of a cycle multiplies it by m!.
    """
    if len(gamma) != m:
        raise CycleOpsInvalidInput(f"a class on S^{m} needs {m} coefficients, got {len(gamma)}")
    return SymmetricCycle(
        m=m,
        coeffs=[Fraction(value) * math.factorial(k) * math.factorial(m - k) for k, value in enumerate(gamma, start=1)],
    )


def check_subset_cap(m: int, subset_cap: Optional[int]) -> None:
    """
    Raises CycleOpsResourceLimit when an enumeration over the subsets of {1..m} exceeds the cap.

    The cap defaults to CycleOpsSettings().brute_subset_cap.
    """
    cap = CycleOpsSettings().brute_subset_cap if subset_cap is None else subset_cap
    if m > cap:
        raise CycleOpsResourceLimit(f"enumerating the subsets of 1..{m} exceeds the cap m <= {cap}")


def expand_symmetric(cycle: SymmetricCycle, subset_cap: Optional[int] = None) -> GeneralCycle:
    """
    Writes out a_{#T} for every nonempty subset T of {1..m}, omitting zero coefficients.

    Raises:
        CycleOpsResourceLimit: If m exceeds the subset cap.
    """
    check_subset_cap(cycle.m, subset_cap)
    coeffs: Dict[int, Fraction] = {}
    for subset in range(1, 1 << cycle.m):
        value = cycle.a(subset.bit_count())
        if value != 0:
            coeffs[subset] = value
    return GeneralCycle(m=cycle.m, coeffs=coeffs)


def collapse_symmetric(cycle: GeneralCycle) -> SymmetricCycle:
    """
    Recovers the symmetric form of a cycle whose coefficient depends only on #T.

    Raises:
        CycleOpsInvalidInput: If two subsets of the same size carry different coefficients.
    """
    coeffs: List[Optional[Fraction]] = [None] * cycle.m
    counts = [0] * cycle.m
    for subset, value in cycle.coeffs.items():
        if value == 0:
            continue
        size = subset.bit_count()
        if coeffs[size - 1] is not None and coeffs[size - 1] != value:
            raise CycleOpsInvalidInput(f"subsets of size {size} carry different coefficients")
        coeffs[size - 1] = value
        counts[size - 1] += 1
    for size, count in enumerate(counts, start=1):
        if count not in (0, binomial(cycle.m, size)):
            raise CycleOpsInvalidInput(f"only {count} of the {binomial(cycle.m, size)} subsets of size {size} are set")
    return SymmetricCycle(m=cycle.m, coeffs=[Fraction(0) if a is None else a for a in coeffs])
