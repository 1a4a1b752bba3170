"""
Pushforward of symmetric cycles to the Jacobian, the degree functional and the smash-nilpotence verdict.

A cycle is smash nilpotent on the Jacobian when every even Beauville component of its pushforward
vanishes and its degree is zero. Odd components are smash nilpotent by skewness.
"""

import logging
import math
from fractions import Fraction

from .. import CycleOpsInvalidParameters
from ..exact.combinatorics import binomial
from ..models.cycles import BeauvilleVector, ComponentStatus, ComponentVerdict, SmashReport, SymmetricCycle

LOGGER = logging.getLogger(__name__)


def jacobian_pushforward(cycle: SymmetricCycle, g: int) -> BeauvilleVector:
    """
    Returns b_s = sum_k a_k C(m, k) k^(2+s) for s = 0..g-1.
    """
    if g < 1:
        raise CycleOpsInvalidParameters(f"the genus must be >= 1, got g={g}")
    m = cycle.m
    comps = [
        sum((cycle.a(k) * binomial(m, k) * k ** (2 + s) for k in range(1, m + 1)), Fraction(0)) for s in range(g)
    ]
    return BeauvilleVector(g=g, comps=comps)


def degree_functional(cycle: SymmetricCycle) -> Fraction:
    """
    Returns (m-1)! sum_k a_k C(m, k) k.
    """
    m = cycle.m
    return math.factorial(m - 1) * sum((cycle.a(k) * binomial(m, k) * k for k in range(1, m + 1)), Fraction(0))


def fstar_multiplicity(m: int, i: int) -> int:
    """
    Returns i! (m-i)!, the multiplicity of sum_{#T=i} Delta_T in the pullback of the diagonal class.

    Raises:
        CycleOpsInvalidParameters: Unless 1 <= i <= m.
    """
    if not 1 <= i <= m:
        raise CycleOpsInvalidParameters(f"fstar_multiplicity needs 1 <= i <= m, got m={m}, i={i}")
    return math.factorial(i) * math.factorial(m - i)


def smash_certificate(cycle: SymmetricCycle, g: int) -> SmashReport:
    """
    Reports every Beauville component with its verdict and the degree.

    The cycle is certified when b_s = 0 for every even s and the degree is 0.
    """
    components = []
    for s, value in enumerate(jacobian_pushforward(cycle, g).comps):
        if s % 2 == 1 and value != 0:
            status = ComponentStatus.SKEW
        elif value == 0:
            status = ComponentStatus.ZERO
        else:
            status = ComponentStatus.NONZERO
        components.append(ComponentVerdict(s=s, value=value, status=status))
    degree = degree_functional(cycle)
    certified = degree == 0 and all(c.status is not ComponentStatus.NONZERO for c in components)
    LOGGER.debug("Smash verdict on C^%s, g=%s: %s", cycle.m, g, certified)
    return SmashReport(g=g, m=cycle.m, components=components, degree=degree, certified=certified)
