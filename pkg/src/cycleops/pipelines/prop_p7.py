"""
Certificate that the component functional of exponent i+3 survives on the solutions of the chosen moment rows.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .. import CycleOpsInvalidParameters, __version__
from ..linear.avoidance import solve_with_avoidance
from ..linear.systems import ExponentConvention, build_p7_system, p7_exponents, p7_functional
from ..models.certificate import Certificate, CertificateKind, CheckResult, SweepFailure
from .sweep import ordered_sweep

LOGGER = logging.getLogger(__name__)


def _solve_point(point: Tuple[int, int, int, int, Tuple[int, ...]]) -> Optional[Tuple[Fraction, ...]]:
    g, n, i, m, exponents = point
    return solve_with_avoidance(build_p7_system(g, i, m, exponents), p7_functional(n, m, i))


def certify_prop_p7(
    g: int,
    n: int,
    i: int,
    m_max: int = 200,
    convention: ExponentConvention = ExponentConvention.LITERAL,
    workers: int = 1,
) -> Union[Certificate, SweepFailure]:
    """
    Sweeps m from n+1 to m_max and certifies the first m at which the functional survives.

    Raises:
        CycleOpsInvalidParameters: If g < 3, i < 0, n < 1 or n >= m_max.
    """
    exponents: List[int] = p7_exponents(g, i, convention)
    if n < 1 or n >= m_max:
        raise CycleOpsInvalidParameters(f"the sweep needs 1 <= n < m_max, got n={n}, m_max={m_max}")

    LOGGER.info("Sweeping m from %s to %s for g=%s, n=%s, i=%s, exponents %s", n + 1, m_max, g, n, i, exponents)
    points = ((g, n, i, m, tuple(exponents)) for m in range(n + 1, m_max + 1))
    for (_, _, _, m, _), q in ordered_sweep(_solve_point, points, workers):
        if q is None:
            continue
        checks = []
        for row in build_p7_system(g, i, m, exponents).rows:
            residual = row.evaluate(q)
            checks.append(CheckResult(label=row.label, residual=residual, passed=residual == 0))
        LOGGER.info("Certified g=%s, n=%s, i=%s at m=%s", g, n, i, m)
        return Certificate(
            kind=CertificateKind.PROP_P7,
            g=g,
            n=n,
            m=m,
            i=i,
            exponents=exponents,
            q=list(q),
            functional_value=p7_functional(n, m, i).evaluate(q),
            checks=checks,
            tool_version=__version__,
        )

    LOGGER.warning("No certificate for g=%s, n=%s, i=%s with m <= %s", g, n, i, m_max)
    return SweepFailure(
        kind=CertificateKind.PROP_P7,
        g=g,
        n=n,
        i=i,
        m_min=n + 1,
        m_max=m_max,
        reason="the functional vanishes on the solution space for every m in range",
    )
