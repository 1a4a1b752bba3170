"""
Certificate of a smash-nilpotent cycle on C^m whose projection to C^n keeps a nonzero leading term.

For m > max(n, 2g+2) the pipeline solves the first-moment and even-component rows while avoiding
the kernel of kappa, starting at the smallest admissible m and stepping upward without gaps.
"""

import logging
from fractions import Fraction
from typing import Optional, Tuple, Union

from .. import CycleOpsInvalidParameters, CycleOpsUnsupported, __version__
from ..cycles.symmetric import cycle_from_q, projected_relation
from ..linear.avoidance import solve_with_avoidance
from ..linear.systems import build_s_system, kappa_functional
from ..models.certificate import Certificate, CertificateKind, CheckResult, SweepFailure
from .sweep import ordered_sweep

LOGGER = logging.getLogger(__name__)


def first_admissible_m(g: int, n: int) -> int:
    """
    Returns max(n+1, 2g+3), the smallest m with m > n and m > 2g+2.
    """
    return max(n + 1, 2 * g + 3)


def _solve_point(point: Tuple[int, int, int]) -> Optional[Tuple[Fraction, ...]]:
    g, n, m = point
    return solve_with_avoidance(build_s_system(g, m), kappa_functional(m, n))


def build_theorem_certificate(g: int, n: int, m: int, q: Tuple[Fraction, ...]) -> Certificate:
    """
    Packages a solution q at (g, n, m) with its row residuals, kappa and projected relation.
    """
    system = build_s_system(g, m)
    checks = []
    for row in system.rows:
        residual = row.evaluate(q)
        checks.append(CheckResult(label=row.label, residual=residual, passed=residual == 0))
    cycle = cycle_from_q(m, q)
    return Certificate(
        kind=CertificateKind.THEOREM_MT,
        g=g,
        n=n,
        m=m,
        exponents=[row.exponent for row in system.rows if row.exponent is not None],
        q=list(q),
        kappa=kappa_functional(m, n).evaluate(q),
        projected_coeffs=projected_relation(cycle, n),
        checks=checks,
        tool_version=__version__,
    )


def certify_theorem_mt(
    g: int, n: int, m_override: Optional[int] = None, m_max: int = 400, workers: int = 1
) -> Union[Certificate, SweepFailure]:
    """
    Finds the smallest admissible m with a solution and returns its certificate.

    Args:
        g (int): Genus, g >= 1.
        n (int): Dimension of the target product, n >= 3.
        m_override (Optional[int]): Try exactly this m instead of sweeping.
        m_max (int): Last m of the sweep.
        workers (int): Worker processes of the sweep.

    Returns:
        Union[Certificate, SweepFailure]: The certificate, or a report of the exhausted sweep.

    Raises:
        CycleOpsUnsupported: If n < 3; smaller n are covered by the surface case.
        CycleOpsInvalidParameters: If g < 1 or the overridden m is not admissible.
    """
    if n < 3:
        raise CycleOpsUnsupported(f"n={n}: the construction needs n >= 3, n <= 2 is the surface case")
    if g < 1:
        raise CycleOpsInvalidParameters(f"the genus must be >= 1, got g={g}")
    m_min = first_admissible_m(g, n)
    if m_override is not None:
        if m_override < m_min:
            raise CycleOpsInvalidParameters(f"m={m_override} must satisfy m > n={n} and m > 2g+2={2 * g + 2}")
        m_min = m_max = m_override

    LOGGER.info("Sweeping m from %s to %s for g=%s, n=%s", m_min, m_max, g, n)
    points = ((g, n, m) for m in range(m_min, m_max + 1))
    for (_, _, m), q in ordered_sweep(_solve_point, points, workers):
        if q is None:
            LOGGER.debug("m=%s: kappa vanishes on the solution space", m)
            continue
        LOGGER.info("Certified g=%s, n=%s at m=%s", g, n, m)
        return build_theorem_certificate(g, n, m, q)

    LOGGER.warning("No certificate for g=%s, n=%s with m <= %s", g, n, m_max)
    return SweepFailure(
        kind=CertificateKind.THEOREM_MT,
        g=g,
        n=n,
        m_min=m_min,
        m_max=m_max,
        reason="kappa vanishes on the solution space for every m in range",
    )
