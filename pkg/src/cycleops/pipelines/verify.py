"""
Independent re-verification of certificates.

Everything is recomputed from binomial coefficients and exact rationals; nothing here goes through
the elimination, the system builders or the cycle bookkeeping used to produce a certificate.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from ..exact.combinatorics import binomial
from ..models.certificate import Certificate, CertificateKind, VerificationResult

LOGGER = logging.getLogger(__name__)


def _fail(label: str, detail: str) -> VerificationResult:
    LOGGER.info("Verification failed at %s: %s", label, detail)
    return VerificationResult(passed=False, failed_check=label, detail=detail)


def _moment(m: int, e: int, q: Sequence[Fraction]) -> Fraction:
    return sum((binomial(m, k) * k**e * q[k - 1] for k in range(1, m + 1)), Fraction(0))


def _projected(m: int, n: int, q: Sequence[Fraction]) -> List[Fraction]:
    return [
        sum((binomial(m - n, j) * q[l + j - 1] for j in range(m - n + 1) if l + j <= m), Fraction(0))
        for l in range(1, n + 1)
    ]


def _expected_exponents(cert: Certificate) -> Optional[List[List[int]]]:
    g = cert.g
    if cert.kind is CertificateKind.THEOREM_MT:
        return [[1] + [2 + s for s in range(g) if s % 2 == 0]]
    if g < 3 or cert.i is None:
        return None
    i = cert.i
    return [
        [j for j in range(1, g - 1) if j != i],
        [1] + [2 + s for s in range(g - 1) if s != i],
    ]


def _row_label(cert: Certificate, e: int) -> str:
    if cert.kind is CertificateKind.THEOREM_MT:
        return f"{'S2' if e == 1 else 'S1'}:e={e}"
    return f"P7:e={e}"


def verify_certificate(cert: Certificate) -> VerificationResult:
    """
    Recomputes every check of the certificate and reports the first one that does not hold.

    Checks, in order: the range of m, the exponent set, every row residual (recorded and
    recomputed), nonvanishing of the recorded kappa or functional value, agreement of that value
    with its recomputation and, for theorem-mt, the projected coefficients.
    """
    g, n, m, q = cert.g, cert.n, cert.m, list(cert.q)
    if m <= n:
        return _fail("m-range", f"m={m} must exceed n={n}")
    if cert.kind is CertificateKind.THEOREM_MT and m <= 2 * g + 2:
        return _fail("m-range", f"m={m} must exceed 2g+2={2 * g + 2}")

    admissible = _expected_exponents(cert)
    if admissible is None or cert.exponents not in admissible:
        return _fail("exponents", f"exponents {cert.exponents} do not match g={g}, i={cert.i}")

    labels = [_row_label(cert, e) for e in cert.exponents]
    if [check.label for check in cert.checks] != labels:
        return _fail("checks", f"expected rows {labels}")
    for e, check in zip(cert.exponents, cert.checks):
        residual = _moment(m, e, q)
        if residual != 0 or check.residual != 0 or not check.passed:
            return _fail(check.label, f"residual {residual}, recorded {check.residual}")

    if cert.kind is CertificateKind.THEOREM_MT:
        projected = _projected(m, n, q)
        kappa = projected[-1]
        if cert.kappa is None or cert.kappa == 0:
            return _fail("nonvanishing", "kappa is zero")
        if cert.kappa != kappa:
            return _fail("kappa", f"recorded {cert.kappa}, recomputed {kappa}")
        expected = [a / kappa for a in projected]
        if cert.projected_coeffs != expected:
            return _fail("projected_coeffs", f"recomputed {[str(a) for a in expected]}")
    else:
        i = cert.i if cert.i is not None else 0
        value = sum(
            (
                binomial(n, l) * binomial(m - n, k - l) * l ** (i + 3) * q[k - 1]
                for k in range(1, m + 1)
                for l in range(1, n + 1)
            ),
            Fraction(0),
        )
        if cert.functional_value is None or cert.functional_value == 0:
            return _fail("nonvanishing", "functional value is zero")
        if cert.functional_value != value:
            return _fail("functional_value", f"recorded {cert.functional_value}, recomputed {value}")

    LOGGER.info("Verified %s certificate at g=%s, n=%s, m=%s", cert.kind.value, g, n, m)
    return VerificationResult(passed=True)
