"""
This module defines the certificate emitted by the pipelines and the records they stream.

Classes:
    CertificateKind: The two constructions a certificate can witness.
    CheckResult: The residual of one constraint row at the certified q.
    Certificate: A q-vector with everything needed to re-verify it exactly.
    SweepFailure: Report of a sweep that found no certificate within its bound.
    VerificationResult: Outcome of re-verifying a certificate.
    ScanRecord: One record of an independence or non-membership scan.
"""

import enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .. import __version__
from .rational import RationalStr


class CertificateKind(str, enum.Enum):
    """
    THEOREM_MT: a smash-nilpotent cycle whose projection to C^n has nonzero leading coefficient.
    PROP_P7: a q-vector killing the chosen moment rows with nonzero component functional.
    """

    THEOREM_MT = "theorem-mt"
    PROP_P7 = "prop-p7"


class CheckResult(BaseModel):
    """
    Represents the residual of one labeled constraint row.
    """

    model_config = ConfigDict(frozen=True)

    label: str
    residual: RationalStr
    passed: bool


class Certificate(BaseModel):
    """
    Represents a certified q-vector.

    Attributes:
        kind (CertificateKind): The construction witnessed.
        g (int): Genus.
        n (int): Dimension of the target product C^n.
        m (int): Number of factors of C^m carrying the cycle.
        i (Optional[int]): Beauville index, prop-p7 only.
        exponents (List[int]): Moment exponents of the rows the certificate was checked against.
        q (List[Fraction]): Coefficients q_1..q_m.
        kappa (Optional[Fraction]): Leading projected coefficient, theorem-mt only.
        functional_value (Optional[Fraction]): Component functional at q, prop-p7 only.
        projected_coeffs (Optional[List[Fraction]]): a'_l / kappa for l = 1..n, theorem-mt only.
        checks (List[CheckResult]): One residual per row.
        tool_version (str): Version of cycleops that emitted the certificate.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: CertificateKind
    g: int = Field(ge=1)
    n: int = Field(ge=1)
    m: int = Field(ge=1)
    i: Optional[int] = Field(default=None, ge=0)
    exponents: List[int]
    q: List[RationalStr]
    kappa: Optional[RationalStr] = None
    functional_value: Optional[RationalStr] = None
    projected_coeffs: Optional[List[RationalStr]] = None
    checks: List[CheckResult]
    tool_version: str = __version__

    @model_validator(mode="after")
    def _check_shape(self) -> "Certificate":
        if len(self.q) != self.m:
            raise ValueError(f"q must have m={self.m} entries, got {len(self.q)}")
        if self.kind is CertificateKind.THEOREM_MT:
            if self.kappa is None or self.projected_coeffs is None:
                raise ValueError("a theorem-mt certificate needs kappa and projected_coeffs")
            if len(self.projected_coeffs) != self.n:
                raise ValueError(f"projected_coeffs must have n={self.n} entries")
        elif self.functional_value is None or self.i is None:
            raise ValueError("a prop-p7 certificate needs i and functional_value")
        return self


class SweepFailure(BaseModel):
    """
    Represents a sweep over m that found no certificate.
    """

    model_config = ConfigDict(frozen=True)

    kind: CertificateKind
    g: int
    n: int
    i: Optional[int] = None
    m_min: int
    m_max: int
    reason: str


class VerificationResult(BaseModel):
    """
    Represents the outcome of re-verifying a certificate.

    Attributes:
        passed (bool): True when every check holds.
        failed_check (Optional[str]): Label of the first violated check.
        detail (str): What was found at the failed check.
    """

    model_config = ConfigDict(frozen=True)

    passed: bool
    failed_check: Optional[str] = None
    detail: str = ""


class ScanRecord(BaseModel):
    """
    Represents one point of a scan.
    """

    model_config = ConfigDict(frozen=True)

    params: Dict[str, int]
    verdict: str
    rank: int
