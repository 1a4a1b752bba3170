"""
This module defines the formal cycle types on C^m and on the Jacobian.

Classes:
    SymmetricCycle: sum_k a_k sum_{#T=k} Delta_T, stored as (a_1, ..., a_m).
    GeneralCycle: sum_T a_T Delta_T over nonempty subsets T of {1..m}, keyed by bitmask.
    BeauvilleVector: Coefficients (b_0, ..., b_{g-1}) in the basis alpha_0..alpha_{g-1}.
    ComponentStatus: Verdict on one Beauville component.
    ComponentVerdict: One component of a smash-nilpotence report.
    SmashReport: The smash-nilpotence verdict of a symmetric cycle.
"""

import enum
from fractions import Fraction
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .. import CycleOpsResourceLimit
from .rational import RationalStr
from .settings import CycleOpsSettings


class SymmetricCycle(BaseModel):
    """
    Represents a symmetric 1-cycle on C^m in the Delta_T basis.

    Attributes:
        m (int): Number of factors.
        coeffs (List[Fraction]): coeffs[k-1] multiplies every Delta_T with #T = k.
    """

    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=1, description="Number of factors of C^m")
    coeffs: List[RationalStr] = Field(description="a_k for k = 1..m")

    @model_validator(mode="after")
    def _check_length(self) -> "SymmetricCycle":
        if len(self.coeffs) != self.m:
            raise ValueError(f"a cycle on C^{self.m} needs {self.m} coefficients, got {len(self.coeffs)}")
        return self

    def is_zero(self) -> bool:
        """
        True for the zero cycle.
        """
        return all(a == 0 for a in self.coeffs)

    def a(self, k: int) -> Fraction:
        """
        Returns a_k, taking a_k = 0 outside 1 <= k <= m.
        """
        if not 1 <= k <= self.m:
            return Fraction(0)
        return self.coeffs[k - 1]


class GeneralCycle(BaseModel):
    """
    Represents sum_T a_T Delta_T over nonempty subsets T of {1..m}.

    Subset T is the bitmask with bit k-1 set for every k in T. Absent keys have coefficient 0.
    """

    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=1)
    coeffs: Dict[int, RationalStr] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_subsets(self) -> "GeneralCycle":
        cap = CycleOpsSettings().brute_subset_cap
        if self.m > cap:
            raise CycleOpsResourceLimit(f"a general cycle on C^{self.m} exceeds the subset cap m <= {cap}")
        full = (1 << self.m) - 1
        for subset in self.coeffs:
            if not 0 < subset <= full:
                raise ValueError(f"subset mask {subset} is not a nonempty subset of 1..{self.m}")
        return self

    def coefficient(self, subset: int) -> Fraction:
        """
        Returns a_T for the subset mask T.
        """
        return self.coeffs.get(subset, Fraction(0))


class BeauvilleVector(BaseModel):
    """
    Represents sum_s b_s alpha_s; component s scales by n^(2+s) under multiplication by n.
    """

    model_config = ConfigDict(frozen=True)

    g: int = Field(ge=1)
    comps: List[RationalStr]

    @model_validator(mode="after")
    def _check_length(self) -> "BeauvilleVector":
        if len(self.comps) != self.g:
            raise ValueError(f"genus {self.g} needs {self.g} components, got {len(self.comps)}")
        return self


class ComponentStatus(str, enum.Enum):
    """
    Verdict on one Beauville component.
    """

    ZERO = "zero"
    NONZERO = "nonzero"
    SKEW = "smash-nilpotent-by-skewness"


class ComponentVerdict(BaseModel):
    """
    Represents one component b_s of the Jacobian pushforward with its verdict.
    """

    model_config = ConfigDict(frozen=True)

    s: int
    value: RationalStr
    status: ComponentStatus


class SmashReport(BaseModel):
    """
    Represents the smash-nilpotence verdict of a symmetric cycle.

    Attributes:
        g (int): Genus.
        m (int): Number of factors.
        components (List[ComponentVerdict]): b_s for s = 0..g-1.
        degree (Fraction): The degree functional.
        certified (bool): True when every even component and the degree vanish.
    """

    model_config = ConfigDict(frozen=True)

    g: int
    m: int
    components: List[ComponentVerdict]
    degree: RationalStr
    certified: bool
