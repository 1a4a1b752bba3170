"""
This module defines the data models of the operator calculus.

Classes:
    CoeffTable: Triangular table of the expansion coefficients c^i_j.
    FactorizedTerm: One term coeff * x^j (1+x)^(m-j).
    FactorizedForm: A polynomial written in the basis x^j (1+x)^(m-j).
    ExpansionReport: A factorized form with its power-basis expansion.
"""

import dataclasses
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .. import CycleOpsOutOfRange
from .rational import RationalStr


@dataclasses.dataclass(frozen=True)
class CoeffTable:
    """
    Represents the triangular table c^i_j for 1 <= j <= i <= i_max.

    Attributes:
        rows (Tuple[Tuple[int, ...], ...]): rows[i-1][j-1] = c^i_j.
    """

    rows: Tuple[Tuple[int, ...], ...]

    @property
    def i_max(self) -> int:
        """
        Largest row index held by the table.
        """
        return len(self.rows)

    def row(self, i: int) -> Tuple[int, ...]:
        """
        Returns (c^i_1, ..., c^i_i).
        """
        if not 1 <= i <= self.i_max:
            raise CycleOpsOutOfRange(f"row {i} is not covered by a table of {self.i_max} rows")
        return self.rows[i - 1]

    def c(self, i: int, j: int) -> int:
        """
        Returns c^i_j, taking c^i_j = 0 outside 1 <= j <= i.
        """
        if not 1 <= j <= i:
            return 0
        return self.row(i)[j - 1]


class FactorizedTerm(BaseModel):
    """
    Represents coeff * x^j (1+x)^(m-j).
    """

    model_config = ConfigDict(frozen=True)

    j: int = Field(description="Power of x")
    coeff: RationalStr = Field(description="Coefficient of x^j (1+x)^(m-j)")


class FactorizedForm(BaseModel):
    """
    Represents sum_j coeff_j * x^j (1+x)^(m-j).

    Attributes:
        m (int): Total degree of every basis element.
        terms (List[FactorizedTerm]): Terms with strictly increasing j.
    """

    model_config = ConfigDict(frozen=True)

    m: int = Field(description="Total degree of every basis element")
    terms: List[FactorizedTerm] = Field(default_factory=list, description="Terms, strictly increasing in j")

    @model_validator(mode="after")
    def _check_indices(self) -> "FactorizedForm":
        indices = [term.j for term in self.terms]
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise ValueError(f"term indices must be strictly increasing, got {indices}")
        if any(j < 0 or j > self.m for j in indices):
            raise ValueError(f"term indices must lie in 0..{self.m}, got {indices}")
        return self

    def format_terms(self) -> str:
        """
        Renders the terms as space-separated "coeff*x^j*(1+x)^(m-j)".
        """
        parts = [f"{term.coeff}*x^{term.j}*(1+x)^{self.m - term.j}" for term in self.terms]
        return " ".join(parts) if parts else "0"


class ExpansionReport(BaseModel):
    """
    Represents T^i (1+x)^m in the factorized basis together with its power-basis expansion.
    """

    model_config = ConfigDict(frozen=True)

    m: int
    i: int
    form: FactorizedForm
    factorized: str = Field(description="Factorized form as text")
    expanded: str = Field(description="Power-basis expansion as space-separated coeff*x^k terms")
