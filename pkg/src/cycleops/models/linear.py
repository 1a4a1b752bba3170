"""
This module defines the data models of the exact linear algebra layer.

Classes:
    ConstraintRow: A labeled linear form on the unknowns q_1..q_m.
    ConstraintSystem: A homogeneous system of labeled rows.
    Functional: A labeled linear functional that must not vanish on the solution.
    NullspaceBasis: A normalized basis of the solution space of a system.
    IndependenceReport: Outcome of a rank computation over a family of polynomials.
    RankReport: Rank of a rectangular system against its column count.
"""

from fractions import Fraction
from typing import List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .. import CycleOpsInvalidInput
from .rational import RationalStr


def dot(vector: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    """
    Exact dot product of two vectors of equal length.
    """
    if len(vector) != len(q):
        raise CycleOpsInvalidInput(f"cannot pair a vector of length {len(vector)} with one of length {len(q)}")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(vector, q)), Fraction(0))


class ConstraintRow(BaseModel):
    """
    Represents one labeled row of a constraint system.

    Attributes:
        label (str): Unique label of the row within its system.
        exponent (Optional[int]): Moment exponent e when the row is C(m,k) k^e, None for a custom row.
        vector (List[Fraction]): Entry k-1 multiplies q_k.
    """

    model_config = ConfigDict(frozen=True)

    label: str = Field(description="Unique label of the row")
    exponent: Optional[int] = Field(default=None, description="Moment exponent, None for custom rows")
    vector: List[RationalStr] = Field(description="Row entries, entry k-1 multiplies q_k")

    def evaluate(self, q: Sequence[Fraction]) -> Fraction:
        """
        Returns the row applied to q.
        """
        return dot(self.vector, q)


class ConstraintSystem(BaseModel):
    """
    Represents a homogeneous linear system on the unknowns q_1..q_m.

    Attributes:
        m (int): Number of unknowns.
        rows (List[ConstraintRow]): Rows with unique labels, each of length m.
    """

    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=1, description="Number of unknowns q_1..q_m")
    rows: List[ConstraintRow] = Field(default_factory=list, description="Labeled rows")

    @model_validator(mode="after")
    def _check_rows(self) -> "ConstraintSystem":
        labels = [row.label for row in self.rows]
        if len(set(labels)) != len(labels):
            raise ValueError(f"row labels must be unique, got {labels}")
        for row in self.rows:
            if len(row.vector) != self.m:
                raise ValueError(f"row {row.label} has {len(row.vector)} entries, expected {self.m}")
        return self

    @property
    def exponents(self) -> List[Optional[int]]:
        """
        Moment exponents of the rows, in row order.
        """
        return [row.exponent for row in self.rows]

    def vectors(self) -> List[List[Fraction]]:
        """
        Row vectors in row order.
        """
        return [list(row.vector) for row in self.rows]


class Functional(BaseModel):
    """
    Represents a labeled linear functional on q_1..q_m.
    """

    model_config = ConfigDict(frozen=True)

    label: str = Field(description="Label of the functional")
    vector: List[RationalStr] = Field(description="Entry k-1 multiplies q_k")

    @property
    def m(self) -> int:
        """
        Number of unknowns the functional acts on.
        """
        return len(self.vector)

    def evaluate(self, q: Sequence[Fraction]) -> Fraction:
        """
        Returns the functional applied to q.
        """
        return dot(self.vector, q)


class NullspaceBasis(BaseModel):
    """
    Represents a basis of the solution space of a constraint system.

    Attributes:
        m (int): Length of every basis vector.
        rank (int): Rank of the system.
        vectors (List[List[Fraction]]): Coprime integer vectors with positive first nonzero entry,
            one per free column in increasing column order.
    """

    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=1)
    rank: int = Field(ge=0)
    vectors: List[List[RationalStr]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_dimension(self) -> "NullspaceBasis":
        if len(self.vectors) != self.m - self.rank:
            raise ValueError(f"expected {self.m - self.rank} basis vectors, got {len(self.vectors)}")
        if any(len(vector) != self.m for vector in self.vectors):
            raise ValueError(f"every basis vector must have {self.m} entries")
        return self

    @property
    def dimension(self) -> int:
        """
        Dimension of the solution space, m - rank.
        """
        return len(self.vectors)


class IndependenceReport(BaseModel):
    """
    Represents the rank of {x^n (1+x)^(m-n), r_1, r_2, r_4, ..., r_2t}.
    """

    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    t: int
    rank: int
    expected_rank: int

    @property
    def independent(self) -> bool:
        """
        True when the family has full rank t + 2.
        """
        return self.rank == self.expected_rank


class RankReport(BaseModel):
    """
    Represents the rank of a rectangular system against its column count.
    """

    model_config = ConfigDict(frozen=True)

    rows: int = Field(ge=0)
    columns: int = Field(ge=0)
    rank: int = Field(ge=0)

    @property
    def full_column_rank(self) -> bool:
        """
        True when the columns are linearly independent.
        """
        return self.rank == self.columns
