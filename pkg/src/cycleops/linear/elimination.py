"""
Exact Gaussian elimination over the rationals.

Rows are cleared of denominators and eliminated fraction-free on integers; after each
elimination step a row is divided by the gcd of its entries to keep intermediate entries small.
The pivot in each column is the candidate entry of largest bit length (first such row on ties).
Only the final back-substitution works on Fractions, to produce the reduced row echelon form,
which is unique, so the pivot choice never shows in the output.

Classes:
    EchelonForm: Reduced row echelon form with its pivot columns.

Functions:
    rref(vectors, width) -> EchelonForm
    rank(vectors, width) -> int
    nullspace(system) -> NullspaceBasis
    span_coefficients(vectors, target) -> Optional[List[Fraction]]
"""

import dataclasses
import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .. import CycleOpsInvalidInput
from ..exact.rational import primitive_vector
from ..models.linear import ConstraintSystem, NullspaceBasis

LOGGER = logging.getLogger(__name__)

Entry = Union[int, Fraction]


@dataclasses.dataclass(frozen=True)
class EchelonForm:
    """
    Reduced row echelon form of a list of vectors.

    Attributes:
        rows (Tuple[Tuple[Fraction, ...], ...]): Nonzero RREF rows, pivot entries equal to 1.
        pivots (Tuple[int, ...]): Pivot column of each row, increasing.
        width (int): Number of columns.
    """

    rows: Tuple[Tuple[Fraction, ...], ...]
    pivots: Tuple[int, ...]
    width: int

    @property
    def rank(self) -> int:
        """
        Number of pivots.
        """
        return len(self.pivots)

    @property
    def free_columns(self) -> Tuple[int, ...]:
        """
        Columns without a pivot, increasing.
        """
        pivot_set = set(self.pivots)
        return tuple(c for c in range(self.width) if c not in pivot_set)


def _primitive_integers(row: List[int]) -> List[int]:
    content = math.gcd(*row)
    if content > 1:
        return [x // content for x in row]
    return row


def _integer_row(vector: Sequence[Entry]) -> List[int]:
    entries = [Fraction(v) for v in vector]
    common_denominator = math.lcm(1, *(v.denominator for v in entries))
    return _primitive_integers([v.numerator * (common_denominator // v.denominator) for v in entries])


def _pivot_row(rows: List[List[int]], start: int, column: int) -> Optional[int]:
    best: Optional[int] = None
    best_bits = -1
    for index in range(start, len(rows)):
        entry = rows[index][column]
        if entry != 0 and abs(entry).bit_length() > best_bits:
            best, best_bits = index, abs(entry).bit_length()
    return best


def _resolve_width(vectors: Sequence[Sequence[Entry]], width: Optional[int]) -> int:
    if width is None:
        if not vectors:
            raise CycleOpsInvalidInput("the width of an empty family of vectors must be given")
        width = len(vectors[0])
    if any(len(v) != width for v in vectors):
        raise CycleOpsInvalidInput(f"every vector must have {width} entries")
    return width


def rref(vectors: Sequence[Sequence[Entry]], width: Optional[int] = None) -> EchelonForm:
    """
    Computes the reduced row echelon form of the given row vectors.

    Args:
        vectors (Sequence[Sequence[Entry]]): Row vectors of equal length.
        width (Optional[int]): Number of columns; required when vectors is empty.

    Returns:
        EchelonForm: The RREF rows and their pivot columns.
    """
    width = _resolve_width(vectors, width)
    rows = [_integer_row(v) for v in vectors]
    pivots: List[int] = []
    pivot_count = 0
    for column in range(width):
        if pivot_count == len(rows):
            break
        pivot = _pivot_row(rows, pivot_count, column)
        if pivot is None:
            continue
        rows[pivot_count], rows[pivot] = rows[pivot], rows[pivot_count]
        pivot_row = rows[pivot_count]
        a = pivot_row[column]
        for index in range(pivot_count + 1, len(rows)):
            b = rows[index][column]
            if b == 0:
                continue
            common = math.gcd(a, b)
            alpha, beta = a // common, b // common
            rows[index] = _primitive_integers([alpha * x - beta * y for x, y in zip(rows[index], pivot_row)])
        pivots.append(column)
        pivot_count += 1

    reduced: List[List[Fraction]] = []
    for row, column in zip(rows[:pivot_count], pivots):
        leading = row[column]
        reduced.append([Fraction(x, leading) for x in row])
    for index in reversed(range(pivot_count)):
        column = pivots[index]
        for above in range(index):
            factor = reduced[above][column]
            if factor != 0:
                reduced[above] = [x - factor * y for x, y in zip(reduced[above], reduced[index])]
    return EchelonForm(rows=tuple(tuple(r) for r in reduced), pivots=tuple(pivots), width=width)


def rank(vectors: Sequence[Sequence[Entry]], width: Optional[int] = None) -> int:
    """
    Returns the exact rank of the given row vectors.
    """
    return rref(vectors, width).rank


def nullspace(system: ConstraintSystem) -> NullspaceBasis:
    """
    Computes a basis of {q : row(q) = 0 for every row of the system}.

    One vector per free column, in increasing column order; each is scaled to coprime integers
    with a positive first nonzero entry.
    """
    echelon = rref(system.vectors(), width=system.m)
    vectors: List[List[Fraction]] = []
    for free in echelon.free_columns:
        vector = [Fraction(0)] * system.m
        vector[free] = Fraction(1)
        for row, column in zip(echelon.rows, echelon.pivots):
            vector[column] = -row[free]
        vectors.append(primitive_vector(vector))
    LOGGER.debug("Nullspace of %s rows in %s unknowns: rank %s", len(system.rows), system.m, echelon.rank)
    return NullspaceBasis(m=system.m, rank=echelon.rank, vectors=vectors)


def span_coefficients(vectors: Sequence[Sequence[Entry]], target: Sequence[Entry]) -> Optional[List[Fraction]]:
    """
    Solves sum_j beta_j vectors[j] = target exactly.

    Returns:
        Optional[List[Fraction]]: One solution with every free coefficient set to 0, or None when
            the target is not in the span.
    """
    length = len(target)
    if vectors:
        _resolve_width(vectors, length)
    count = len(vectors)
    augmented = [[vectors[j][k] for j in range(count)] + [target[k]] for k in range(length)]
    echelon = rref(augmented, width=count + 1)
    if count in echelon.pivots:
        return None
    beta = [Fraction(0)] * count
    for row, column in zip(echelon.rows, echelon.pivots):
        beta[column] = row[count]
    return beta
