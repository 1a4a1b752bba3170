"""
Assembly of the binomial-moment constraint systems and their avoidance functionals.

A moment row of exponent e on C^m is (C(m,k) k^e)_{k=1..m}. The smash-nilpotence system holds
the first-moment row and the rows 2+i for every even i in 0..g-1; the Beauville-component
system holds the rows j in {1..g-2} minus {i}. The functionals are the projection coefficient
kappa and the projected component functional of exponent i+3.

Functions:
    moment_row(m, e) -> List[Fraction]
    s_exponents(g) -> List[int]
    build_s_system(g, m) -> ConstraintSystem
    kappa_functional(m, n) -> Functional
    p7_exponents(g, i, convention) -> List[int]
    build_p7_system(g, i, m, exponents) -> ConstraintSystem
    p7_functional(n, m, i) -> Functional
"""

import enum
from fractions import Fraction
from typing import List, Optional, Sequence

from .. import CycleOpsInvalidParameters
from ..exact.combinatorics import binomial
from ..models.linear import ConstraintRow, ConstraintSystem, Functional


class ExponentConvention(str, enum.Enum):
    """
    Readings of the exponent set of the Beauville-component system.

    LITERAL: exponents j in {1, ..., g-2} minus {i}.
    BEAUVILLE: the degree exponent 1 and 2+s for every component s in {0, ..., g-2} minus {i}.
    """

    LITERAL = "literal"
    BEAUVILLE = "beauville"


def moment_row(m: int, e: int) -> List[Fraction]:
    """
    Returns (C(m,k) k^e)_{k=1..m}.

    Raises:
        CycleOpsInvalidParameters: If m < 1 or e < 0.
    """
    if m < 1 or e < 0:
        raise CycleOpsInvalidParameters(f"moment_row needs m >= 1 and e >= 0, got m={m}, e={e}")
    return [Fraction(binomial(m, k) * k**e) for k in range(1, m + 1)]


def s_exponents(g: int) -> List[int]:
    """
    Returns [1] followed by 2+i for every even i in 0..g-1.
    """
    if g < 1:
        raise CycleOpsInvalidParameters(f"the genus must be >= 1, got g={g}")
    return [1] + [2 + i for i in range(0, g, 2)]


def _moment_system(m: int, exponents: Sequence[int], labels: Sequence[str]) -> ConstraintSystem:
    return ConstraintSystem(
        m=m,
        rows=[
            ConstraintRow(label=label, exponent=e, vector=moment_row(m, e)) for label, e in zip(labels, exponents)
        ],
    )


def build_s_system(g: int, m: int) -> ConstraintSystem:
    """
    Builds the first-moment row (label "S2:e=1") and the even-component rows ("S1:e=2+i").

    Args:
        g (int): Genus, g >= 1.
        m (int): Number of unknowns, m >= 1.
    """
    if m < 1:
        raise CycleOpsInvalidParameters(f"build_s_system needs m >= 1, got m={m}")
    exponents = s_exponents(g)
    labels = [f"{'S2' if e == 1 else 'S1'}:e={e}" for e in exponents]
    return _moment_system(m, exponents, labels)


def kappa_functional(m: int, n: int) -> Functional:
    """
    Returns kappa: q -> sum_{i=0}^{m-n} C(m-n, i) q_{i+n}; entry k is C(m-n, k-n).

    Raises:
        CycleOpsInvalidParameters: Unless 1 <= n < m.
    """
    if not 1 <= n < m:
        raise CycleOpsInvalidParameters(f"kappa needs 1 <= n < m, got m={m}, n={n}")
    return Functional(label=f"kappa:n={n}", vector=[Fraction(binomial(m - n, k - n)) for k in range(1, m + 1)])


def p7_exponents(g: int, i: int, convention: ExponentConvention = ExponentConvention.LITERAL) -> List[int]:
    """
    Returns the exponent set of the Beauville-component system under the given convention.

    Raises:
        CycleOpsInvalidParameters: If g < 3 or i < 0.
    """
    if g < 3 or i < 0:
        raise CycleOpsInvalidParameters(f"the component system needs g >= 3 and i >= 0, got g={g}, i={i}")
    if convention is ExponentConvention.LITERAL:
        return [j for j in range(1, g - 1) if j != i]
    return [1] + [2 + s for s in range(0, g - 1) if s != i]


def build_p7_system(g: int, i: int, m: int, exponents: Optional[Sequence[int]] = None) -> ConstraintSystem:
    """
    Builds the moment rows ("P7:e=j") of the Beauville-component system.

    Args:
        g (int): Genus, g >= 3.
        i (int): Index of the vanishing component, i >= 0.
        m (int): Number of unknowns, m >= 1.
        exponents (Optional[Sequence[int]]): Explicit exponent set; the literal set {1..g-2} minus {i}
            when omitted.
    """
    if m < 1:
        raise CycleOpsInvalidParameters(f"build_p7_system needs m >= 1, got m={m}")
    chosen = list(exponents) if exponents is not None else p7_exponents(g, i)
    if len(set(chosen)) != len(chosen):
        raise CycleOpsInvalidParameters(f"exponents must be distinct, got {chosen}")
    return _moment_system(m, chosen, [f"P7:e={e}" for e in chosen])


def p7_functional(n: int, m: int, i: int) -> Functional:
    """
    Returns q -> sum_{l=1}^{n} C(n,l) (sum_{j=0}^{m-n} C(m-n,j) q_{l+j}) l^(i+3).

    The coefficient of q_k is sum_l C(n,l) C(m-n, k-l) l^(i+3).

    Raises:
        CycleOpsInvalidParameters: Unless 1 <= n < m and i >= 0.
    """
    if not 1 <= n < m or i < 0:
        raise CycleOpsInvalidParameters(f"p7_functional needs 1 <= n < m and i >= 0, got n={n}, m={m}, i={i}")
    vector = [
        Fraction(sum(binomial(n, l) * binomial(m - n, k - l) * l ** (i + 3) for l in range(1, n + 1)))
        for k in range(1, m + 1)
    ]
    return Functional(label=f"p7:n={n},i={i}", vector=vector)
