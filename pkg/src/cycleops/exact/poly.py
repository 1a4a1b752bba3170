"""
Dense univariate polynomials over the rationals.

A polynomial is stored as its coefficient tuple, lowest power first, without trailing zeros;
the zero polynomial is the empty tuple. Values are immutable.

Classes:
    Poly: Dense polynomial with exact rational coefficients.
    PolyOp: Operations accepted by `poly_arith`.

Functions:
    poly_arith(p, q, op) -> Poly: Exact add/sub/mul.
"""

import dataclasses
import enum
from fractions import Fraction
from typing import Iterable, Iterator, Tuple, Union

from .. import CycleOpsInvalidParameters

Scalar = Union[int, Fraction]


def _normalize(coefficients: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    entries = [Fraction(c) for c in coefficients]
    size = len(entries)
    while size and entries[size - 1] == 0:
        size -= 1
    return tuple(entries[:size])


@dataclasses.dataclass(frozen=True)
class Poly:
    """
    Represents a dense polynomial over the rationals.

    Attributes:
        coefficients (Tuple[Fraction, ...]): Coefficient of x^k at index k, no trailing zeros.
    """

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _normalize(self.coefficients))

    @classmethod
    def monomial(cls, power: int, coefficient: Scalar = 1) -> "Poly":
        """
        Returns coefficient * x^power.
        """
        if power < 0:
            raise CycleOpsInvalidParameters(f"monomial power must be >= 0, got {power}")
        return cls((Fraction(0),) * power + (Fraction(coefficient),))

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        """
        Returns the constant polynomial `value`.
        """
        return cls((Fraction(value),))

    @property
    def degree(self) -> int:
        """
        Index of the leading coefficient; -1 stands for the degree of the zero polynomial.
        """
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        """
        Returns True for the zero polynomial.
        """
        return not self.coefficients

    def coefficient(self, power: int) -> Fraction:
        """
        Returns the coefficient of x^power (zero beyond the degree).
        """
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def coefficient_vector(self, length: int) -> Tuple[Fraction, ...]:
        """
        Returns the coefficients of x^0..x^(length-1), zero padded.
        """
        if self.degree >= length:
            raise CycleOpsInvalidParameters(f"degree {self.degree} does not fit a vector of length {length}")
        return self.coefficients + (Fraction(0),) * (length - len(self.coefficients))

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coefficients)

    def __add__(self, other: "Poly") -> "Poly":
        size = max(len(self.coefficients), len(other.coefficients))
        return Poly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Poly(tuple(product))

    def scale(self, factor: Scalar) -> "Poly":
        """
        Returns factor * self.
        """
        return Poly(tuple(Fraction(factor) * c for c in self.coefficients))

    def power(self, exponent: int) -> "Poly":
        """
        Returns self ** exponent by repeated squaring.
        """
        if exponent < 0:
            raise CycleOpsInvalidParameters(f"polynomial power must be >= 0, got {exponent}")
        result, base = Poly.constant(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def evaluate(self, x: Scalar) -> Fraction:
        """
        Horner evaluation at x.
        """
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def divide_linear(self, root: Scalar) -> Tuple["Poly", Fraction]:
        """
        Synthetic division by (x - root).

        Returns:
            Tuple[Poly, Fraction]: Quotient and remainder, with self = (x - root) * quotient + remainder.
        """
        if self.is_zero():
            return Poly(), Fraction(0)
        carry = Fraction(0)
        quotient = []
        for c in reversed(self.coefficients):
            carry = carry * root + c
            quotient.append(carry)
        remainder = quotient.pop()
        return Poly(tuple(reversed(quotient))), remainder

    def format_terms(self) -> str:
        """
        Renders the nonzero terms as space-separated "coeff*x^k", lowest power first; "0" for zero.
        """
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coefficients) if c != 0]
        return " ".join(terms) if terms else "0"


class PolyOp(str, enum.Enum):
    """
    Polynomial operations accepted by `poly_arith`.
    """

    ADD = "add"
    SUB = "sub"
    MUL = "mul"


def poly_arith(p: Poly, q: Poly, op: PolyOp) -> Poly:
    """
    Exact polynomial arithmetic; the result is in canonical form.
    """
    if op is PolyOp.ADD:
        return p + q
    if op is PolyOp.SUB:
        return p - q
    if op is PolyOp.MUL:
        return p * q
    raise CycleOpsInvalidParameters(f"Unknown polynomial operation {op!r}")
