"""
Exact rational scalars.

Every coefficient handled by cycleops is a `fractions.Fraction`, which keeps numerator and
denominator coprime with a positive denominator (zero is 0/1). This module adds the checked
arithmetic entry point, the "num/den" text form used in every JSON document, and integer
normalization of rational vectors.

Functions:
    rat_arith(a, b, op) -> Fraction: Exact add/sub/mul/div.
    parse_rational(text, location) -> Fraction: Parse the "num/den" text form.
    format_rational(value) -> str: Render the "num/den" text form.
    is_canonical(value) -> bool: Check the canonical-form invariants.
    primitive_vector(vector) -> List[Fraction]: Scale to coprime integers with positive leading entry.
"""

import enum
import math
import re
from fractions import Fraction
from typing import List, Sequence, Union

from .. import CycleOpsInvalidOperand, CycleOpsParseError

RationalLike = Union[int, Fraction]

_RATIONAL_PATTERN = re.compile(r"-?\d+(/\d+)?")


class RationalOp(str, enum.Enum):
    """
    Arithmetic operations accepted by `rat_arith`.
    """

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def rat_arith(a: RationalLike, b: RationalLike, op: RationalOp) -> Fraction:
    """
    Exact arithmetic on two rationals.

    Args:
        a (RationalLike): Left operand.
        b (RationalLike): Right operand.
        op (RationalOp): Operation to apply.

    Raises:
        CycleOpsInvalidOperand: If op is DIV and b is zero.

    Returns:
        Fraction: The result in canonical form.
    """
    left, right = Fraction(a), Fraction(b)
    if op is RationalOp.ADD:
        return left + right
    if op is RationalOp.SUB:
        return left - right
    if op is RationalOp.MUL:
        return left * right
    if op is RationalOp.DIV:
        if right == 0:
            raise CycleOpsInvalidOperand(f"division of {left} by zero")
        return left / right
    raise CycleOpsInvalidOperand(f"Unknown rational operation {op!r}")


def parse_rational(text: str, location: str = "$") -> Fraction:
    """
    Parses the "num/den" text form. Decimal points, exponents and whitespace are rejected.

    Raises:
        CycleOpsParseError: If the text is not of the form -?digits[/digits] or the denominator is zero.
    """
    if not isinstance(text, str) or not _RATIONAL_PATTERN.fullmatch(text):
        raise CycleOpsParseError(f"expected a rational of the form num/den, got {text!r}", location)
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise CycleOpsParseError(f"zero denominator in {text!r}", location)
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: RationalLike) -> str:
    """
    Renders a rational as "num/den", or "num" when the denominator is 1.
    """
    return str(Fraction(value))


def is_canonical(value: Fraction) -> bool:
    """
    Returns True if the fraction is in lowest terms with a positive denominator.
    """
    return value.denominator > 0 and math.gcd(value.numerator, value.denominator) == 1


def primitive_vector(vector: Sequence[RationalLike]) -> List[Fraction]:
    """
    Scales a rational vector to coprime integer entries whose first nonzero entry is positive.
    The zero vector is returned unchanged.
    """
    entries = [Fraction(v) for v in vector]
    nonzero = [v for v in entries if v != 0]
    if not nonzero:
        return entries
    common_denominator = math.lcm(*(v.denominator for v in nonzero))
    integers = [v.numerator * (common_denominator // v.denominator) for v in entries]
    content = math.gcd(*integers)
    if nonzero[0] < 0:
        content = -content
    return [Fraction(v // content) for v in integers]
