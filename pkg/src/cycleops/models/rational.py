"""
Pydantic field types for exact rationals.

`RationalStr` validates from a Fraction, an int or the "num/den" text form, and always
serializes to the "num/den" text form, so every JSON document carries exact values.
"""

from fractions import Fraction
from typing import Annotated, Any

from pydantic import PlainSerializer, PlainValidator

from .. import CycleOpsParseError
from ..exact.rational import format_rational, parse_rational


def _validate_rational(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except CycleOpsParseError as e:
            raise ValueError(str(e)) from e
    raise ValueError(f"expected a rational as a 'num/den' string, got {type(value).__name__}")


RationalStr = Annotated[
    Fraction,
    PlainValidator(_validate_rational),
    PlainSerializer(format_rational, return_type=str),
]
