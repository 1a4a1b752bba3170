"""
Reading and writing certificates as JSON.
"""

import json
from typing import Any

from pydantic import BaseModel, ValidationError

from .. import CycleOpsParseError
from ..models.certificate import Certificate


def dump_model(model: BaseModel, indent: int = 2) -> str:
    """
    Serializes a model as JSON with fields in declaration order; indent 0 gives one compact line.
    """
    return model.model_dump_json(indent=indent or None)


def _location(loc: Any) -> str:
    path = "$"
    for part in loc:
        path += f"[{part}]" if isinstance(part, int) else f".{part}"
    return path


def parse_certificate(text: str) -> Certificate:
    """
    Parses a certificate from JSON text.

    Raises:
        CycleOpsParseError: If the text is not JSON or does not describe a certificate; the location
            points at the offending field.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise CycleOpsParseError(f"invalid JSON: {e.msg}", location=f"line {e.lineno} column {e.colno}") from e
    try:
        return Certificate.model_validate(document)
    except ValidationError as e:
        first = e.errors()[0]
        raise CycleOpsParseError(first["msg"], location=_location(first["loc"])) from e
