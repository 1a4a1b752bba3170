#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module provides the exceptions shared by every part of cycleops, and the tool version
stamped into certificates.

Exceptions:
    CycleOpsError: Base class of every cycleops error.
    CycleOpsInvalidParameters: A parameter precondition does not hold.
    CycleOpsOutOfRange: An index is outside the range an operation is defined on.
    CycleOpsInvalidOperand: An arithmetic operand is not admissible (division by zero).
    CycleOpsInvalidInput: An input value is malformed for the operation (zero polynomial, length mismatch).
    CycleOpsResourceLimit: A brute-force enumeration would exceed the configured cap.
    CycleOpsUnsupported: The request is outside what the construction covers.
    CycleOpsParseError: A serialized certificate could not be parsed.
"""

__version__ = "1.0.0"


class CycleOpsError(Exception):
    """
    Base class of every cycleops error.
    """


class CycleOpsInvalidParameters(CycleOpsError, ValueError):
    """
    Exception raised when the parameters of an operation violate its precondition.
    """


class CycleOpsOutOfRange(CycleOpsInvalidParameters):
    """
    Exception raised when an index is outside the range an operation is defined on.
    """


class CycleOpsInvalidOperand(CycleOpsError, ArithmeticError):
    """
    Exception raised on an inadmissible arithmetic operand, e.g. a zero divisor.
    """


class CycleOpsInvalidInput(CycleOpsError, ValueError):
    """
    Exception raised when an input value cannot be processed, e.g. the valuation of the zero polynomial.
    """


class CycleOpsResourceLimit(CycleOpsError):
    """
    Exception raised when a brute-force enumeration would exceed the configured subset cap.
    """


class CycleOpsUnsupported(CycleOpsError):
    """
    Exception raised when a request is outside what the construction covers.
    """


class CycleOpsParseError(CycleOpsError):
    """
    Exception raised when a serialized certificate is malformed.

    Attributes:
        location (str): Where in the document parsing failed.
    """

    def __init__(self, message: str, location: str = "$") -> None:
        super().__init__(f"{location}: {message}")
        self.location = location
