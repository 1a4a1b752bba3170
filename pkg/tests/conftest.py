"""
Shared fixtures.
"""

from fractions import Fraction
from typing import Tuple

import pytest

from cycleops.models.operators import CoeffTable
from cycleops.operators import coeff_table

GROSS_SCHOEN_Q: Tuple[Fraction, ...] = (Fraction(1), Fraction(-1), Fraction(1))
GENUS_ONE_Q: Tuple[Fraction, ...] = (Fraction(6), Fraction(-3), Fraction(1), Fraction(0), Fraction(0))


@pytest.fixture(scope="session")
def table() -> CoeffTable:
    """
    Coefficient table large enough for every test.
    """
    return coeff_table(12)


@pytest.fixture
def gross_schoen_q() -> Tuple[Fraction, ...]:
    """
    The classical modified diagonal on C^3.
    """
    return GROSS_SCHOEN_Q


@pytest.fixture
def genus_one_q() -> Tuple[Fraction, ...]:
    """
    The certified q-vector for g=1, n=3 at m=5.
    """
    return GENUS_ONE_Q
