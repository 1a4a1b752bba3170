"""
Solving a homogeneous system while avoiding the kernel of a functional.
"""

import logging
from fractions import Fraction
from typing import Optional, Tuple

from .. import CycleOpsInvalidInput
from ..models.linear import ConstraintSystem, Functional
from .elimination import nullspace

LOGGER = logging.getLogger(__name__)


def solve_with_avoidance(system: ConstraintSystem, functional: Functional) -> Optional[Tuple[Fraction, ...]]:
    """
    Returns a solution q of the system with functional(q) != 0, or None when the functional vanishes
    on the whole solution space.

    The basis vectors are tried in free-column order and the first one on which the functional does
    not vanish is returned. Since the functional is linear, it vanishes on the solution space exactly
    when it vanishes on every basis vector.

    Raises:
        CycleOpsInvalidInput: If the functional and the system act on different numbers of unknowns.
    """
    if functional.m != system.m:
        raise CycleOpsInvalidInput(f"functional on {functional.m} unknowns, system on {system.m}")
    basis = nullspace(system)
    for index, vector in enumerate(basis.vectors):
        value = functional.evaluate(vector)
        if value != 0:
            LOGGER.debug("%s = %s on basis vector %s of %s", functional.label, value, index, basis.dimension)
            return tuple(vector)
    LOGGER.debug("%s vanishes on the %s-dimensional solution space", functional.label, basis.dimension)
    return None
