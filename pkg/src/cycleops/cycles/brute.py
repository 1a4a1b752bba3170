"""
Subset-enumerating pushforward along the projection to the first n factors.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import DefaultDict, Optional

from .. import CycleOpsInvalidParameters
from ..models.cycles import GeneralCycle
from .symmetric import check_subset_cap

LOGGER = logging.getLogger(__name__)


def brute_pushforward(cycle: GeneralCycle, n: int, subset_cap: Optional[int] = None) -> GeneralCycle:
    """
    Maps every Delta_T to Delta_{T & {1..n}}, dropping empty intersections.

    Raises:
        CycleOpsInvalidParameters: Unless 1 <= n < m.
        CycleOpsResourceLimit: If m exceeds the subset cap.
    """
    check_subset_cap(cycle.m, subset_cap)
    if not 1 <= n < cycle.m:
        raise CycleOpsInvalidParameters(f"projection C^{cycle.m} -> C^{n} needs 1 <= n < m")
    head = (1 << n) - 1
    accumulated: DefaultDict[int, Fraction] = defaultdict(Fraction)
    for subset in sorted(cycle.coeffs):
        image = subset & head
        if image:
            accumulated[image] += cycle.coeffs[subset]
    LOGGER.debug("Pushed %s subsets of 1..%s to %s subsets of 1..%s", len(cycle.coeffs), cycle.m, len(accumulated), n)
    return GeneralCycle(m=n, coeffs={subset: value for subset, value in sorted(accumulated.items()) if value != 0})
