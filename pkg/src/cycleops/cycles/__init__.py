"""
Formal bookkeeping of symmetric 1-cycles on C^m and of their pushforwards to C^n and to the Jacobian.
"""

from .brute import brute_pushforward
from .jacobian import degree_functional, fstar_multiplicity, jacobian_pushforward, smash_certificate
from .symmetric import (
    collapse_symmetric,
    cycle_from_q,
    expand_symmetric,
    project_pushforward,
    projected_relation,
    pullback_symmetric_class,
    symmetric_power_class,
)
