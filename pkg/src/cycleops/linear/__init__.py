"""
Exact linear algebra over the rationals: elimination, constraint systems, solving with a
nonvanishing functional and the independence and non-membership checks.
"""

from .avoidance import solve_with_avoidance
from .elimination import EchelonForm, nullspace, rank, rref, span_coefficients
from .lemmas import (
    beta_block_residuals,
    beta_closed_forms,
    beta_fourth_residual,
    independence_check,
    lemma2_find_m,
    lemma2_forced_zero,
    lemma2_membership,
    lemma2_rank,
    reduced_vandermonde_rank,
)
from .systems import (
    ExponentConvention,
    build_p7_system,
    build_s_system,
    kappa_functional,
    moment_row,
    p7_exponents,
    p7_functional,
    s_exponents,
)
