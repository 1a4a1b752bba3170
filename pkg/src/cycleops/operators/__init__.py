"""
The operator calculus on univariate polynomials: T = x d/dx, the moment polynomials r_i,
the coefficient table c^i_j and the factorized expansion of T^i (1+x)^m.
"""

from .calculus import apply_T, binomial_power, moment_poly, one_plus_x_valuation, r_poly, shifted_power
from .expansion import coeff_table, expand_factorized, factorized_coordinates, lemma1_expand
