"""Value sets of polynomial maps over finite fields and their polytope, degree-matrix and p-adic bounds."""
from .dilation import chain_check, gamma, lp_min_combination, mu, omega
from .gf import extension_make, field_make, norm_value
from .padic import char_sum, power_sum, u_invariant
from .poly import combine, degree, degree_matrix, parse_map, render
from .valueset import value_set

__all__ = [
    "chain_check", "combine", "char_sum", "degree", "degree_matrix", "extension_make",
    "field_make", "gamma", "lp_min_combination", "mu", "norm_value", "omega", "parse_map",
    "power_sum", "render", "u_invariant", "value_set",
]
