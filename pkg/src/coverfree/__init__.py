"""Rate bounds and a binary-code toolkit for superimposed codes.

Analytic side: random-coding lower bounds and recurrent upper bounds on the
rates of cover-free (s, l)-codes and list-decoding codes with list size L,
including the published summary tables.  Combinatorial side: verification,
random generation with purging, exhaustive search, and exact/Monte-Carlo
bad-pair probabilities as an independent oracle for the exponents.
"""

__version__ = "0.1.0"

from .codes import BinaryCode, CodeFormatError, Witness
from .ensemble import DegenerateCodeError, purge_construction, random_constant_weight
from .entropy import binary_entropy, f_n, f_n_prime, g_n, kullback, v_n
from .optimize import (
    ConvergenceError,
    NoSignChangeError,
    SolverConfig,
    SolverError,
    bracket_root,
    maximize_1d,
)
from .pairprob import exact_P0_cf, mc_pair_probability
from .random_coding import (
    BoundResult,
    ExtremalDistributions,
    asymptote,
    exponent_cover_free,
    exponent_disjunctive,
    exponent_list,
    extremal_distributions,
    ld_limit,
    lower_bound_cf,
    lower_bound_disjunctive,
    lower_bound_ld,
    lower_bound_ld_alt,
    solve_u_given_z,
    solve_y_disjunctive,
    solve_y_list,
)
from .recurrent import (
    CapExceededError,
    RecurrentState,
    k_growth_check,
    k_sequence,
    ld_counting_bound,
    optimal_split_fraction,
    plan_upper_bound_row,
    threshold_sL,
    upper_bound_cf,
    upper_bound_cf_grid,
    upper_bound_disjunctive,
    upper_bound_ld,
    upper_cf_asymptote,
)
from .search import exhaustive_max_t
from .tables import RateTable, build_table, compare
from .verify import bad_columns, is_cover_free, is_list_decoding, is_plan, recheck

__all__ = [
    "__version__",
    "BinaryCode",
    "BoundResult",
    "CapExceededError",
    "CodeFormatError",
    "ConvergenceError",
    "DegenerateCodeError",
    "ExtremalDistributions",
    "NoSignChangeError",
    "RateTable",
    "RecurrentState",
    "SolverConfig",
    "SolverError",
    "Witness",
    "asymptote",
    "bad_columns",
    "binary_entropy",
    "bracket_root",
    "build_table",
    "compare",
    "exact_P0_cf",
    "exhaustive_max_t",
    "exponent_cover_free",
    "exponent_disjunctive",
    "exponent_list",
    "extremal_distributions",
    "f_n",
    "f_n_prime",
    "g_n",
    "is_cover_free",
    "is_list_decoding",
    "is_plan",
    "k_growth_check",
    "k_sequence",
    "kullback",
    "ld_counting_bound",
    "ld_limit",
    "lower_bound_cf",
    "lower_bound_disjunctive",
    "lower_bound_ld",
    "lower_bound_ld_alt",
    "maximize_1d",
    "mc_pair_probability",
    "optimal_split_fraction",
    "plan_upper_bound_row",
    "purge_construction",
    "random_constant_weight",
    "recheck",
    "solve_u_given_z",
    "solve_y_disjunctive",
    "solve_y_list",
    "threshold_sL",
    "upper_bound_cf",
    "upper_bound_cf_grid",
    "upper_bound_disjunctive",
    "upper_bound_ld",
    "upper_cf_asymptote",
    "v_n",
]
