from .functions.character_sums import (
    factorial_double_sum,
    j7_bruteforce,
    j7_via_characters,
    max_nonprincipal_double_sum,
    parseval_check,
)
from .functions.curve_sums import (
    bombieri_check,
    build_difference_polynomial,
    count_J,
    line_divisibility_check,
    xj_new_elements,
)
from .functions.modarith import build_prime_context, discrete_log, factorial_table, mod_inverse, primitive_root
from .functions.representation import exponent_trend, find_representation, minimal_bound_for_all
from .functions.residue_sets import (
    density_experiment,
    factorial_range_set,
    interval_inclusion_check,
    product_set,
    quotient_growth_experiment,
    quotient_set,
    ruzsa_check,
)
from .models import PrimeContext, ResidueSet, WindowSpec
from .scripts.emit import emit_report
from .scripts.experiments import run_experiment

__all__ = [
    "PrimeContext",
    "ResidueSet",
    "WindowSpec",
    "bombieri_check",
    "build_difference_polynomial",
    "build_prime_context",
    "count_J",
    "density_experiment",
    "discrete_log",
    "emit_report",
    "exponent_trend",
    "factorial_double_sum",
    "factorial_range_set",
    "factorial_table",
    "find_representation",
    "interval_inclusion_check",
    "j7_bruteforce",
    "j7_via_characters",
    "line_divisibility_check",
    "max_nonprincipal_double_sum",
    "minimal_bound_for_all",
    "mod_inverse",
    "parseval_check",
    "primitive_root",
    "product_set",
    "quotient_growth_experiment",
    "quotient_set",
    "ruzsa_check",
    "run_experiment",
    "xj_new_elements",
]
