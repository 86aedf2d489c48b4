"""Exact and asymptotic evaluation of the theta splitting function."""

from .applications import (
    SeatingInstance,
    TableRow,
    discrepancy_report,
    distribution_table,
    render_report,
    seating_bruteforce,
    seating_count_formula,
)
from .asymptotics import limit_reference, ratio_study, series_constant, stirling_approx
from .exact import factorial, falling_factorial_sum, floor_e_factorial_check, theta, theta_sum_form
from .numerics import ApproxResult, ConvergenceError, SeriesConfig
from .weierstrass import (
    EULER_GAMMA_DIGITS,
    partial_product,
    theorem3_exact_reduction,
    theorem3_lhs,
    theorem3_rhs,
    weierstrass_oracle,
    weierstrass_product,
)

__version__ = "0.1.0"
