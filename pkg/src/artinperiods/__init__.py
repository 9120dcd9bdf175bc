"""Multiplicative orders, cyclotomic periods and explicit Artin-type counting bounds."""

from .bound_engine import (
    bound_A,
    bound_B,
    bound_report,
    density_report,
    eq2_decomposition,
    estimate4_check,
    exact_D,
    max_period_stats,
    order_histogram,
    reference_curves,
    S_of_x,
    W_of_x,
)
from .estimators import PeriodFeatures, CountingBounds
from .integer_oracle import cyclotomic_eval, oracle_D
from .modular_core import (
    build_coset_table,
    factorize,
    multiplicative_order,
    primitive_root,
    sieve_primes,
)
from .period_lab import compute_periods, identity_residuals, partial_period_sums, trig_majorant

__version__ = "0.1.0"
