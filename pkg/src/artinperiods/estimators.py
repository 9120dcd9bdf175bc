"""scikit-learn compatible wrappers.

``PeriodFeatures`` turns a column of primes into per-prime period statistics;
``CountingBounds`` caches the u-independent per-prime sweep in ``fit`` and
maps values of u to D(u), its decomposition and both bounds in ``transform``.
"""

from __future__ import annotations

import os

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import bound_engine
from .validation import (
    check_alpha,
    check_base,
    check_delta,
    check_int,
    check_primes,
    check_u_values,
)

PERIOD_FEATURES = ("f_p", "e_p", "sum_abs_eta", "max_abs_eta", "B_p")
BOUND_COLUMNS = (
    "D_exact", "T1", "T2", "Term3",
    "bound_A_explicit", "bound_A_paper", "bound_B_explicit", "bound_B_paper",
    "u_x_quarter",
)


class PeriodFeatures(TransformerMixin, BaseEstimator):
    """Per-prime period statistics for the subgroup generated by ``a``.

    Parameters
    ----------
    a : int, default=2
        Base whose multiplicative order and periods are computed.
    """

    def __init__(self, a=2):
        self.a = a

    def fit(self, X, y=None):
        self.a_ = check_base(self.a)
        check_primes(X, self.a_)
        self.n_features_in_ = 1
        return self

    def transform(self, X):
        check_is_fitted(self, "a_")
        primes = check_primes(X, self.a_)
        out = np.empty((primes.size, len(PERIOD_FEATURES)), dtype=np.float64)
        for i, p in enumerate(primes.tolist()):
            row = bound_engine.prime_row(p, self.a_)
            out[i] = [getattr(row, name) for name in PERIOD_FEATURES]
        return out

    def get_feature_names_out(self, input_features=None):
        return np.asarray(PERIOD_FEATURES, dtype=object)


class CountingBounds(TransformerMixin, BaseEstimator):
    """D(u) and explicit bounds A/B over primes p <= x.

    Parameters
    ----------
    a : int, default=2
    x : int, default=1000
        Prime cutoff.
    delta : float, default=0.1
        Exponent slack of the Erdos-Murty reference curve.
    alpha : float, default=0.1
        Exponent slack in the max-period predicate.
    threads : int or None, default=None
        Worker threads for the per-prime sweep; ``None`` uses every core.

    Attributes
    ----------
    rows_ : list of PrimeRow
        Per-prime data, ascending in p.
    max_period_stats_ : MaxPeriodStats
    """

    def __init__(self, a=2, x=1000, delta=0.1, alpha=0.1, threads=None):
        self.a = a
        self.x = x
        self.delta = delta
        self.alpha = alpha
        self.threads = threads

    def fit(self, X=None, y=None):
        self.a_ = check_base(self.a)
        self.x_ = check_int(self.x, "x", 2)
        check_delta(self.delta)
        alpha = check_alpha(self.alpha)
        threads = self.threads if self.threads is not None else (os.cpu_count() or 1)
        threads = check_int(threads, "threads", 1)
        self.rows_ = bound_engine.prime_rows(self.a_, self.x_, threads)
        self.max_period_stats_ = bound_engine.max_period_stats(self.a_, self.x_, alpha,
                                                               rows=self.rows_)
        self.n_features_in_ = 1
        return self

    def transform(self, U):
        check_is_fitted(self, "rows_")
        us = check_u_values(U)
        quarter = self.x_**0.25
        out = np.empty((us.size, len(BOUND_COLUMNS)), dtype=np.float64)
        for i, u in enumerate(us.tolist()):
            terms = bound_engine.bound_terms(self.rows_, u)
            terms["u_x_quarter"] = u * quarter
            out[i] = [terms[c] for c in BOUND_COLUMNS]
        return out

    def report(self, u: int) -> bound_engine.BoundReport:
        check_is_fitted(self, "rows_")
        u = check_int(u, "u", 1)
        return bound_engine.bound_report(self.a_, u, self.x_, self.delta, self.alpha,
                                         rows=self.rows_)

    def get_feature_names_out(self, input_features=None):
        return np.asarray(BOUND_COLUMNS, dtype=object)

    @property
    def primes_(self) -> list[int]:
        check_is_fitted(self, "rows_")
        return [r.p for r in self.rows_]


def ratio_to_quarter_power(bounds: np.ndarray) -> np.ndarray:
    """Each bound column divided by u * x**(1/4) (last column of ``transform``)."""
    ref = bounds[:, -1:]
    return bounds[:, 4:8] / ref


__all__ = ["PeriodFeatures", "CountingBounds", "ratio_to_quarter_power"]
