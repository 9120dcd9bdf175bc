"""Input checks shared by the estimators and the command line."""

from __future__ import annotations

import numbers

import numpy as np
from sklearn.utils import check_array

from .modular_core import primes_array, warn_if_degenerate_base


def check_int(value, name: str, min_value: int | None = None) -> int:
    if isinstance(value, (bool, np.bool_)) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    value = int(value)
    if min_value is not None and value < min_value:
        raise ValueError(f"{name} must be >= {min_value}, got {value}")
    return value


def check_base(a) -> int:
    a = check_int(a, "a")
    warn_if_degenerate_base(a)
    return a


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0 < alpha < 2 / 3:
        raise ValueError(f"alpha must lie in (0, 2/3), got {alpha}")
    return alpha


def check_delta(delta: float) -> float:
    delta = float(delta)
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    return delta


def check_primes(X, a: int | None = None) -> np.ndarray:
    """Flatten X (shape (n,) or (n, 1)) into an int64 vector of primes.

    When ``a`` is given, primes dividing it are rejected since their
    order is undefined.
    """
    arr = check_array(X, ensure_2d=False, dtype=np.int64)
    if arr.ndim == 2:
        if arr.shape[1] != 1:
            raise ValueError(f"expected a single column of primes, got shape {arr.shape}")
        arr = arr[:, 0]
    if arr.size and arr.min() < 2:
        raise ValueError("primes must be >= 2")
    if arr.size:
        known = primes_array(int(arr.max()))
        bad = arr[~np.isin(arr, known)]
        if bad.size:
            raise ValueError(f"not prime: {bad[:5].tolist()}")
    if a is not None and arr.size and np.any(a % arr == 0):
        raise ValueError(f"primes dividing a={a}: {arr[a % arr == 0].tolist()}")
    return arr


def check_u_values(U) -> np.ndarray:
    arr = check_array(U, ensure_2d=False, dtype=np.int64)
    arr = arr.reshape(-1)
    if arr.size and arr.min() < 1:
        raise ValueError("u values must be >= 1")
    return arr
