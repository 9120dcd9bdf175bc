"""Compensated summation helpers.

``np.cumsum`` is a sequential accumulate, so every step is ``s_k = fl(s_{k-1} + v_k)``.
The rounding error of each step is recovered exactly with the TwoSum
transformation and the (tiny) errors are accumulated separately, which gives a
vectorised Kahan-style prefix sum.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np


def _two_sum_error(a: np.ndarray, b: np.ndarray, s: np.ndarray) -> np.ndarray:
    bb = s - a
    return (a - (s - bb)) + (b - bb)


def compensated_cumsum(values, axis: int = -1) -> np.ndarray:
    """Prefix sums of a real array along ``axis`` with error compensation."""
    v = np.asarray(values, dtype=np.float64)
    v = np.moveaxis(v, axis, -1)
    s = np.cumsum(v, axis=-1)
    prev = np.zeros_like(s)
    prev[..., 1:] = s[..., :-1]
    err = _two_sum_error(prev, v, s)
    out = s + np.cumsum(err, axis=-1)
    return np.moveaxis(out, -1, axis)


def compensated_cumsum_complex(values, axis: int = -1) -> np.ndarray:
    v = np.asarray(values, dtype=np.complex128)
    return compensated_cumsum(v.real, axis) + 1j * compensated_cumsum(v.imag, axis)


def compensated_rowsum_complex(matrix) -> np.ndarray:
    """Row totals of a 2-D complex array."""
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape[1] == 0:
        return np.zeros(m.shape[0], dtype=np.complex128)
    return compensated_cumsum_complex(m, axis=1)[:, -1]


def csum(values: Iterable[complex]) -> complex:
    """Correctly rounded complex total (real and imaginary parts via ``math.fsum``)."""
    v = np.asarray(list(values) if not isinstance(values, np.ndarray) else values,
                   dtype=np.complex128)
    return complex(math.fsum(v.real), math.fsum(v.imag))
