"""Cyclotomic periods of <a> in F_p*, their h-ordered prefix sums and identities."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._compensated import compensated_cumsum_complex, compensated_rowsum_complex, csum
from .modular_core import (
    CosetTable,
    OrderRecord,
    build_coset_table,
    order_record,
    power_table,
)


def unit_roots(p: int) -> np.ndarray:
    """``zeta_p**k`` for k = 0..p-1."""
    k = np.arange(p, dtype=np.float64)
    theta = 2.0 * math.pi * k / p
    return np.cos(theta) + 1j * np.sin(theta)


@dataclass(frozen=True, eq=False)
class PeriodSet:
    p: int
    record: OrderRecord
    cosets: CosetTable
    eta: np.ndarray  # eta[i-1] is the period of coset index i
    roots: np.ndarray

    @property
    def f_p(self) -> int:
        return self.record.f_p

    @property
    def e_p(self) -> int:
        return self.record.e_p


@dataclass(frozen=True, eq=False)
class PartialSums:
    p: int
    h: np.ndarray  # h[m-1] = m*f_p mod p, m = 1..p-1
    P: np.ndarray  # P[k-1] = sum_{m<=k} eta_{h_m}
    B_p: float


@dataclass(frozen=True)
class IdentityResiduals:
    p: int
    period_total: float      # |sum_i eta_i + 1|
    norm_total: float        # |sum_i |eta_i|^2 - (p - f_p)|
    full_prefix: float       # |P_{p-1} + f_p|
    twisted_total: float     # |sum_m eta_{h_m} zeta^{-h_m} - (p - f_p)|
    sbp_bracket: float       # summation-by-parts form of the twisted total

    def as_dict(self) -> dict[str, float]:
        return {
            "period_total": self.period_total,
            "norm_total": self.norm_total,
            "full_prefix": self.full_prefix,
            "twisted_total": self.twisted_total,
            "sbp_bracket": self.sbp_bracket,
        }

    def max(self) -> float:
        return max(self.as_dict().values())


def compute_periods(p: int, a: int) -> PeriodSet:
    """Periods eta_i = sum_j zeta_p**(g**i * a**j), one per coset of <a>."""
    record = order_record(p, a)
    cosets = build_coset_table(p, a, record.g)
    roots = unit_roots(p)
    eta = compensated_rowsum_complex(roots[cosets.members])
    return PeriodSet(p=p, record=record, cosets=cosets, eta=eta, roots=roots)


def period_for_residue(ps: PeriodSet, c: int) -> complex:
    c %= ps.p
    if c == 0:
        raise ValueError("residue 0 lies in no coset of F_p*")
    return complex(ps.eta[ps.cosets.coset_of[c] - 1])


def h_order(ps: PeriodSet) -> np.ndarray:
    m = np.arange(1, ps.p, dtype=np.int64)
    return m * ps.f_p % ps.p


def partial_period_sums(ps: PeriodSet) -> PartialSums:
    h = h_order(ps)
    eta_h = ps.eta[ps.cosets.coset_of[h] - 1]
    P = compensated_cumsum_complex(eta_h)
    B = math.fsum(np.abs(P[: ps.p - 2]))
    return PartialSums(p=ps.p, h=h, P=P, B_p=B)


def sine_step(p: int, f: int) -> float:
    """|zeta^{-h_k} - zeta^{-h_{k+1}}| = |2 sin(pi f/p)|."""
    return abs(2.0 * math.sin(math.pi * (f % p) / p))


def trig_majorants(ps: PeriodSet, ks=None) -> np.ndarray:
    """sum_j |sin(pi t_j k/p) / sin(pi t_j/p)| with t_j = a**j f_p mod p.

    ``ks`` defaults to every k in [1, p-2].  Products are reduced mod p in
    integers before any sine is taken.
    """
    p, f = ps.p, ps.f_p
    if ks is None:
        ks = np.arange(1, p - 1, dtype=np.int64)
    ks = np.atleast_1d(np.asarray(ks, dtype=np.int64))
    if ks.size and (ks.min() < 1 or ks.max() > p - 2):
        raise ValueError(f"k must lie in [1, {p - 2}]")
    t = power_table(ps.record.a_mod_p, f + 1, p)[1:] * f % p
    den = np.abs(np.sin(np.pi * t / p))
    num = np.abs(np.sin(np.pi * (np.outer(ks, t) % p) / p))
    return (num / den).sum(axis=1)


def trig_majorant(ps: PeriodSet, k: int) -> float:
    return float(trig_majorants(ps, [k])[0])


def identity_residuals(ps: PeriodSet, pp: PartialSums) -> IdentityResiduals:
    p, f = ps.p, ps.f_p
    roots = ps.roots
    eta = ps.eta
    conj_h = roots[(p - pp.h) % p]  # zeta^{-h_m}
    eta_h = eta[ps.cosets.coset_of[pp.h] - 1]

    twisted = csum(eta_h * conj_h)
    diffs = conj_h[:-1] - conj_h[1:]
    bracket = pp.P[-1] * conj_h[-1] + csum(pp.P[:-1] * diffs)
    target = p - f
    return IdentityResiduals(
        p=p,
        period_total=abs(csum(eta) + 1),
        norm_total=abs(math.fsum(np.abs(eta) ** 2) - target),
        full_prefix=abs(complex(pp.P[-1]) + f),
        twisted_total=float(abs(twisted - target)),
        sbp_bracket=float(abs(bracket - target)),
    )
