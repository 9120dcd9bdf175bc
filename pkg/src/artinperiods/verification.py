"""The identity / inequality suite behind ``artinperiods verify``."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass

import numpy as np

from . import bound_engine, integer_oracle
from .modular_core import primes_array
from .period_lab import compute_periods, identity_residuals, partial_period_sums, trig_majorants

log = logging.getLogger(__name__)

EQ2_RTOL = 1e-6
MAJORANT_CAP = 500
CHAIN_CAP = 500


@dataclass
class Check:
    check: str
    p: int | None
    value: float
    tolerance: float
    passed: bool
    required: bool = True
    note: str = ""

    def as_dict(self) -> dict:
        d = asdict(self)
        d["p"] = "" if self.p is None else self.p
        return d


def per_prime_checks(a: int, x: int, tolerance_scale: float = 1e-8) -> list[Check]:
    out: list[Check] = []
    for p in primes_array(x).tolist():
        if a % p == 0:
            continue
        tol = tolerance_scale * p
        ps = compute_periods(p, a)
        pp = partial_period_sums(ps)
        for name, resid in identity_residuals(ps, pp).as_dict().items():
            out.append(Check(name, p, resid, tol, resid <= tol))

        perm_ok = bool(np.array_equal(np.sort(pp.h), np.arange(1, p)))
        out.append(Check("h_permutation", p, 0.0 if perm_ok else 1.0, 0.0, perm_ok))

        if 3 <= p <= MAJORANT_CAP:
            excess = float(np.max(np.abs(pp.P[: p - 2]) - trig_majorants(ps)))
            out.append(Check("trig_majorant", p, excess, tol, excess <= tol))

        est = bound_engine.estimate4_check(ps)
        out.append(Check("estimate4_cauchy_schwarz", p, est.lhs - est.rhs_cs, 0.0, est.pass_cs))
        out.append(Check(
            "estimate4_paper_form", p, est.lhs - est.rhs_paper, 0.0, est.pass_paper,
            required=False,
            note="" if est.pass_paper else f"paper-form violated at p={p}",
        ))
    return out


def aggregate_checks(a: int, u: int, x: int, rows=None) -> list[Check]:
    out: list[Check] = []
    oracle = integer_oracle.oracle_D_prefix(a, u, x)
    mismatches = [v for v in range(1, u + 1) if bound_engine.exact_D(a, v, x) != oracle[v - 1]]
    out.append(Check("oracle_D_equivalence", None, float(len(mismatches)), 0.0, not mismatches,
                     note=f"u'=1..{u}" + (f"; first mismatch u'={mismatches[0]}" if mismatches else "")))

    worst = 0.0
    for v in range(1, u + 1):
        D = bound_engine.exact_D(a, v, x)
        total = sum(bound_engine.eq2_decomposition(a, v, x))
        worst = max(worst, abs(total - D) / max(1, D))
    out.append(Check("eq2_identity", None, worst, EQ2_RTOL, worst <= EQ2_RTOL))

    rows = bound_engine.prime_rows(a, x) if rows is None else rows
    t = bound_engine.bound_terms(rows, u)
    D = t["D_exact"]
    order_checks = {
        "D_le_A_explicit": t["bound_A_explicit"] - D,
        "A_explicit_le_paper": t["bound_A_paper"] - t["bound_A_explicit"],
        "D_le_B_explicit": t["bound_B_explicit"] - D,
        "B_explicit_le_paper": t["bound_B_paper"] - t["bound_B_explicit"],
    }
    for name, gap in order_checks.items():
        out.append(Check(name, None, gap, 0.0, gap >= 0))

    xc = min(x, CHAIN_CAP)
    s = bound_engine.S_of_x(a, xc, exact=True)
    n = bound_engine.histogram_sum(bound_engine.order_histogram(a, xc))
    c = integer_oracle.cyclotomic_omega_sum(a, xc) if a >= 2 else n
    w = bound_engine.W_of_x(a, xc, exact=True)
    ok = s <= n <= c <= w
    out.append(Check("chain_S_N_Phi_W", None, float(w - s), 0.0, ok,
                     note=f"x={xc}: S={float(s):.6g} N={float(n):.6g} Phi={float(c):.6g} W={float(w):.6g}"))
    return out


def run_verification(a: int, u: int, x: int, tolerance_scale: float = 1e-8,
                     rows=None) -> tuple[list[Check], bool]:
    checks = per_prime_checks(a, x, tolerance_scale) + aggregate_checks(a, u, x, rows)
    ok = True
    flagged = []
    for c in checks:
        if c.required and not c.passed:
            ok = False
            log.error("check failed: p=%s check=%s residual=%r", c.p, c.check, c.value)
        elif not c.passed:
            flagged.append(c)
    if flagged:
        shown = ", ".join(c.note for c in flagged[:3])
        log.warning("%d informational check(s) flagged: %s%s", len(flagged), shown,
                    ", ..." if len(flagged) > 3 else "")
    return checks, ok
