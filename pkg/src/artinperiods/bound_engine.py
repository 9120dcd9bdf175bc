"""Exact counts, the exponential-sum decomposition of D(u) and explicit bounds A and B.

Per-prime quantities that do not depend on u (orders, sum |eta_i|, max |eta_i|,
B_p) are computed once as :class:`PrimeRow` objects, possibly in parallel, and
then folded in ascending prime order.  Real aggregates use ``math.fsum`` so
the result does not depend on how the rows were produced.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .modular_core import order_records, primes_array
from .period_lab import compute_periods, partial_period_sums, sine_step

ARTIN_CONSTANT = 0.374


@dataclass(frozen=True)
class PrimeRow:
    p: int
    f_p: int
    e_p: int
    sum_abs_eta: float
    max_abs_eta: float
    B_p: float


def prime_row(p: int, a: int) -> PrimeRow:
    ps = compute_periods(p, a)
    pp = partial_period_sums(ps)
    mods = np.abs(ps.eta)
    return PrimeRow(
        p=p,
        f_p=ps.f_p,
        e_p=ps.e_p,
        sum_abs_eta=math.fsum(mods),
        max_abs_eta=float(mods.max()),
        B_p=pp.B_p,
    )


def prime_rows(a: int, x: int, threads: int = 1) -> list[PrimeRow]:
    """Rows for every prime p <= x with p not dividing a, ascending in p."""
    primes = [p for p in primes_array(x).tolist() if a % p]
    if threads <= 1 or len(primes) < 2:
        return [prime_row(p, a) for p in primes]
    # big primes first keeps workers busy; map() still yields in input order
    order = sorted(range(len(primes)), key=lambda i: -primes[i])
    with ThreadPoolExecutor(max_workers=threads) as pool:
        done = list(pool.map(lambda i: prime_row(primes[i], a), order))
    out: list[PrimeRow | None] = [None] * len(primes)
    for i, row in zip(order, done):
        out[i] = row
    return out  # type: ignore[return-value]


def _orders(a: int, x: int) -> list[tuple[int, int]]:
    return [(r.p, r.f_p) for r in order_records(a, x)]


def exact_D(a: int, u: int, x: int) -> int:
    """sum over p <= x, p not dividing a, of floor(u / f_p)."""
    return sum(u // f for _, f in _orders(a, x))


def _eq2_terms(pf: Sequence[tuple[int, int]], u: int) -> tuple[float, float, float]:
    t1 = math.fsum(u / p for p, _ in pf)
    t2 = -math.fsum((u % f) / p for p, f in pf)
    t3 = math.fsum((u // f) * (p - f) / p for p, f in pf)
    return t1, t2, t3


def eq2_decomposition(a: int, u: int, x: int) -> tuple[float, float, float]:
    """(T1, T2, Term3): diagonal k = p block, the partial period j <= u mod f_p,
    and the full-period coset block, which add up to D(u) exactly."""
    return _eq2_terms(_orders(a, x), u)


def bound_terms(rows: Sequence[PrimeRow], u: int) -> dict[str, float]:
    """D(u), (T1, T2, Term3) and both forms of bounds A and B from cached rows."""
    # Per prime, T1 + T2 = (u - u mod f)/p = floor(u/f) f / p exactly, so every
    # bound is folded as one term per prime; explicit and paper terms share
    # their shape so rounding cannot reorder them.
    pf = [(r.p, r.f_p) for r in rows]
    t1, t2, t3 = _eq2_terms(pf, u)
    a_exp, a_pap, b_exp, b_pap = [], [], [], []
    for r in rows:
        p, f = r.p, r.f_p
        qf = (u // f) * f
        base = qf / p
        a_exp.append(base + qf * r.sum_abs_eta / p)
        a_pap.append(base + u * r.sum_abs_eta / p)
        b_exp.append(base + (qf + (u // f) * sine_step(p, f) * r.B_p) / p)
        b_pap.append(base + u / p + 2 * math.pi * u * r.B_p / p**2)
    return {
        "D_exact": sum(u // f for _, f in pf),
        "T1": t1,
        "T2": t2,
        "Term3": t3,
        "eq2_total": math.fsum([t1, t2, t3]),
        "bound_A_explicit": math.fsum(a_exp),
        "bound_A_paper": math.fsum(a_pap),
        "bound_B_explicit": math.fsum(b_exp),
        "bound_B_paper": math.fsum(b_pap),
    }


def bound_A(a: int, u: int, x: int, rows: Sequence[PrimeRow] | None = None) -> tuple[float, float]:
    """(explicit, paper_form) versions of bound A.

    explicit keeps floor(u/f_p) * f_p in front of sum_i |eta_i|; paper_form
    replaces it by u.
    """
    t = bound_terms(prime_rows(a, x) if rows is None else rows, u)
    return t["bound_A_explicit"], t["bound_A_paper"]


def bound_B(a: int, u: int, x: int, rows: Sequence[PrimeRow] | None = None) -> tuple[float, float]:
    """(explicit, paper_form) versions of bound B.

    explicit uses floor(u/f_p) (f_p + |2 sin(pi f_p/p)| B_p) / p per prime,
    paper_form uses u/p + 2 pi u B_p / p**2.
    """
    t = bound_terms(prime_rows(a, x) if rows is None else rows, u)
    return t["bound_B_explicit"], t["bound_B_paper"]


@dataclass(frozen=True)
class Estimate4:
    p: int
    lhs: float
    rhs_cs: float
    rhs_paper: float
    pass_cs: bool
    pass_paper: bool
    all_equal: bool


def estimate4_check(ps, rtol: float = 1e-12) -> Estimate4:
    """Compare (1/p) sum |eta_i| against the Cauchy-Schwarz bound and its printed rewrite."""
    p, f, e = ps.p, ps.f_p, ps.e_p
    mods = np.abs(ps.eta)
    lhs = math.fsum(mods) / p
    rhs_cs = math.sqrt(e * (p - f)) / p
    rhs_paper = math.sqrt(1 / f - 1 / p) * math.sqrt(1 - f / p)
    slack = rtol * max(1.0, lhs)
    return Estimate4(
        p=p,
        lhs=lhs,
        rhs_cs=rhs_cs,
        rhs_paper=rhs_paper,
        pass_cs=lhs <= rhs_cs + slack,
        pass_paper=lhs <= rhs_paper + slack,
        all_equal=bool(np.ptp(mods) <= 1e-9),
    )


def S_of_x(a: int, x: int, exact: bool = False):
    """sum_{p < x, p not dividing a} 1 / f_p."""
    fs = [f for p, f in _orders(a, x) if p < x]
    if exact:
        return sum((Fraction(1, f) for f in fs), Fraction(0))
    return math.fsum(1 / f for f in fs)


def W_of_x(a: int, x: int, exact: bool = False):
    """sum_{j < x} omega_x(a**j - 1) / j via omega_x(a**j - 1) = #{p <= x : f_p | j}."""
    fs = [f for _, f in _orders(a, x)]
    if exact:
        return sum((Fraction(1, j) for f in fs for j in range(f, x, f)), Fraction(0))
    return math.fsum(1 / j for f in fs for j in range(f, x, f))


def order_histogram(a: int, x: int) -> dict[int, int]:
    """j -> N(j), the number of primes p < x (p not dividing a) with f_p = j."""
    hist: dict[int, int] = {}
    for p, f in _orders(a, x):
        if p < x:
            hist[f] = hist.get(f, 0) + 1
    return dict(sorted(hist.items()))


def histogram_sum(hist: dict[int, int]) -> Fraction:
    return sum((Fraction(n, j) for j, n in hist.items()), Fraction(0))


@dataclass(frozen=True)
class DensityStats:
    a: int
    x: int
    pi_x: int
    counted: int
    skipped: int
    primitive_count: int
    primitive_fraction: float
    frac_order_gt_sqrt_p: float
    frac_order_gt_p34: float
    tail_sum_order_gt_p34: float
    tail_reference: float
    artin_constant: float = ARTIN_CONSTANT
    small_sample: bool = False

    def as_dict(self) -> dict:
        return asdict(self)


SMALL_SAMPLE = 1000


def density_report(a: int, x: int) -> DensityStats:
    """Order statistics over primes p <= x; splits use exact integer comparisons."""
    pi_x = len(primes_array(x))
    pf = _orders(a, x)
    n = len(pf)
    prim = sum(1 for p, f in pf if f == p - 1)
    gt_sqrt = sum(1 for p, f in pf if f * f > p)
    big = [f for p, f in pf if f**4 > p**3]
    frac = (lambda c: c / n) if n else (lambda c: 0.0)
    return DensityStats(
        a=a,
        x=x,
        pi_x=pi_x,
        counted=n,
        skipped=pi_x - n,
        primitive_count=prim,
        primitive_fraction=frac(prim),
        frac_order_gt_sqrt_p=frac(gt_sqrt),
        frac_order_gt_p34=frac(len(big)),
        tail_sum_order_gt_p34=math.fsum(1 / f for f in big),
        tail_reference=x**0.25 / math.log(x),
        small_sample=n < SMALL_SAMPLE,
    )


@dataclass(frozen=True)
class MaxPeriodRow:
    p: int
    f_p: int
    max_abs_eta: float
    sqrt_p: float
    mvw_scale: float
    C_emp: float
    bourgain_applies: bool
    bourgain_holds: bool | None


@dataclass
class MaxPeriodStats:
    a: int
    x: int
    alpha: float
    rows: list[MaxPeriodRow] = field(default_factory=list)
    C_emp_max: float = 0.0
    trivial_bound_ok: bool = True


def max_period_stats(a: int, x: int, alpha: float, rows: Sequence[PrimeRow] | None = None) -> MaxPeriodStats:
    """Largest period modulus per prime against sqrt(p), sqrt(f_p log p) and
    the small-subgroup bound p**(-3 alpha/8) f_p (valid once f_p > p**(1/3+alpha))."""
    if not 0 < alpha < 2 / 3:
        raise ValueError("alpha must lie in (0, 2/3)")
    rows = prime_rows(a, x) if rows is None else rows
    out = MaxPeriodStats(a=a, x=x, alpha=alpha)
    for r in rows:
        scale = math.sqrt(r.f_p * math.log(r.p))
        c = r.max_abs_eta / scale if scale > 0 else math.inf
        applies = r.f_p > r.p ** (1 / 3 + alpha)
        holds = r.max_abs_eta < r.p ** (-3 * alpha / 8) * r.f_p if applies else None
        out.rows.append(MaxPeriodRow(r.p, r.f_p, r.max_abs_eta, math.sqrt(r.p), scale,
                                     c, applies, holds))
        if math.isfinite(c):
            out.C_emp_max = max(out.C_emp_max, c)
        out.trivial_bound_ok &= r.max_abs_eta <= r.f_p * (1 + 1e-12)
    return out


@dataclass(frozen=True)
class ReferenceCurves:
    x: float
    u: float
    delta: float
    erdos_murty: float
    x_quarter: float
    u_x_quarter: float
    u_x_quarter_over_log: float
    log_x: float

    def as_dict(self) -> dict:
        return asdict(self)


def reference_curves(x: float, u: float, delta: float) -> ReferenceCurves:
    if x <= 1 or delta <= 0:
        raise ValueError("need x > 1 and delta > 0")
    lx = math.log(x)
    q = x**0.25
    return ReferenceCurves(
        x=x, u=u, delta=delta,
        erdos_murty=math.sqrt(x) / lx ** (1 + delta),
        x_quarter=q,
        u_x_quarter=u * q,
        u_x_quarter_over_log=u * q / lx,
        log_x=lx,
    )


@dataclass
class BoundReport:
    a: int
    u: int
    x: int
    delta: float
    alpha: float
    rows: list[dict]
    aggregates: dict


def bound_report(a: int, u: int, x: int, delta: float = 0.1, alpha: float = 0.1,
                 threads: int = 1, rows: Sequence[PrimeRow] | None = None) -> BoundReport:
    rows = prime_rows(a, x, threads) if rows is None else rows
    per_prime = [
        {
            "p": r.p, "f_p": r.f_p, "e_p": r.e_p,
            "floor_u_f": u // r.f_p, "u_f": u % r.f_p,
            "sum_abs_eta": r.sum_abs_eta, "B_p": r.B_p, "max_abs_eta": r.max_abs_eta,
        }
        for r in rows
    ]
    agg = bound_terms(rows, u)
    agg["S_x"] = S_of_x(a, x)
    agg["W_x"] = W_of_x(a, x)
    if x >= 3:
        agg.update({f"curve_{k}": v for k, v in reference_curves(x, u, delta).as_dict().items()
                    if k not in ("x", "u", "delta")})
    agg["B_lt_A_paper"] = agg["bound_B_paper"] < agg["bound_A_paper"]
    agg["B_lt_A_explicit"] = agg["bound_B_explicit"] < agg["bound_A_explicit"]
    return BoundReport(a=a, u=u, x=x, delta=delta, alpha=alpha, rows=per_prime, aggregates=agg)
