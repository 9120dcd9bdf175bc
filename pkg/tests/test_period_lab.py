import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinperiods.modular_core import UndefinedOrderError
from artinperiods.period_lab import (
    compute_periods,
    identity_residuals,
    partial_period_sums,
    period_for_residue,
    sine_step,
    trig_majorant,
    trig_majorants,
)

from oracles import periods_mp, primes_upto

ETA_PLUS = complex(-0.5, math.sqrt(7) / 2)   # coset {1, 2, 4}
ETA_MINUS = ETA_PLUS.conjugate()             # coset {3, 5, 6}


def test_periods_p7():
    ps = compute_periods(7, 2)
    assert ps.f_p == 3 and ps.e_p == 2
    got = {frozenset(ps.cosets.coset(i)): ps.eta[i - 1] for i in (1, 2)}
    assert got[frozenset({1, 2, 4})] == pytest.approx(ETA_PLUS, abs=1e-14)
    assert got[frozenset({3, 5, 6})] == pytest.approx(ETA_MINUS, abs=1e-14)
    assert abs(ETA_PLUS) ** 2 == pytest.approx(2)


def test_periods_degenerate():
    assert compute_periods(2, 3).eta.tolist() == pytest.approx([-1])
    assert compute_periods(5, 2).eta.tolist() == pytest.approx([-1])


def test_periods_reject_divisor():
    with pytest.raises(UndefinedOrderError):
        compute_periods(5, 10)


@pytest.mark.parametrize("p,a", [(7, 2), (13, 3), (31, 2), (41, 10), (73, 6), (101, 5)])
def test_periods_match_high_precision(p, a):
    ref = periods_mp(p, a)
    ps = compute_periods(p, a)
    for i in range(1, ps.e_p + 1):
        coset = frozenset(ps.cosets.coset(i))
        assert abs(ps.eta[i - 1] - ref[coset]) < 1e-13 * p


def test_period_for_residue():
    ps = compute_periods(7, 2)
    assert period_for_residue(ps, 4) == pytest.approx(ETA_PLUS)
    assert period_for_residue(ps, 6) == pytest.approx(ETA_MINUS)
    assert period_for_residue(compute_periods(5, 2), 3) == pytest.approx(-1)
    with pytest.raises(ValueError):
        period_for_residue(ps, 14)


def test_partial_sums_p7():
    pp = partial_period_sums(compute_periods(7, 2))
    assert pp.h.tolist() == [3, 6, 2, 5, 1, 4]
    r2 = math.sqrt(2)
    assert np.abs(pp.P[:5]).tolist() == pytest.approx([r2, 2 * r2, 2, math.sqrt(11), 2 * r2])
    assert pp.B_p == pytest.approx(5 * r2 + 2 + math.sqrt(11), abs=1e-12)
    assert pp.B_p == pytest.approx(12.3876, abs=1e-4)
    assert complex(pp.P[-1]) == pytest.approx(-3)


def test_partial_sums_single_coset():
    pp = partial_period_sums(compute_periods(5, 2))
    assert pp.h.tolist() == [4, 3, 2, 1]
    assert pp.P.tolist() == pytest.approx([-1, -2, -3, -4])
    assert pp.B_p == pytest.approx(6)


def test_partial_sums_p2():
    pp = partial_period_sums(compute_periods(2, 5))
    assert pp.h.tolist() == [1]
    assert pp.P.tolist() == pytest.approx([-1])
    assert pp.B_p == 0


def _majorant_brute(p, a, k):
    f = next(j for j in range(1, p) if pow(a, j, p) == 1)
    return sum(abs(math.sin(math.pi * pow(a, j) * f * k / p) / math.sin(math.pi * pow(a, j) * f / p))
               for j in range(1, f + 1))


def test_trig_majorant_p5():
    ps = compute_periods(5, 2)
    value = trig_majorant(ps, 2)
    # 2 * (sqrt5 - 1)/2 + 2 * (sqrt5 + 1)/2
    assert value == pytest.approx(2 * math.sqrt(5), abs=1e-12)
    assert value == pytest.approx(_majorant_brute(5, 2, 2), abs=1e-9)
    assert abs(partial_period_sums(ps).P[1]) <= value


def test_trig_majorant_p7():
    ps = compute_periods(7, 2)
    assert trig_majorant(ps, 1) >= math.sqrt(2)
    assert trig_majorant(ps, 1) == pytest.approx(_majorant_brute(7, 2, 1), abs=1e-9)


def test_trig_majorant_range():
    ps = compute_periods(7, 2)
    with pytest.raises(ValueError):
        trig_majorant(ps, 6)
    assert trig_majorants(compute_periods(2, 3)).size == 0


def test_identity_residuals_examples():
    for p, a in [(7, 2), (5, 2)]:
        ps = compute_periods(p, a)
        r = identity_residuals(ps, partial_period_sums(ps))
        assert r.max() <= 1e-12
    ps = compute_periods(2, 3)
    assert identity_residuals(ps, partial_period_sums(ps)).max() <= 1e-15


def test_twisted_sum_single_coset():
    # sum_m (-1) zeta^{-h_m} over h_m = 1..4 equals 1 = 5 - 4
    z = cmath.exp(2j * math.pi / 5)
    assert sum(-(z ** -h) for h in range(1, 5)) == pytest.approx(1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(primes_upto(600)), st.sampled_from([2, 3, 5, 6, 7, 10, 12, 15]))
def test_period_invariants(p, a):
    if a % p == 0:
        return
    ps = compute_periods(p, a)
    pp = partial_period_sums(ps)
    f = ps.f_p
    assert np.all(np.isfinite(ps.eta))
    assert np.all(np.abs(ps.eta) <= f + 1e-9)
    assert sorted(pp.h.tolist()) == list(range(1, p))
    assert pp.B_p >= 0
    assert identity_residuals(ps, pp).max() <= 1e-8 * p
    step = sine_step(p, f)
    conj = ps.roots[(p - pp.h) % p]
    assert np.allclose(np.abs(conj[:-1] - conj[1:]), step, atol=1e-12)
    assert step <= 2 * math.pi * f / p
    if p > 2:
        assert np.all(np.abs(pp.P[: p - 2]) <= trig_majorants(ps) + 1e-8 * p)
