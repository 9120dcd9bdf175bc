import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from artinperiods import bound_engine as be
from artinperiods.estimators import (
    BOUND_COLUMNS,
    PeriodFeatures,
    CountingBounds,
    ratio_to_quarter_power,
)


def test_period_features_values():
    out = PeriodFeatures(a=2).fit_transform([[3], [5], [7]])
    assert out.shape == (3, 5)
    assert out[:, 0].tolist() == [2, 4, 3]
    assert out[2, 2] == pytest.approx(2 * np.sqrt(2))
    assert out[2, 4] == pytest.approx(12.3876, abs=1e-4)


def test_period_features_validation():
    pf = PeriodFeatures(a=10)
    with pytest.raises(ValueError, match="dividing"):
        pf.fit([3, 5])
    with pytest.raises(ValueError, match="not prime"):
        PeriodFeatures().fit([3, 9])
    with pytest.raises(NotFittedError):
        PeriodFeatures().transform([3])


def test_params_and_clone():
    est = CountingBounds(a=3, x=50, threads=1)
    assert est.get_params() == {"a": 3, "x": 50, "delta": 0.1, "alpha": 0.1, "threads": 1}
    twin = clone(est).set_params(x=60)
    assert twin.x == 60 and est.x == 50


def test_bounds_transform_matches_functions():
    est = CountingBounds(a=2, x=10, threads=1).fit()
    table = est.transform([1, 4])
    cols = dict(zip(BOUND_COLUMNS, table[1]))
    assert cols["D_exact"] == 4
    assert (cols["bound_A_explicit"], cols["bound_A_paper"]) == be.bound_A(2, 4, 10)
    assert (cols["bound_B_explicit"], cols["bound_B_paper"]) == be.bound_B(2, 4, 10)
    assert table[0, 0] == 0
    assert est.primes_ == [3, 5, 7]
    ratios = ratio_to_quarter_power(table)
    assert ratios.shape == (2, 4) and np.all(ratios >= 0) and np.all(ratios[1] > 0)


def test_bounds_in_pipeline():
    pipe = make_pipeline(CountingBounds(a=2, x=100, threads=1), StandardScaler())
    out = pipe.fit_transform(np.arange(1, 11).reshape(-1, 1))
    assert out.shape == (10, len(BOUND_COLUMNS))


def test_bounds_validation():
    with pytest.raises(ValueError):
        CountingBounds(alpha=0.9).fit()
    with pytest.raises(ValueError):
        CountingBounds(x=1).fit()
    with pytest.raises(ValueError):
        CountingBounds(x=10, threads=1).fit().transform([0])
    with pytest.raises(NotFittedError):
        CountingBounds().transform([1])


def test_report():
    rep = CountingBounds(a=2, x=10, threads=1).fit().report(4)
    assert rep.aggregates["D_exact"] == 4
