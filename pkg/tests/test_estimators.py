"""Tail-index estimators and the goodness-of-fit bootstrap."""

import math

import numpy as np
import pytest

import zenga.estimators as est_mod
from zenga import (
    Pareto,
    SortedSample,
    hill_estimator,
    lambda_curve,
    lambda_tail_index,
    pareto_gof_test,
)
from zenga.errors import DegeneracyError, DomainError
from zenga.estimators import _lambda_matrix


def _quantile_grid_sample(dist, n: int) -> SortedSample:
    return SortedSample(dist.quantile((np.arange(1, n + 1) - 0.5) / n))


# -- curve estimator -----------------------------------------------------------


def test_estimate_hand_example():
    s = SortedSample([1.0, 1.0, 2.0])
    curve = lambda_curve(s)
    est = lambda_tail_index(s)
    assert est.n == 3 and est.m == 2
    assert est.lambda_bar == np.mean(curve.values)
    assert est.alpha_hat == 1.0 / est.lambda_bar
    assert not est.suspect_infinite_mean


def test_estimate_recovers_pareto_alpha():
    s = SortedSample(Pareto(2.0, 1.0).sample(10_000, 42))
    est = lambda_tail_index(s)
    assert est.alpha_hat == pytest.approx(2.0, abs=0.15)
    assert est.lambda_bar == pytest.approx(0.5, abs=0.04)


def test_estimate_on_exact_quantile_grid():
    # a noise-free grid should sit very close to the true index
    est = lambda_tail_index(_quantile_grid_sample(Pareto(2.0, 1.0), 2000))
    assert est.alpha_hat == pytest.approx(2.0, abs=0.05)


def test_estimate_consistency_shrinks_with_n():
    # medians of |alpha_hat - 2| over 100 replications must fall with n
    dist = Pareto(2.0, 1.0)
    med = {}
    for n in (100, 1000, 10_000):
        errs = [
            abs(lambda_tail_index(SortedSample(dist.sample(n, 1000 * n + r))).alpha_hat - 2.0)
            for r in range(100)
        ]
        med[n] = float(np.median(errs))
    assert med[10_000] < med[1000] < med[100]


def test_degenerate_sample_raises():
    with pytest.raises(DegeneracyError):
        lambda_tail_index(SortedSample([5.5, 5.5, 5.5, 5.5]))
    with pytest.raises(DegeneracyError):
        lambda_tail_index(SortedSample(np.full(100, 0.1)))


def test_saturated_sample_sets_suspect_flag():
    # partial shares underflow to 0, the curve rounds to 1, alpha_hat to 1:
    # numerically indistinguishable from the infinite-mean boundary
    est = lambda_tail_index(SortedSample([1.0, 1e308]))
    assert est.alpha_hat == 1.0
    assert est.suspect_infinite_mean


def test_estimate_serialization():
    est = lambda_tail_index(SortedSample([1.0, 1.0, 2.0]))
    row = est.to_csv_row()
    assert est.CSV_HEADER.count(",") == row.count(",")
    assert row.endswith(",3,2,false")
    kv = est.to_kv_text()
    assert "alpha_hat=" in kv and kv.endswith("suspect_infinite_mean=false\n")
    assert float(row.split(",")[0]) == est.alpha_hat  # 17g round-trips


# -- Hill ------------------------------------------------------------------------


def test_hill_hand_example():
    # sample 1,2,4,8,16 with k=4: gamma = mean(log 2, log 4, log 8, log 16)
    h = hill_estimator(SortedSample([1.0, 2.0, 4.0, 8.0, 16.0]), 4)
    assert h.gamma_hat == pytest.approx(2.5 * math.log(2.0), rel=1e-13)
    assert h.alpha_hat == 1.0 / h.gamma_hat
    assert h.k == 4


def test_hill_k_bounds():
    s = SortedSample([1.0, 2.0, 3.0, 4.0])
    for bad in (0, -1, 4, 99):
        with pytest.raises(DomainError):
            hill_estimator(s, bad)
    with pytest.raises(DomainError):
        hill_estimator(s, 1.5)
    assert hill_estimator(s, 3).k == 3


def test_hill_tied_top_degeneracy():
    with pytest.raises(DegeneracyError):
        hill_estimator(SortedSample([1.0, 2.0, 3.0, 5.0, 5.0]), 1)


def test_hill_and_lambda_agree_on_pareto_grid():
    s = _quantile_grid_sample(Pareto(2.0, 1.0), 1000)
    a_lambda = lambda_tail_index(s).alpha_hat
    a_hill = hill_estimator(s, 100).alpha_hat
    assert abs(a_lambda - a_hill) < 0.2


def test_hill_ignores_left_truncation():
    # Hill sees only the top k+1 order statistics, so dropping the bottom
    # of the sample must not move it at all
    x = np.sort(Pareto(2.0, 1.0).sample(400, 8))
    full = hill_estimator(SortedSample(x), 40)
    cut = hill_estimator(SortedSample(x[200:]), 40)
    assert full == cut


# -- bootstrap matrix ---------------------------------------------------------------


def test_lambda_matrix_rows_match_lambda_curve_bitwise():
    gen = np.random.Generator(np.random.PCG64(3))
    x = gen.uniform(0.5, 9.0, size=(8, 37))
    lam = _lambda_matrix(x)
    for r in range(x.shape[0]):
        assert np.array_equal(lam[r], lambda_curve(SortedSample(x[r])).values)


# -- goodness of fit ------------------------------------------------------------------


def test_gof_validation():
    s = SortedSample(Pareto(2.0, 1.0).sample(50, 1))
    with pytest.raises(DomainError):
        pareto_gof_test(s, 98, 0)
    with pytest.raises(DomainError):
        pareto_gof_test(s, 99.5, 0)
    with pytest.raises(DomainError):
        pareto_gof_test(s, 99, -1)
    with pytest.raises(DegeneracyError):
        pareto_gof_test(SortedSample([2.0, 2.0]), 99, 0)


def test_gof_result_fields_and_determinism():
    s = SortedSample(Pareto(2.0, 1.0).sample(300, 21))
    r1 = pareto_gof_test(s, 99, 5)
    r2 = pareto_gof_test(s, 99, 5)
    assert r1 == r2
    assert r1.statistic > 0.0
    assert 0.0 < r1.p_value <= 1.0
    assert r1.n_boot == 99
    assert r1.statistic_name == "max_abs_deviation"
    assert r1.alpha_hat_null == lambda_tail_index(s).alpha_hat
    # add-one p-value granularity: p * (B + 1) is an integer count + 1
    assert (r1.p_value * 100.0) == pytest.approx(round(r1.p_value * 100.0), abs=1e-9)
    r3 = pareto_gof_test(s, 99, 6)
    assert r3.statistic == r1.statistic  # statistic depends on data only


def test_gof_batching_does_not_change_bytes(monkeypatch):
    s = SortedSample(Pareto(2.0, 1.0).sample(200, 33))
    whole = pareto_gof_test(s, 120, 9)
    monkeypatch.setattr(est_mod, "_BATCH_BUDGET", 1000)  # forces 5-row batches
    split = pareto_gof_test(s, 120, 9)
    assert whole == split


def test_gof_accepts_exact_pareto_grid():
    s = _quantile_grid_sample(Pareto(2.0, 1.0), 500)
    r = pareto_gof_test(s, 199, 20260814)
    assert r.p_value > 0.5


def test_gof_serialization():
    s = SortedSample(Pareto(2.0, 1.0).sample(200, 2))
    r = pareto_gof_test(s, 99, 3)
    row = r.to_csv_row()
    assert row.endswith(",max_abs_deviation")
    assert r.CSV_HEADER.split(",")[1] == "p_value"
    assert float(row.split(",")[1]) == r.p_value
