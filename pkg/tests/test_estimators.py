"""初始估计、坐标下降与 ALASSO"""
import numpy as np
import pytest

from src.data import RegressionDataset, standardize
from src.errors import (
    DimensionExceedsSample,
    NoConvergence,
    ParameterOutOfRange,
    UnknownVariant,
    ZeroInitialComponent,
)
from src.estimators import (
    InitialEstimate,
    InitialEstimatorFactory,
    InitialMethod,
    fit_alasso,
    fit_lasso,
    fit_ols,
    fit_statistics,
    initial_estimate,
    kkt_certificate,
    objective,
    weighted_l1_descent,
)


def _orthonormal_data(rng, n=40, p=4):
    Q, _ = np.linalg.qr(rng.standard_normal((n, p)))
    y = Q @ np.array([3.0, -1.0, 0.2, 0.0]) + 0.1 * rng.standard_normal(n)
    return RegressionDataset(Q, y)


def test_orthonormal_design_has_soft_threshold_solution(rng):
    data = _orthonormal_data(rng)
    init = fit_ols(data)
    lam = 0.5
    fit = fit_alasso(data, init, lam)
    z = data.X.T @ data.y
    expected = np.sign(z) * np.maximum(np.abs(z) - lam * fit.weights / 2.0, 0.0)
    np.testing.assert_allclose(fit.beta_hat, expected, atol=1e-9)


def test_fit_passes_kkt_certificate(small_data, small_fit):
    report = kkt_certificate(small_fit, small_data)
    assert report.ok
    assert report.max_violation <= report.tol


def test_kkt_certificate_flags_a_perturbed_solution(small_data, small_fit):
    perturbed = small_fit.beta_hat.copy()
    perturbed[0] += 0.5
    assert not kkt_certificate(small_fit, small_data, beta=perturbed).ok


def test_fit_recovers_true_support(small_data, small_fit):
    assert small_fit.active_set == (0, 1, 2)
    assert small_fit.centered_residuals.mean() == pytest.approx(0.0, abs=1e-12)
    assert small_fit.sigma_hat_sq == pytest.approx(np.mean(small_fit.centered_residuals**2))


def test_fit_is_deterministic(small_data):
    init = fit_ols(small_data)
    a = fit_alasso(small_data, init, 3.0)
    b = fit_alasso(small_data, init, 3.0)
    np.testing.assert_array_equal(a.beta_hat, b.beta_hat)


def test_objective_never_increases_during_descent(small_data):
    penalty = np.full(small_data.p, 4.0)
    result = weighted_l1_descent(small_data.X, small_data.y, penalty, check_objective=True)
    start = objective(small_data.X, small_data.y, np.zeros(small_data.p), penalty)
    assert objective(small_data.X, small_data.y, result.beta, penalty) <= start


def test_descent_reports_non_convergence(small_data):
    with pytest.raises(NoConvergence):
        weighted_l1_descent(small_data.X, small_data.y, np.full(small_data.p, 1e-3), tol=0.0, max_iter=2)


def test_lasso_with_large_lambda_is_zero(small_data):
    top = 2.0 * np.max(np.abs(small_data.X.T @ small_data.y))
    init = fit_lasso(small_data, top * 1.01)
    assert np.all(init.beta_tilde == 0.0)
    assert init.method is InitialMethod.LASSO


def test_ols_needs_p_at_most_n(rng):
    data = RegressionDataset(rng.standard_normal((5, 8)), rng.standard_normal(5))
    with pytest.raises(DimensionExceedsSample):
        fit_ols(data)


def test_initial_estimate_switches_to_lasso_when_p_exceeds_n(rng):
    data = RegressionDataset(rng.standard_normal((10, 20)), rng.standard_normal(10))
    init = initial_estimate(data, lambda1=1.0)
    assert init.method is InitialMethod.LASSO
    assert init.lambda1 == 1.0


def test_factory_rejects_unknown_strategy():
    with pytest.raises(UnknownVariant):
        InitialEstimatorFactory.create("ridge")
    assert set(InitialEstimatorFactory.list_strategies()) >= {"ols", "lasso"}


def test_zero_initial_component_without_stabilizer():
    init = InitialEstimate(beta_tilde=np.array([1.0, 0.0]), method=InitialMethod.OLS, stabilizer=0.0)
    with pytest.raises(ZeroInitialComponent):
        init.weights(1.0)


def test_weights_use_stabilizer(small_data):
    init = fit_ols(small_data)
    expected = (np.abs(init.beta_tilde) + small_data.n**-0.5) ** -2.0
    np.testing.assert_allclose(init.weights(2.0), expected)


def test_fit_rejects_non_positive_lambda(small_data):
    with pytest.raises(ParameterOutOfRange):
        fit_alasso(small_data, fit_ols(small_data), 0.0)


def test_fit_statistics(small_data, small_fit):
    stats = fit_statistics(small_fit.beta_hat, small_data)
    assert stats["model_size"] == len(small_fit.active_set)
    assert 0.0 < stats["r_squared"] <= 1.0
    assert stats["rss_per_dof"] == pytest.approx(stats["rss"] / (small_data.n - stats["model_size"]))


def test_unit_norm_standardization(rng):
    X = rng.standard_normal((30, 3)) * [1.0, 10.0, 0.1] + 5.0
    data = standardize(X, rng.standard_normal(30), "unitnorm")
    np.testing.assert_allclose(data.X.mean(axis=0), 0.0, atol=1e-12)
    np.testing.assert_allclose(np.linalg.norm(data.X, axis=0), 1.0)
    assert data.y.mean() == pytest.approx(0.0, abs=1e-12)


def test_unit_sd_standardization_uses_sample_sd(rng):
    data = standardize(rng.standard_normal((30, 3)), rng.standard_normal(30), "unitsd")
    np.testing.assert_allclose(data.X.std(axis=0, ddof=1), 1.0)


def test_zero_variance_column_is_kept_as_zeros(rng):
    X = np.column_stack([rng.standard_normal(20), np.full(20, 3.0)])
    data = standardize(X, rng.standard_normal(20))
    assert data.column_scale.zero_variance == (1,)
    assert np.all(data.X[:, 1] == 0.0)
    fit = fit_alasso(data, fit_lasso(data, 0.1), 0.1)
    assert fit.beta_hat[1] == 0.0


def test_unknown_standardization():
    with pytest.raises(UnknownVariant):
        standardize(np.eye(3), np.ones(3), "minmax")


def _well_conditioned_case(seed, n=40, p=3, max_cond=10.0):
    rng = np.random.default_rng(seed)
    while True:
        X = rng.standard_normal((n, p))
        G = X.T @ X
        if np.linalg.cond(G) <= max_cond:
            break
    beta = np.zeros(p)
    beta[:2] = (1.2, -0.5)
    y = X @ beta + rng.standard_normal(n)
    return RegressionDataset(X, y), float(rng.uniform(2.0, 12.0))


@pytest.mark.parametrize("seed", range(5))
def test_descent_agrees_with_lattice_search(seed, lattice_check):
    data, lam = _well_conditioned_case(seed)
    lattice_check(data, lam)


def test_vanishing_lambda_reproduces_ols(small_data):
    init = fit_ols(small_data)
    fit = fit_alasso(small_data, init, 1e-10)
    np.testing.assert_allclose(fit.beta_hat, init.beta_tilde, atol=1e-5)
    assert fit.active_set == tuple(range(small_data.p))


def test_coordinate_order_does_not_change_the_fit(small_data):
    init = fit_ols(small_data)
    forward = fit_alasso(small_data, init, 3.0)
    backward = fit_alasso(small_data, init, 3.0, order=list(reversed(range(small_data.p))))
    shuffled = fit_alasso(small_data, init, 3.0, order=[3, 0, 5, 1, 4, 2])
    np.testing.assert_allclose(backward.beta_hat, forward.beta_hat, atol=1e-7)
    np.testing.assert_allclose(shuffled.beta_hat, forward.beta_hat, atol=1e-7)
    assert backward.active_set == forward.active_set


def lasso_closed_form_case(rng, n=50, p=5):
    Q, _ = np.linalg.qr(rng.standard_normal((n, p)))
    X = np.sqrt(n) * Q
    y = X @ rng.normal(0.0, 1.0, p) + rng.standard_normal(n)
    return RegressionDataset(X, y), float(rng.uniform(1.0, 80.0))


@pytest.mark.parametrize("seed", range(3))
def test_lasso_orthogonal_design_closed_form(seed):
    data, lambda1 = lasso_closed_form_case(np.random.default_rng(seed))
    init = fit_lasso(data, lambda1)
    z = data.X.T @ data.y / data.n
    expected = np.sign(z) * np.maximum(np.abs(z) - lambda1 / (2.0 * data.n), 0.0)
    np.testing.assert_allclose(init.beta_tilde, expected, atol=1e-8)


@pytest.mark.parametrize("mode", ["unitnorm", "unitsd"])
def test_coefficients_map_back_to_original_scale(rng, mode):
    X = rng.standard_normal((40, 3)) * [1.0, 8.0, 0.2] + [2.0, -1.0, 5.0]
    y = X @ np.array([0.5, -0.1, 3.0]) + 4.0 + 0.3 * rng.standard_normal(40)
    data = standardize(X, y, mode)
    coef, intercept = data.column_scale.to_original(fit_ols(data).beta_tilde)
    expected, *_ = np.linalg.lstsq(np.column_stack([np.ones(40), X]), y, rcond=None)
    assert intercept == pytest.approx(expected[0])
    np.testing.assert_allclose(coef, expected[1:], rtol=1e-8)
