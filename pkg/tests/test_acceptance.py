"""长时间运行的覆盖率与数据分析检查

默认跳过，用 pytest -m slow 运行。
"""
import math
from pathlib import Path

import numpy as np
import pytest
from scipy.stats import norm

from src.bootstrap import BootstrapConfig, IntervalMethod, Side, ci_oracle, run_bootstrap_multi
from src.data import RegressionDataset, standardize
from src.diagnostics import theoretical_lambda
from src.edgeworth import build_spec, ee_cdf
from src.estimators import fit_alasso, fit_lasso, fit_ols, initial_estimate, kkt_certificate
from src.pivots import PivotKind, PivotSpec
from src.simulation import ScenarioFactory, StudySettings, generate_scenario_data, run_coverage_study
from src.storage import read_dataset
from src.storage.fixtures import PROSTATE_RESPONSE, prostate_like
from src.utils import RngStream

pytestmark = pytest.mark.slow

DATA_DIR = Path(__file__).parent / "data"
PROSTATE_CSV = DATA_DIR / "prostate.csv"


@pytest.fixture(scope="module")
def case_a_report():
    sc = ScenarioFactory.create("a", mc_reps=500, B=500, targets=(0, 3))
    return run_coverage_study(sc, StudySettings(workers=4))


def test_case_a_first_coordinate_coverage(case_a_report):
    assert case_a_report.failures <= 10
    student = case_a_report.cell(0, "student-R", "two-sided")
    corrected = case_a_report.cell(0, "student-Rbreve", "two-sided")
    assert abs(student.coverage - 0.918) <= 0.04
    assert abs(corrected.coverage - 0.900) <= 0.04


def test_case_a_fourth_coordinate_corrected_coverage(case_a_report):
    corrected = case_a_report.cell(3, "student-Rbreve", "two-sided")
    assert abs(corrected.coverage - 0.944) <= 0.05


def test_bootstrap_two_sided_coverage_is_not_below_oracle(case_a_report):
    oracle = case_a_report.cell(0, "oracle-normal", "two-sided").coverage
    for method in ("student-R", "student-Rbreve"):
        assert case_a_report.cell(0, method, "two-sided").coverage >= oracle - 0.05


def test_corrected_pivot_is_no_worse_than_raw_percentile(case_a_report):
    corrected = case_a_report.cell(0, "student-Rbreve", "lower-bound").coverage
    raw = case_a_report.cell(0, "percentile-T", "lower-bound").coverage
    assert abs(corrected - 0.9) <= abs(raw - 0.9) + 0.05


def test_case_b_student_coverage():
    sc = ScenarioFactory.create("b", mc_reps=200, B=300)
    report = run_coverage_study(sc, StudySettings(workers=4))
    assert report.failures <= 4
    assert 0.83 <= report.cell(0, "student-R", "two-sided").coverage <= 0.95


def test_selection_keeps_true_support():
    sc = ScenarioFactory.create("a", mc_reps=300)
    support = set(sc.support)
    exact = {"sqrt_n": 0, "none": 0}
    covered = {"sqrt_n": 0, "none": 0}
    for i in range(sc.mc_reps):
        data, _ = generate_scenario_data(sc, i)
        for stabilizer in exact:
            fit = fit_alasso(data, fit_ols(data, stabilizer=stabilizer), sc.lambda2(), sc.gamma)
            selected = set(fit.active_set)
            covered[stabilizer] += support <= selected
            exact[stabilizer] += selected == support
    assert covered["sqrt_n"] >= 0.95 * sc.mc_reps
    assert covered["none"] >= 0.95 * sc.mc_reps
    # a_n > 0 限制了零系数的最大权重，更容易保留多余变量
    assert exact["none"] > exact["sqrt_n"]


def test_solver_matches_lattice_on_small_instances(lattice_check):
    rng = np.random.default_rng(2013)
    checked = 0
    while checked < 50:
        n, p = int(rng.integers(5, 9)), int(rng.integers(1, 4))
        X = rng.standard_normal((n, p))
        if np.linalg.cond(X.T @ X) > 10.0:
            continue
        beta = rng.normal(0.0, 1.5, p) * (rng.uniform(size=p) < 0.7)
        data = RegressionDataset(X, X @ beta + 0.5 * rng.standard_normal(n))
        lattice_check(data, float(rng.uniform(0.5, 6.0)))
        checked += 1


def test_kkt_certificates_on_random_instances():
    rng = np.random.default_rng(97)
    for _ in range(100):
        n = int(rng.integers(20, 201))
        p = int(rng.integers(2, min(50, n - 5) + 1))
        X = rng.standard_normal((n, p))
        beta = rng.normal(0.0, 2.0, p) * (rng.uniform(size=p) < 0.4)
        data = RegressionDataset(X, X @ beta + rng.standard_normal(n))
        fit = fit_alasso(data, fit_ols(data), 2.0 * n**0.25)
        assert kkt_certificate(fit, data).ok


def test_orthogonal_closed_forms():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        n, p = int(rng.integers(10, 60)), int(rng.integers(1, 8))
        Q, _ = np.linalg.qr(rng.standard_normal((n, p)))
        X = math.sqrt(n) * Q
        data = RegressionDataset(X, X @ rng.normal(0.0, 1.0, p) + rng.standard_normal(n))
        z = X.T @ data.y

        lambda1 = float(rng.uniform(0.1, 3.0 * np.max(np.abs(z))))
        lasso = fit_lasso(data, lambda1)
        expected = np.sign(z) * np.maximum(np.abs(z) - lambda1 / 2.0, 0.0) / n
        np.testing.assert_allclose(lasso.beta_tilde, expected, rtol=0.0, atol=1e-10)

        init = fit_ols(data)
        lam = float(rng.uniform(0.1, 20.0))
        fit = fit_alasso(data, init, lam)
        expected = np.sign(z) * np.maximum(np.abs(z) - lam * fit.weights / 2.0, 0.0) / n
        np.testing.assert_allclose(fit.beta_hat, expected, rtol=0.0, atol=1e-10)


@pytest.mark.xfail(
    strict=False,
    reason="the bias term enters the expansion at twice the first-order shift of the "
    "unhalved criterion; see DESIGN.md",
)
def test_edgeworth_pi_beats_normal_on_case_a():
    sc = ScenarioFactory.create("a")
    data, beta = generate_scenario_data(sc, 0)
    lam = sc.lambda2()
    spec = PivotSpec.coordinate(0, data.p)
    ee = build_spec(data, beta, lam, sc.gamma, spec, (1.0, 0.0), support=sc.support)

    rng = RngStream(10_000).generator()
    mean = data.X @ beta
    values = np.empty(10_000)
    for r in range(values.size):
        replicate = RegressionDataset(data.X, mean + rng.standard_normal(data.n))
        fit = fit_alasso(replicate, fit_ols(replicate), lam)
        values[r] = math.sqrt(data.n) * (fit.beta_hat[0] - beta[0]) / fit.sigma_hat
    values.sort()
    grid = np.linspace(values[50], values[-51], 41)
    empirical = np.searchsorted(values, grid, side="right") / values.size
    pi_cdf = np.array([ee_cdf("pi", (-math.inf, x), ee) for x in grid])
    normal_cdf = norm.cdf(grid, scale=math.sqrt(ee.upsilon))
    assert np.max(np.abs(pi_cdf - empirical)) < np.max(np.abs(normal_cdf - empirical))


def _prostate():
    if PROSTATE_CSV.exists():
        raw = read_dataset(PROSTATE_CSV, response=PROSTATE_RESPONSE)
    else:
        raw = prostate_like()
    data = standardize(raw.X, raw.y, "unitnorm", names=raw.names, response_name=raw.response_name)
    return raw, data


def test_prostate_intervals_are_well_formed():
    _, data = _prostate()
    init = initial_estimate(data)
    fit = fit_alasso(data, init, theoretical_lambda(data.n, "alasso", "unit-norm-data"))
    assert fit.active_set
    j = fit.active_set[0]
    spec = PivotSpec.coordinate(j, data.p)
    draws = run_bootstrap_multi(
        data, fit, BootstrapConfig(B=500, seed=RngStream(2013)), spec,
        [PivotKind.STUDENTIZED_R, PivotKind.CORRECTED_RBREVE],
    )
    oracle = ci_oracle(fit, data, spec, level=0.9, side=Side.TWO_SIDED)
    assert oracle.lower < fit.beta_hat[j] < oracle.upper
    assert draws[PivotKind.STUDENTIZED_R].B == 500
    assert IntervalMethod.STUDENT_R.pivot_kind is PivotKind.STUDENTIZED_R


@pytest.mark.skipif(not PROSTATE_CSV.exists(), reason="tests/data/prostate.csv is not present")
def test_prostate_selection_and_lcavol_estimate():
    raw, data = _prostate()
    fit = fit_alasso(data, initial_estimate(data), theoretical_lambda(data.n, "alasso", "unit-norm-data"))
    selected = {data.names[j] for j in fit.active_set}
    assert {"lcavol", "lweight", "svi"} <= selected
    coef, _ = data.column_scale.to_original(fit.beta_hat)
    j = data.names.index("lcavol")
    # 按每个标准差报告
    assert coef[j] * raw.X[:, j].std(ddof=1) == pytest.approx(0.688, abs=0.02)
