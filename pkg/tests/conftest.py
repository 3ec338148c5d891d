"""共享测试夹具"""
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config import Config
from src.data import RegressionDataset
from src.estimators import fit_alasso, fit_ols, objective
from src.simulation import ScenarioFactory, generate_scenario_data
from src.storage import JSONReportStore, write_dataset
from src.utils import RngStream

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def rng():
    return RngStream(12345).generator()


def make_linear_data(rng, n=60, p=6, beta=None, sigma=0.5) -> RegressionDataset:
    """独立正态设计的线性模型"""
    if beta is None:
        beta = np.zeros(p)
        beta[:3] = (3.0, -2.0, 1.5)
    X = rng.standard_normal((n, p))
    y = X @ beta + sigma * rng.standard_normal(n)
    return RegressionDataset(X, y)


@pytest.fixture
def small_data(rng):
    return make_linear_data(rng)


@pytest.fixture
def small_fit(small_data):
    init = fit_ols(small_data)
    return fit_alasso(small_data, init, lam=2.0 * small_data.n**0.25)


@pytest.fixture
def case_a():
    """情形 (a) 的第 0 个 MC 重复"""
    sc = ScenarioFactory.create("a", mc_reps=4, B=120)
    data, beta = generate_scenario_data(sc, 0)
    return sc, data, beta


@pytest.fixture
def csv_file(tmp_path, rng):
    data = make_linear_data(rng, n=50, p=5)
    data = RegressionDataset(data.X, data.y, names=("a", "b", "c", "d", "e"), response_name="y")
    return write_dataset(data, tmp_path / "linear.csv")


@pytest.fixture
def config_file(tmp_path):
    """指向临时输出目录的配置文件"""
    path = tmp_path / "config.yaml"
    path.write_text(
        "\n".join(
            [
                "bootstrap:",
                "  B: 120",
                "  workers: 1",
                "simulation:",
                "  mc_reps: 3",
                "  reduced_mc_reps: 2",
                "storage:",
                "  backend: json",
                "  json:",
                f"    output_dir: {tmp_path / 'reports'}",
                "",
            ]
        ),
        encoding="utf-8",
    )
    return path


@pytest.fixture
def config(config_file):
    return Config(str(config_file))


@pytest.fixture
def store(tmp_path):
    return JSONReportStore({"output_dir": str(tmp_path / "reports")})


def lattice_minimizer(G, c, penalty, center, radius, cond, steps=(0.05, 0.005, 0.001)):
    """
    在 h·Z^p 格点上由粗到细穷举 u′Gu − 2c′u + Σpenalty_j|u_j|

    每一层的窗口半径取 h_prev/2·√(p·cond) + 2h_prev，格点始终包含 0。
    """
    p = len(center)
    lo, hi = np.asarray(center) - radius, np.asarray(center) + radius
    best = None
    for level, h in enumerate(steps):
        if level:
            r = steps[level - 1] / 2.0 * np.sqrt(p * cond) + 2.0 * steps[level - 1]
            lo, hi = best - r, best + r
        axes = [h * np.arange(np.floor(a / h), np.ceil(b / h) + 1.0) for a, b in zip(lo, hi)]
        U = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, p)
        values = np.einsum("ij,jk,ik->i", U, G, U) - 2.0 * U @ c + np.abs(U) @ penalty
        best = U[int(np.argmin(values))]
    return best


def assert_matches_lattice(data, lam, gamma=1.0):
    """OLS 初始估计（a_n = 0）下 fit_alasso 与格点穷举一致"""
    init = fit_ols(data, stabilizer="none")
    fit = fit_alasso(data, init, lam, gamma)
    penalty = lam * fit.weights
    G, c = data.X.T @ data.X, data.X.T @ data.y
    eigen = np.linalg.eigvalsh(G)
    cond = eigen[-1] / eigen[0]
    ols = init.beta_tilde
    radius = np.sqrt(np.sum(penalty * np.abs(ols)) / eigen[0]) + 0.05
    best = lattice_minimizer(G, c, penalty, ols, radius, cond)
    scale = 1.0 + float(data.y @ data.y)
    assert objective(data.X, data.y, fit.beta_hat, penalty) <= (
        objective(data.X, data.y, best, penalty) + 1e-9 * scale
    )
    assert np.linalg.norm(fit.beta_hat - best) <= max(0.002, 0.0005 * np.sqrt(data.p * cond))


@pytest.fixture
def lattice_check():
    return assert_matches_lattice
