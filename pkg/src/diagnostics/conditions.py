"""正则条件的可计算替代量: 不可表示性、设计矩界、特征值范围、β-min 与 λ 窗口"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg as sla

from ..data import RegressionDataset
from ..errors import ParameterOutOfRange, SingularBlock, SingularSubmatrix
from ..pivots import PivotSpec
from ..utils import gram, smallest_eigenvalue, solve_spd, sym_eigen

logger = logging.getLogger(__name__)

MOMENT_ORDERS = (3, 4, 6, 8)
PASS, FAIL, NOT_CHECKABLE = "pass", "fail", "not-checkable"


@dataclass(frozen=True)
class ConditionReport:
    """条件诊断报告"""

    mode: str
    support: Tuple[int, ...]
    c1_delta: Optional[float]
    eta_n: float
    eta_11n: float
    c2_moment_bounds: Dict[int, float]
    c2_xtilde_bounds: Optional[Dict[int, float]]
    c2_prime_max_diag: Optional[float]
    c3_eigen_range: Tuple[float, float]
    c3_prime_min_eigen: Optional[float]
    c4_beta_min: Optional[float]
    c4_beta_max: Optional[float]
    c6_window: Optional[Tuple[float, float]]
    c6_window_empty: Optional[bool]
    lambda_scaled: Optional[float]
    error_moments: Dict[str, float]
    rate_exponents: Optional[Dict[str, float]]
    verdicts: Dict[str, str] = field(default_factory=dict)
    delta: float = 0.1

    def to_dict(self) -> Dict:
        return {
            "mode": self.mode,
            "support": list(self.support),
            "delta": self.delta,
            "c1_delta": self.c1_delta,
            "eta_n": self.eta_n,
            "eta_11n": self.eta_11n,
            "c2_moment_bounds": {str(r): v for r, v in self.c2_moment_bounds.items()},
            "c2_xtilde_bounds": (
                {str(r): v for r, v in self.c2_xtilde_bounds.items()}
                if self.c2_xtilde_bounds is not None else None
            ),
            "c2_prime_max_diag": self.c2_prime_max_diag,
            "c3_eigen_range": list(self.c3_eigen_range),
            "c3_prime_min_eigen": self.c3_prime_min_eigen,
            "c4_beta_min": self.c4_beta_min,
            "c4_beta_max": self.c4_beta_max,
            "c6_window": list(self.c6_window) if self.c6_window is not None else None,
            "c6_window_empty": self.c6_window_empty,
            "lambda_scaled": self.lambda_scaled,
            "error_moments": self.error_moments,
            "rate_exponents": self.rate_exponents,
            "verdicts": dict(self.verdicts),
        }


def _block_basis(X_block: np.ndarray, name: str) -> np.ndarray:
    if X_block.shape[1] == 0:
        raise SingularBlock(f"{name} block is empty")
    basis = sla.orth(X_block)
    if basis.shape[1] < X_block.shape[1]:
        raise SingularBlock(
            f"{name} block has rank {basis.shape[1]} < {X_block.shape[1]} columns"
        )
    return basis


def check_c1(data: RegressionDataset, support: Sequence[int]) -> float:
    """
    两组变量在 C_n 内积下的最大典型相关系数（= 最小可取的 δ）

    C_n 内积下 x′C₁₂y = (X₁x)′(X₂y)/n，因此等于两列空间主角余弦的最大值。
    """
    support = sorted(int(j) for j in support)
    rest = [j for j in range(data.p) if j not in set(support)]
    Q1 = _block_basis(data.X[:, support], "relevant")
    Q2 = _block_basis(data.X[:, rest], "irrelevant")
    singular = sla.svdvals(Q1.T @ Q2)
    return float(min(1.0, singular.max())) if singular.size else 0.0


def column_moments(X: np.ndarray, orders: Sequence[int] = MOMENT_ORDERS) -> Dict[int, float]:
    """max_j n⁻¹Σ_i |x_ij|^r"""
    return {int(r): float(np.max(np.mean(np.abs(X) ** r, axis=0))) for r in orders}


def c3_eigen_range(data: RegressionDataset, spec: PivotSpec, support: Sequence[int]) -> Tuple[float, float]:
    """D⁽¹⁾C₁₁⁻¹D⁽¹⁾′ 的最小、最大特征值"""
    S = list(support)
    C11 = gram(data.X)[np.ix_(S, S)]
    D1 = spec.D[:, S]
    try:
        M = D1 @ solve_spd(C11, D1.T)
    except Exception as e:
        raise SingularSubmatrix("C_11 is not invertible on the support") from e
    values, _ = sym_eigen(0.5 * (M + M.T))
    return float(values[0]), float(values[-1])


def sigma0_min_eigen(
    data: RegressionDataset,
    spec: PivotSpec,
    support: Sequence[int],
    sigma_sq: float,
    mu3: float,
    mu4: float,
) -> float:
    """(q+1)×(q+1) 矩阵 Σ⁽⁰⁾ 的最小特征值（学生化枢轴的特征值条件）"""
    S = list(support)
    C11 = gram(data.X)[np.ix_(S, S)]
    D1 = spec.D[:, S]
    xbar = data.X[:, S].mean(axis=0)
    q = spec.q
    Sigma0 = np.empty((q + 1, q + 1))
    Sigma0[:q, :q] = sigma_sq * (D1 @ solve_spd(C11, D1.T))
    cross = (D1 @ solve_spd(C11, xbar)) * mu3
    Sigma0[:q, q] = cross
    Sigma0[q, :q] = cross
    Sigma0[q, q] = mu4 - sigma_sq**2
    values, _ = sym_eigen(0.5 * (Sigma0 + Sigma0.T))
    return float(values[0])


def check_c6_window(
    n: int, p0: int, a: float, b: float, gamma: float, delta: float
) -> Tuple[float, float, bool]:
    """
    λ_n/√n 的可行区间

    upper = δ⁻¹n^{−δ}·min{n^{−bγ}/p₀, n^{−bγ−a/2}/√p₀, n^{−a}}
    lower = δn^{δ}·max{n^a p₀, p₀^{3/2}n^{b(1−γ)₊}}·n^{−γ/2}

    Returns:
        (lower, upper, empty)
    """
    if not 0.0 <= a <= 1.0:
        raise ParameterOutOfRange(f"a must lie in [0, 1], got {a}")
    if not 0.0 <= b < 0.5:
        raise ParameterOutOfRange(f"b must lie in [0, 1/2), got {b}")
    if not gamma > 0.0:
        raise ParameterOutOfRange(f"gamma must be positive, got {gamma}")
    if not 0.0 < delta < 1.0:
        raise ParameterOutOfRange(f"delta must lie in (0, 1), got {delta}")
    if p0 < 1 or n < 1:
        raise ParameterOutOfRange(f"n and p0 must be positive, got n={n}, p0={p0}")
    n = float(n)
    upper = (1.0 / delta) * n ** (-delta) * min(
        n ** (-b * gamma) / p0,
        n ** (-b * gamma - a / 2.0) / math.sqrt(p0),
        n ** (-a),
    )
    lower = delta * n**delta * max(
        n**a * p0, p0**1.5 * n ** (b * max(1.0 - gamma, 0.0))
    ) * n ** (-gamma / 2.0)
    return float(lower), float(upper), bool(lower > upper)


def rate_exponents(c: float, a: float, b: float, gamma: float) -> Dict[str, float]:
    """λ_n ≈ K n^c 时 oracle 正态近似误差的三个指数及主导项"""
    terms = {
        "sampling": -0.5,
        "bias": c + b * gamma - 0.5,
        "remainder": a + b * (gamma + 1.0) + c - 1.0,
    }
    dominant = max(terms, key=terms.get)
    return {**terms, "overall": terms[dominant], "dominant": dominant}


def error_moments(residuals: np.ndarray) -> Dict[str, float]:
    e = np.asarray(residuals, dtype=np.float64)
    e = e - e.mean()
    return {
        "sigma_sq": float(np.mean(e**2)),
        "mu3": float(np.mean(e**3)),
        "mu4": float(np.mean(e**4)),
    }


def diagnose(
    data: RegressionDataset,
    support: Sequence[int],
    spec: PivotSpec,
    *,
    mode: str = "data",
    beta: Optional[np.ndarray] = None,
    lam: Optional[float] = None,
    gamma: float = 1.0,
    a: float = 0.0,
    b: float = 0.0,
    delta: float = 0.1,
    residuals: Optional[np.ndarray] = None,
) -> ConditionReport:
    """
    汇总 c1–c6 各项诊断

    mode 为 "data" 时 support 取 Î，为 "simulation" 时取真实支撑集。
    c5、c7 无法从数据检验，标记为 not-checkable。
    """
    support = tuple(sorted(int(j) for j in support))
    verdicts: Dict[str, str] = {}
    C = gram(data.X)
    eta_n = smallest_eigenvalue(C)
    eta_11n = smallest_eigenvalue(C[np.ix_(support, support)]) if support else float("nan")

    c1 = None
    if support and len(support) < data.p:
        try:
            c1 = check_c1(data, support)
            verdicts["c1"] = PASS if c1 < 1.0 - 1e-8 else FAIL
        except SingularBlock as e:
            logger.warning(f"不可表示性条件无法计算: {e}")
            verdicts["c1"] = NOT_CHECKABLE
    else:
        verdicts["c1"] = NOT_CHECKABLE

    moments = column_moments(data.X)
    xtilde, max_diag = None, None
    if data.p <= data.n and eta_n > 0:
        X_tilde = solve_spd(C, data.X.T).T
        xtilde = column_moments(X_tilde)
    elif support:
        C11_inv = solve_spd(C[np.ix_(support, support)], np.eye(len(support)))
        max_diag = float(np.max(np.diag(C11_inv)))
    verdicts["c2"] = PASS if eta_11n > 0 and all(np.isfinite(list(moments.values()))) else FAIL

    eig_range = (float("nan"), float("nan"))
    if support:
        eig_range = c3_eigen_range(data, spec, support)
        verdicts["c3"] = PASS if eig_range[0] > delta and eig_range[1] < 1.0 / delta else FAIL
    else:
        verdicts["c3"] = NOT_CHECKABLE

    beta_min = beta_max = None
    if beta is not None and support:
        magnitudes = np.abs(np.asarray(beta, dtype=np.float64)[list(support)])
        beta_min, beta_max = float(magnitudes.min()), float(magnitudes.max())
        verdicts["c4"] = PASS if beta_min > 0 else FAIL
    else:
        verdicts["c4"] = NOT_CHECKABLE

    moments_e: Dict[str, float] = {}
    c3_prime = None
    if residuals is not None:
        moments_e = error_moments(residuals)
        if support and spec.q >= 1:
            c3_prime = sigma0_min_eigen(
                data, spec, support, moments_e["sigma_sq"], moments_e["mu3"], moments_e["mu4"]
            )
    verdicts["c5"] = NOT_CHECKABLE

    window, empty, scaled, rates = None, None, None, None
    if support:
        lower, upper, empty = check_c6_window(data.n, len(support), a, b, gamma, delta)
        window = (lower, upper)
    if lam is not None and window is not None:
        scaled = float(lam / math.sqrt(data.n))
        verdicts["c6"] = PASS if (not empty and window[0] <= scaled <= window[1]) else FAIL
        c = math.log(lam) / math.log(data.n) if lam > 0 and data.n > 1 else 0.0
        rates = rate_exponents(c, a, b, gamma)
    else:
        verdicts["c6"] = NOT_CHECKABLE
    verdicts["c7"] = NOT_CHECKABLE

    return ConditionReport(
        mode=mode,
        support=support,
        c1_delta=c1,
        eta_n=eta_n,
        eta_11n=eta_11n,
        c2_moment_bounds=moments,
        c2_xtilde_bounds=xtilde,
        c2_prime_max_diag=max_diag,
        c3_eigen_range=eig_range,
        c3_prime_min_eigen=c3_prime,
        c4_beta_min=beta_min,
        c4_beta_max=beta_max,
        c6_window=window,
        c6_window_empty=empty,
        lambda_scaled=scaled,
        error_moments=moments_e,
        rate_exponents=rates,
        verdicts=verdicts,
        delta=delta,
    )
