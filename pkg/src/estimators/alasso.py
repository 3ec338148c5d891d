"""Adaptive LASSO 求解与 KKT 证书"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from ..data import RegressionDataset
from ..errors import DimensionMismatch, ParameterOutOfRange
from .base import AlassoFit, InitialEstimate
from .coordinate_descent import weighted_l1_descent

logger = logging.getLogger(__name__)


def fit_alasso(
    data: RegressionDataset,
    init: InitialEstimate,
    lam: float,
    gamma: float = 1.0,
    *,
    tol: float = 1e-10,
    max_iter: int = 10000,
    start: Optional[NDArray[np.float64]] = None,
    order: Optional[Sequence[int]] = None,
    check_objective: bool = False,
) -> AlassoFit:
    """
    最小化 Σ(y_i − x_i′u)² + λΣ w_j|u_j|，w_j = (|β̃_j| + a_n)^{−γ}

    Args:
        data: 回归数据集
        init: 初始估计
        lam: 惩罚参数 λ > 0
        gamma: 权重指数 γ > 0
        start: 热启动系数（bootstrap 重拟合时使用 β̂）
        order: 坐标遍历顺序

    Returns:
        AlassoFit
    """
    if not lam > 0:
        raise ParameterOutOfRange(f"lambda must be positive, got {lam}")
    if not gamma > 0:
        raise ParameterOutOfRange(f"gamma must be positive, got {gamma}")
    if init.beta_tilde.shape[0] != data.p:
        raise DimensionMismatch(
            f"initial estimate has {init.beta_tilde.shape[0]} entries for p={data.p}"
        )
    weights = init.weights(gamma)
    result = weighted_l1_descent(
        data.X,
        data.y,
        lam * weights,
        tol=tol,
        max_iter=max_iter,
        start=start,
        order=order,
        check_objective=check_objective,
    )
    beta = result.beta
    residuals = data.y - data.X @ beta
    centered = residuals - residuals.mean()
    return AlassoFit(
        beta_hat=beta,
        active_set=tuple(int(j) for j in np.flatnonzero(beta != 0.0)),
        residuals=residuals,
        centered_residuals=centered,
        sigma_hat_sq=float(np.mean(centered**2)),
        lam=float(lam),
        gamma=float(gamma),
        weights=weights,
        iterations=result.iterations,
        converged=True,
        initial=init,
    )


@dataclass(frozen=True)
class KKTReport:
    """逐坐标 KKT 检查结果"""

    passed: Tuple[bool, ...]
    violations: Tuple[float, ...]
    tol: float

    @property
    def ok(self) -> bool:
        return all(self.passed)

    @property
    def max_violation(self) -> float:
        return max(self.violations) if self.violations else 0.0

    @property
    def failing(self) -> Tuple[int, ...]:
        return tuple(j for j, good in enumerate(self.passed) if not good)

    def to_dict(self) -> Dict:
        return {"ok": self.ok, "tol": self.tol, "max_violation": self.max_violation,
                "failing": list(self.failing)}


def kkt_scale(data: RegressionDataset) -> float:
    return 1.0 + float(np.max(np.abs(data.X.T @ data.y)))


def kkt_certificate(
    fit: AlassoFit,
    data: RegressionDataset,
    tol: Optional[float] = None,
    beta: Optional[NDArray[np.float64]] = None,
) -> KKTReport:
    """
    检查加权 ℓ1 问题的 KKT 条件

    j ∈ Î: |2x_j′(y − Xβ̂) − λw_j sgn(β̂_j)| ≤ tol
    j ∉ Î: |2x_j′(y − Xβ̂)| ≤ λw_j + tol

    tol 默认为 1e-6·(1 + ‖X′y‖_max)。传入 beta 时检查该系数而不是 fit.beta_hat。
    """
    if tol is None:
        tol = 1e-6 * kkt_scale(data)
    b = fit.beta_hat if beta is None else np.asarray(beta, dtype=np.float64)
    grad = 2.0 * (data.X.T @ (data.y - data.X @ b))
    bound = fit.lam * fit.weights
    passed, violations = [], []
    for j in range(data.p):
        if b[j] != 0.0:
            excess = abs(grad[j] - bound[j] * np.sign(b[j]))
        else:
            excess = max(0.0, abs(grad[j]) - bound[j])
        violations.append(float(excess))
        passed.append(bool(excess <= tol))
    return KKTReport(passed=tuple(passed), violations=tuple(violations), tol=float(tol))


def fit_statistics(beta: NDArray[np.float64], data: RegressionDataset) -> Dict[str, float]:
    """RSS/(n − |Î|) 与 R² = 1 − RSS/TSS"""
    residuals = data.y - data.X @ beta
    rss = float(residuals @ residuals)
    k = int(np.sum(beta != 0.0))
    dof = data.n - k
    centered_y = data.y - data.y.mean()
    tss = float(centered_y @ centered_y)
    return {
        "rss": rss,
        "model_size": k,
        "rss_per_dof": rss / dof if dof > 0 else float("inf"),
        "r_squared": 1.0 - rss / tss if tss > 0 else float("nan"),
    }
