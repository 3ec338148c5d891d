"""LASSO 初始估计（p > n 时使用）"""
import numpy as np

from ...data import RegressionDataset
from ...errors import ParameterOutOfRange
from ..base import InitialEstimate, InitialEstimator, InitialMethod, stabilizer_for
from ..coordinate_descent import weighted_l1_descent


def fit_lasso(
    data: RegressionDataset,
    lambda1: float,
    *,
    stabilizer: str = "sqrt_n",
    tol: float = 1e-10,
    max_iter: int = 10000,
    check_objective: bool = False,
    start=None,
) -> InitialEstimate:
    """
    最小化 Σ(y_i − x_i′u)² + λ₁Σ|u_j|

    λ₁ ≥ 2‖X′y‖_max 时解为 0。
    """
    if not lambda1 > 0:
        raise ParameterOutOfRange(f"lambda1 must be positive, got {lambda1}")
    penalty = np.full(data.p, float(lambda1))
    result = weighted_l1_descent(
        data.X,
        data.y,
        penalty,
        tol=tol,
        max_iter=max_iter,
        start=start,
        check_objective=check_objective,
    )
    return InitialEstimate(
        beta_tilde=result.beta,
        method=InitialMethod.LASSO,
        stabilizer=stabilizer_for(data.n, stabilizer),
        lambda1=float(lambda1),
        iterations=result.iterations,
    )


class LassoEstimator(InitialEstimator):
    """LASSO(λ₁) 初始估计策略"""

    def __init__(self, lambda1: float, stabilizer: str = "sqrt_n", **solver_kwargs):
        self.lambda1 = lambda1
        self.stabilizer = stabilizer
        self.solver_kwargs = solver_kwargs

    def estimate(self, data: RegressionDataset) -> InitialEstimate:
        return fit_lasso(data, self.lambda1, stabilizer=self.stabilizer, **self.solver_kwargs)

    def get_name(self) -> str:
        return "lasso"
