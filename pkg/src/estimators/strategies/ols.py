"""OLS 初始估计（p ≤ n）"""
import numpy as np

from ...data import RegressionDataset
from ...errors import DimensionExceedsSample, SingularDesign
from ...utils import least_squares_qr
from ..base import InitialEstimate, InitialEstimator, InitialMethod, stabilizer_for

# X′X 最小特征值与最大特征值之比的下限
CONDITION_FLOOR = 1e-10


def fit_ols(data: RegressionDataset, *, stabilizer: str = "sqrt_n") -> InitialEstimate:
    """
    最小二乘初始估计 argmin ‖y − Xu‖²

    Raises:
        DimensionExceedsSample: p > n
        SingularDesign: X′X 近似奇异
    """
    if data.p > data.n:
        raise DimensionExceedsSample(
            f"OLS needs p <= n, got p={data.p}, n={data.n}; use the lasso initial estimator"
        )
    eig = np.linalg.eigvalsh(data.X.T @ data.X)
    if eig[-1] <= 0.0 or eig[0] <= CONDITION_FLOOR * eig[-1]:
        raise SingularDesign(
            f"X'X is numerically singular (eigenvalue range {eig[0]:.3e}..{eig[-1]:.3e})"
        )
    beta = least_squares_qr(data.X, data.y)
    return InitialEstimate(
        beta_tilde=beta,
        method=InitialMethod.OLS,
        stabilizer=stabilizer_for(data.n, stabilizer),
    )


class OLSEstimator(InitialEstimator):
    """OLS 初始估计策略"""

    def __init__(self, stabilizer: str = "sqrt_n"):
        self.stabilizer = stabilizer

    def estimate(self, data: RegressionDataset) -> InitialEstimate:
        return fit_ols(data, stabilizer=self.stabilizer)

    def get_name(self) -> str:
        return "ols"
