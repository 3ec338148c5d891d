"""估计量数据结构与初始估计策略基类"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from ..data import RegressionDataset
from ..errors import ZeroInitialComponent


class InitialMethod(str, Enum):
    OLS = "ols"
    LASSO = "lasso"


def _frozen(a) -> NDArray[np.float64]:
    arr = np.array(a, dtype=np.float64, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class InitialEstimate:
    """初始估计 β̃ 及其来源"""

    beta_tilde: NDArray[np.float64]
    method: InitialMethod
    stabilizer: float = 0.0
    lambda1: Optional[float] = None
    iterations: int = 0

    def __post_init__(self):
        object.__setattr__(self, "beta_tilde", _frozen(self.beta_tilde))
        if self.stabilizer < 0:
            raise ValueError(f"stabilizer must be >= 0, got {self.stabilizer}")

    def weights(self, gamma: float) -> NDArray[np.float64]:
        """自适应权重 w_j = (|β̃_j| + a_n)^{−γ}"""
        base = np.abs(self.beta_tilde) + self.stabilizer
        zero = np.flatnonzero(base == 0.0)
        if zero.size:
            raise ZeroInitialComponent(
                f"initial estimate is zero at coordinates {zero.tolist()} and a_n = 0"
            )
        return base ** (-float(gamma))

    def summary(self) -> Dict:
        return {
            "method": self.method.value,
            "lambda1": self.lambda1,
            "stabilizer": self.stabilizer,
            "iterations": self.iterations,
            "beta_tilde": self.beta_tilde.tolist(),
        }


@dataclass(frozen=True)
class AlassoFit:
    """ALASSO 拟合结果"""

    beta_hat: NDArray[np.float64]
    active_set: Tuple[int, ...]
    residuals: NDArray[np.float64]
    centered_residuals: NDArray[np.float64]
    sigma_hat_sq: float
    lam: float
    gamma: float
    weights: NDArray[np.float64]
    iterations: int
    converged: bool
    initial: Optional[InitialEstimate] = field(default=None, compare=False)

    def __post_init__(self):
        for name in ("beta_hat", "residuals", "centered_residuals", "weights"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))

    @property
    def n(self) -> int:
        return self.residuals.shape[0]

    @property
    def p(self) -> int:
        return self.beta_hat.shape[0]

    @property
    def sigma_hat(self) -> float:
        return float(np.sqrt(self.sigma_hat_sq))

    def summary(self, names: Tuple[str, ...] = ()) -> Dict:
        labels = names or tuple(f"x{j + 1}" for j in range(self.p))
        return {
            "coefficients": {labels[j]: float(self.beta_hat[j]) for j in range(self.p)},
            "active_set": [labels[j] for j in self.active_set],
            "sigma_hat_sq": self.sigma_hat_sq,
            "lambda": self.lam,
            "gamma": self.gamma,
            "iterations": self.iterations,
            "converged": self.converged,
            **({"initial": self.initial.summary()} if self.initial is not None else {}),
        }


def stabilizer_for(n: int, mode: str = "sqrt_n") -> float:
    """权重稳定项 a_n：'sqrt_n' 为 n^{−1/2}，'none' 为 0"""
    if mode in (None, "none", False):
        return 0.0
    if mode in ("sqrt_n", True):
        return float(n) ** -0.5
    raise ValueError(f"Unknown stabilizer mode: {mode}. Available modes: ['sqrt_n', 'none']")


class InitialEstimator(ABC):
    """初始估计策略抽象基类"""

    @abstractmethod
    def estimate(self, data: RegressionDataset) -> InitialEstimate:
        """
        计算初始估计 β̃

        Args:
            data: 回归数据集

        Returns:
            InitialEstimate 实例
        """
        pass

    @abstractmethod
    def get_name(self) -> str:
        """返回策略名称"""
        pass
