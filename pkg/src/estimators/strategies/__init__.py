"""初始估计策略实现"""
from .ols import OLSEstimator, fit_ols
from .lasso import LassoEstimator, fit_lasso

__all__ = [
    "OLSEstimator",
    "LassoEstimator",
    "fit_ols",
    "fit_lasso",
]
