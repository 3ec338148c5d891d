"""估计量模块：OLS / LASSO 初始估计、Adaptive LASSO、交叉验证"""
from .base import AlassoFit, InitialEstimate, InitialEstimator, InitialMethod, stabilizer_for
from .coordinate_descent import SolverSettings, objective, weighted_l1_descent
from .strategies import LassoEstimator, OLSEstimator, fit_lasso, fit_ols
from .factory import InitialEstimatorFactory, initial_estimate
from .alasso import KKTReport, fit_alasso, fit_statistics, kkt_certificate
from .cv import CVResult, assign_folds, cross_validate, fold_initial_estimate, lambda_grid

__all__ = [
    "AlassoFit",
    "InitialEstimate",
    "InitialEstimator",
    "InitialMethod",
    "stabilizer_for",
    "SolverSettings",
    "objective",
    "weighted_l1_descent",
    "LassoEstimator",
    "OLSEstimator",
    "fit_lasso",
    "fit_ols",
    "InitialEstimatorFactory",
    "initial_estimate",
    "KKTReport",
    "fit_alasso",
    "fit_statistics",
    "kkt_certificate",
    "CVResult",
    "assign_folds",
    "cross_validate",
    "fold_initial_estimate",
    "lambda_grid",
]
