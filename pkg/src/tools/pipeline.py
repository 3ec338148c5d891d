"""数据命令共用的读取与拟合流程"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from ..data import RegressionDataset, standardize
from ..diagnostics import lambda_rule, theoretical_lambda
from ..errors import UnknownVariant
from ..estimators import (
    AlassoFit,
    InitialEstimate,
    SolverSettings,
    cross_validate,
    fit_alasso,
    initial_estimate,
    lambda_grid,
)
from ..simulation import CV_STREAM
from ..storage import read_dataset
from ..utils import RngStream

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FitOptions:
    lam: Optional[float] = None
    lambda1: Optional[float] = None
    gamma: float = 1.0
    cv: bool = False
    folds: int = 5
    grid_size: int = 30
    grid_ratio: float = 1e-3
    variant: str = "unit-norm-data"
    stabilizer: str = "sqrt_n"
    seed: int = 0

    @classmethod
    def from_arguments(cls, arguments: Dict) -> "FitOptions":
        names = cls.__dataclass_fields__.keys()
        return cls(**{k: arguments[k] for k in names if arguments.get(k) is not None})


@dataclass
class FitOutcome:
    init: InitialEstimate
    fit: AlassoFit
    tuning: Dict = field(default_factory=dict)


def load_dataset(path: str, response: str = "y", mode: str = "unitnorm") -> RegressionDataset:
    raw = read_dataset(path, response)
    return standardize(raw.X, raw.y, mode, names=raw.names, response_name=raw.response_name)


def rule_for(stage: str, variant: str) -> Tuple[float, float]:
    """按变体取理论规则 (K, c)；该变体没有此阶段的规则时退回 simulation 规则"""
    try:
        return lambda_rule(stage, variant)
    except UnknownVariant:
        return lambda_rule(stage, "simulation")


def rule_lambda(n: int, stage: str, variant: str) -> float:
    """按变体取理论 λ，规则的选择同 rule_for"""
    try:
        return theoretical_lambda(n, stage, variant)
    except UnknownVariant:
        return theoretical_lambda(n, stage, "simulation")


def fit_dataset(
    data: RegressionDataset, options: FitOptions, solver: SolverSettings
) -> FitOutcome:
    """
    选择 λ₁（仅 p > n）与 λ₂ 并拟合 ALASSO

    优先级：显式给定 > 交叉验证（options.cv）> 理论规则
    """
    kwargs = solver.as_kwargs()
    cv_stream = RngStream(options.seed).substream(CV_STREAM)
    tuning: Dict = {"variant": options.variant, "cv": options.cv}

    lambda1 = None
    if data.p > data.n:
        if options.lambda1 is not None:
            lambda1, source = float(options.lambda1), "explicit"
        elif options.cv:
            grid = lambda_grid(data, options.grid_size, options.grid_ratio, stage="lasso")
            result = cross_validate(data, grid, options.folds, "lasso", cv_stream.substream(0), **kwargs)
            lambda1, source = result.chosen, "cv"
            tuning["cv_lambda1"] = result.to_dict()
        else:
            lambda1, source = rule_lambda(data.n, "lasso-initial", options.variant), "theoretical"
        tuning.update({"lambda1": lambda1, "lambda1_source": source})

    init = initial_estimate(data, lambda1, options.stabilizer, **kwargs)

    if options.lam is not None:
        lam, source = float(options.lam), "explicit"
    elif options.cv:
        grid = lambda_grid(
            data, options.grid_size, options.grid_ratio, stage="alasso", weights=init.weights(options.gamma)
        )
        result = cross_validate(
            data,
            grid,
            options.folds,
            "alasso-given-init",
            cv_stream.substream(1),
            gamma=options.gamma,
            lambda1=lambda1,
            lambda1_rule=rule_for("lasso-initial", options.variant),
            stabilizer=options.stabilizer,
            **kwargs,
        )
        lam, source = result.chosen, "cv"
        tuning["cv_lambda"] = result.to_dict()
    else:
        lam, source = rule_lambda(data.n, "alasso", options.variant), "theoretical"
    tuning.update({"lambda": lam, "lambda_source": source})

    fit = fit_alasso(data, init, lam, options.gamma, **kwargs)
    logger.info(f"ALASSO 拟合完成: lambda={lam:.6g} ({source}), |I|={len(fit.active_set)}")
    return FitOutcome(init=init, fit=fit, tuning=tuning)


def names_for(data: RegressionDataset, indices) -> Tuple[str, ...]:
    return tuple(data.names[j] for j in indices)
