"""残差 bootstrap 与置信区间"""
from .base import (
    REUSE_CAVEAT,
    BootstrapConfig,
    ConfidenceInterval,
    IntervalMethod,
    PivotDraws,
    Side,
)
from .engine import (
    ReplicateOutcome,
    bootstrap_replicate,
    resample_errors,
    run_bootstrap,
    run_bootstrap_multi,
)
from .intervals import (
    EMPTY_SUPPORT_FALLBACK,
    MIN_B_FOR_CI,
    IntervalFactory,
    IntervalStrategy,
    ci_oracle,
    ci_percentile_T,
    ci_student,
    plan_methods,
)


class BootstrapEngine:
    """带默认设置的 bootstrap 组件（由初始化器创建）"""

    def __init__(self, config: dict, solver):
        self.B = int(config.get("B", 500))
        self.refit_initial = bool(config.get("refit_initial", True))
        self.failure_budget = float(config.get("failure_budget", 0.05))
        self.workers = int(config.get("workers", 1))
        self.min_B = int(config.get("min_B_for_ci", MIN_B_FOR_CI))
        self.solver = solver

    def make_config(self, seed, kind="raw_T", **overrides) -> BootstrapConfig:
        values = {
            "B": self.B,
            "refit_initial": self.refit_initial,
            "failure_budget": self.failure_budget,
            "workers": self.workers,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return BootstrapConfig(seed=seed, kind=kind, solver=self.solver, **values)

    def run(self, data, fit, config: BootstrapConfig, spec, kinds=None):
        if kinds is None:
            return run_bootstrap(data, fit, config, spec)
        return run_bootstrap_multi(data, fit, config, spec, kinds)


__all__ = [
    "REUSE_CAVEAT",
    "BootstrapConfig",
    "BootstrapEngine",
    "ConfidenceInterval",
    "IntervalMethod",
    "PivotDraws",
    "Side",
    "ReplicateOutcome",
    "bootstrap_replicate",
    "resample_errors",
    "run_bootstrap",
    "run_bootstrap_multi",
    "MIN_B_FOR_CI",
    "IntervalFactory",
    "IntervalStrategy",
    "ci_oracle",
    "ci_percentile_T",
    "ci_student",
    "plan_methods",
    "EMPTY_SUPPORT_FALLBACK",
]
