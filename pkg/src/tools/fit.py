"""fit 命令 - 读取 CSV、标准化并拟合 ALASSO"""
from typing import Any, Dict

from ..estimators import SolverSettings, fit_statistics, kkt_certificate
from ..storage import ReportStore
from .base import CommandResult, CommandTool
from .pipeline import FitOptions, fit_dataset, load_dataset


class FitTool(CommandTool):
    """拟合工具"""

    name = "fit"

    def __init__(self, config, storage: ReportStore, solver: SolverSettings):
        super().__init__(config, storage)
        self.solver = solver

    def resolve(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        tuning = self.config.get_tuning_config()
        cv = self.config.get_cv_config()
        solver = self.config.get_solver_config()
        return {
            "response": "y",
            "standardize": "unitnorm",
            "gamma": float(tuning["gamma"]),
            "variant": tuning["variant"],
            "cv": False,
            "folds": int(cv["folds"]),
            "grid_size": int(cv["grid_size"]),
            "grid_ratio": float(cv["grid_ratio"]),
            "stabilizer": solver["stabilizer"],
            "seed": 0,
            **arguments,
        }

    def default_stem(self, arguments: Dict[str, Any]) -> str:
        return f"fit-{arguments.get('response', 'y')}-seed{arguments['seed']}"

    def run(self, arguments: Dict[str, Any]) -> CommandResult:
        data = load_dataset(arguments["csv_path"], arguments["response"], arguments["standardize"])
        outcome = fit_dataset(data, FitOptions.from_arguments(arguments), self.solver)
        fit = outcome.fit
        kkt = kkt_certificate(fit, data)
        labels = data.names or tuple(f"x{j + 1}" for j in range(data.p))
        original = None
        if data.column_scale is not None:
            coef, intercept = data.column_scale.to_original(fit.beta_hat)
            original = {
                "intercept": intercept,
                "coefficients": {labels[j]: float(coef[j]) for j in range(data.p)},
            }
        payload = {
            "n": data.n,
            "p": data.p,
            "standardization": data.column_scale.to_dict() if data.column_scale else {"mode": "none"},
            "fit": fit.summary(data.names),
            "original_scale": original,
            "tuning": outcome.tuning,
            "kkt": kkt.to_dict(),
            "statistics": {
                "alasso": fit_statistics(fit.beta_hat, data),
                "initial": fit_statistics(outcome.init.beta_tilde, data),
            },
        }
        return CommandResult(
            payload=payload,
            inputs=[arguments["csv_path"]],
            seeds={"cv": arguments["seed"]},
            summary={
                "active_set": [data.names[j] for j in fit.active_set],
                "lambda": fit.lam,
                "sigma_hat_sq": fit.sigma_hat_sq,
            },
        )
