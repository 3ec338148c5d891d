"""diagnose 命令 - 正则条件诊断"""
from typing import Any, Dict

import numpy as np

from ..diagnostics import diagnose
from ..estimators import SolverSettings
from ..pivots import PivotSpec
from ..simulation import CV_STREAM, ScenarioFactory, generate_scenario_data
from ..storage import ReportStore
from ..utils import RngStream
from .base import CommandResult, CommandTool
from .fit import FitTool
from .pipeline import FitOptions, fit_dataset, load_dataset


class DiagnoseTool(CommandTool):
    """条件诊断工具"""

    name = "diagnose"

    def __init__(self, config, storage: ReportStore, solver: SolverSettings):
        super().__init__(config, storage)
        self.solver = solver
        self._fit_defaults = FitTool(config, storage, solver)

    def resolve(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        diag = self.config.get_diagnostics_config()
        resolved = {
            "coordinate": "0",
            "delta": float(diag["delta"]),
            "a": float(diag["a"]),
            "b": float(diag["b"]),
            "rep_index": 0,
            **arguments,
        }
        if resolved.get("csv_path"):
            resolved = self._fit_defaults.resolve(resolved)
        return resolved

    def default_stem(self, arguments: Dict[str, Any]) -> str:
        source = arguments.get("preset") or "data"
        return f"diagnose-{source}-seed{arguments.get('seed', 0)}"

    def run(self, arguments: Dict[str, Any]) -> CommandResult:
        common = {"delta": arguments["delta"], "a": arguments["a"], "b": arguments["b"]}
        if arguments.get("preset"):
            sc = ScenarioFactory.create(arguments["preset"], seed=arguments.get("seed"))
            seed = RngStream(sc.seed)
            data, beta = generate_scenario_data(sc, int(arguments["rep_index"]), seed)
            spec = PivotSpec.coordinate(data.column_index(arguments["coordinate"]), data.p)
            report = diagnose(
                data,
                sc.support,
                spec,
                mode="simulation",
                beta=beta,
                lam=sc.lambda2(),
                gamma=sc.gamma,
                residuals=data.y - data.X @ beta,
                **common,
            )
            inputs, seeds = [], {"scenario": sc.seed, "rep_index": int(arguments["rep_index"])}
        else:
            data = load_dataset(arguments["csv_path"], arguments["response"], arguments["standardize"])
            fit = fit_dataset(data, FitOptions.from_arguments(arguments), self.solver).fit
            spec = PivotSpec.coordinate(data.column_index(arguments["coordinate"]), data.p)
            report = diagnose(
                data,
                fit.active_set,
                spec,
                mode="data",
                beta=np.asarray(fit.beta_hat),
                lam=fit.lam,
                gamma=fit.gamma,
                residuals=fit.centered_residuals,
                **common,
            )
            inputs = [arguments["csv_path"]]
            seeds = {"cv": RngStream(arguments["seed"]).substream(CV_STREAM).to_dict()}
        return CommandResult(
            payload=report.to_dict(),
            inputs=inputs,
            seeds=seeds,
            summary={"verdicts": dict(report.verdicts)},
        )
