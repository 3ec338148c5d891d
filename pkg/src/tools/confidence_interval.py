"""ci 命令 - 拟合 + 残差 bootstrap + 置信区间"""
import logging
from typing import Any, Dict, List

from ..bootstrap import (
    BootstrapEngine,
    IntervalFactory,
    IntervalMethod,
    Side,
    plan_methods,
    run_bootstrap_multi,
)
from ..errors import EmptyActiveSet
from ..estimators import SolverSettings
from ..pivots import PivotSpec
from ..simulation import BOOTSTRAP_STREAM
from ..storage import ReportStore
from ..utils import RngStream
from .base import CommandResult, CommandTool
from .fit import FitTool
from .pipeline import FitOptions, fit_dataset, load_dataset

logger = logging.getLogger(__name__)

ALL = "all"


class ConfidenceIntervalTool(CommandTool):
    """置信区间工具"""

    name = "ci"

    def __init__(self, config, storage: ReportStore, solver: SolverSettings, engine: BootstrapEngine):
        super().__init__(config, storage)
        self.solver = solver
        self.engine = engine
        self._fit_defaults = FitTool(config, storage, solver)

    def resolve(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        resolved = self._fit_defaults.resolve(arguments)
        return {
            "coordinate": ALL,
            "method": "student-R",
            "level": 0.9,
            "side": "two-sided",
            "B": self.engine.B,
            "workers": self.engine.workers,
            "refit_initial": self.engine.refit_initial,
            "trace_bound": float(self.config.get_pivots_config()["trace_bound"]),
            **resolved,
        }

    def default_stem(self, arguments: Dict[str, Any]) -> str:
        return f"ci-{arguments['coordinate']}-{arguments['method']}-seed{arguments['seed']}"

    @staticmethod
    def _methods(value) -> List[IntervalMethod]:
        if value == ALL:
            return list(IntervalMethod)
        if isinstance(value, str):
            value = [v.strip() for v in value.split(",") if v.strip()]
        return [IntervalMethod.parse(v) for v in value]

    def run(self, arguments: Dict[str, Any]) -> CommandResult:
        data = load_dataset(arguments["csv_path"], arguments["response"], arguments["standardize"])
        outcome = fit_dataset(data, FitOptions.from_arguments(arguments), self.solver)
        fit = outcome.fit

        if arguments["coordinate"] == ALL:
            if not fit.active_set:
                raise EmptyActiveSet(
                    "no variables were selected; pass an explicit --coordinate or lower --lambda"
                )
            targets = list(fit.active_set)
        else:
            targets = [data.column_index(arguments["coordinate"])]

        plan, warnings = plan_methods(self._methods(arguments["method"]), fit)

        spec = PivotSpec.coordinates(targets, data.p, trace_bound=arguments["trace_bound"])
        kinds = list(dict.fromkeys(m.pivot_kind for m in plan.values() if m.pivot_kind is not None))
        seed = RngStream(arguments["seed"]).substream(BOOTSTRAP_STREAM)
        draws = {}
        if kinds:
            config = self.engine.make_config(
                seed,
                B=arguments["B"],
                workers=arguments["workers"],
                refit_initial=arguments["refit_initial"],
                lambda1=outcome.tuning.get("lambda1"),
            )
            draws = run_bootstrap_multi(data, fit, config, spec, kinds)

        side = Side.parse(arguments["side"])
        intervals = []
        for i, j in enumerate(targets):
            row = spec.row(i)
            for method, used in plan.items():
                kind = used.pivot_kind
                ci = IntervalFactory.create(used).compute(
                    fit,
                    row,
                    arguments["level"],
                    side,
                    data=data,
                    draws=draws[kind].coordinate(i) if kind is not None else None,
                    min_B=self.engine.min_B,
                )
                intervals.append(
                    {
                        "coordinate": data.names[j],
                        "index": j,
                        "requested_method": method.value,
                        **ci.to_dict(),
                    }
                )

        any_draws = next(iter(draws.values()), None)
        payload = {
            "fit": fit.summary(data.names),
            "tuning": outcome.tuning,
            "B": arguments["B"],
            "seed": arguments["seed"],
            "level": arguments["level"],
            "side": side.value,
            "intervals": intervals,
            "warnings": warnings,
            "failed_replicates": any_draws.failures if any_draws is not None else 0,
            "bootstrap": any_draws.summary() if any_draws is not None else None,
        }
        if any_draws is not None and any_draws.selection_frequency is not None:
            payload["selection_frequency"] = {
                data.names[j]: float(any_draws.selection_frequency[j]) for j in range(data.p)
            }
        return CommandResult(
            payload=payload,
            inputs=[arguments["csv_path"]],
            seeds={"bootstrap": seed.to_dict(), "cv": arguments["seed"]},
            summary={"intervals": len(intervals), "warnings": warnings},
        )
