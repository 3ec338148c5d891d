"""simulate 命令 - Monte Carlo 覆盖率研究"""
import logging
from pathlib import Path
from typing import Any, Dict, List, Tuple

import yaml

from ..errors import InputError
from ..simulation import (
    Scenario,
    ScenarioFactory,
    StudySettings,
    format_coverage_table,
    pinned_fields,
    run_coverage_study,
    study_rows,
)
from ..storage import ReportStore
from ..utils import RngStream
from .base import CommandResult, CommandTool

logger = logging.getLogger(__name__)

REDUCED_PRESETS = ("b", "d")


class SimulateTool(CommandTool):
    """覆盖率研究工具"""

    name = "simulate"

    def __init__(self, config, storage: ReportStore, settings: StudySettings):
        super().__init__(config, storage)
        self.settings = settings

    def resolve(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        sources = [k for k in ("preset", "study", "scenario_file") if arguments.get(k)]
        if len(sources) != 1:
            raise InputError("simulate needs exactly one of preset, study or scenario_file")
        return {"workers": self.settings.workers, "full": False, **arguments}

    def default_stem(self, arguments: Dict[str, Any]) -> str:
        label = arguments.get("preset") or arguments.get("study") or Path(arguments["scenario_file"]).stem
        return f"simulate-{label}"

    def _overrides(self, arguments: Dict[str, Any], preset_name: str = "") -> Dict[str, Any]:
        sim = self.config.get_simulation_config()
        overrides = {k: arguments.get(k) for k in ("B", "seed", "tuning")}
        if arguments.get("mc_reps") is not None:
            overrides["mc_reps"] = int(arguments["mc_reps"])
        elif arguments.get("full") or preset_name not in REDUCED_PRESETS:
            overrides["mc_reps"] = int(sim["mc_reps"])
        else:
            overrides["mc_reps"] = int(sim["reduced_mc_reps"])
        return {k: v for k, v in overrides.items() if v is not None}

    def _rows(self, arguments: Dict[str, Any]) -> List[Tuple[str, Scenario]]:
        if arguments.get("preset"):
            name = arguments["preset"]
            base = ScenarioFactory.create(name, **self._overrides(arguments, name))
            return [(sc.name, sc) for sc in base.expand()]
        if arguments.get("study"):
            study = arguments["study"]
            pinned = pinned_fields(study)
            ignored = sorted(k for k in pinned if arguments.get(k) is not None)
            if ignored:
                logger.warning(f"研究方案 {study} 固定了 {ignored}，忽略命令行给出的值")
            rows = []
            for label, sc in study_rows(study):
                overrides = self._overrides(arguments, sc.name)
                rows.append((label, sc.replace(**{k: v for k, v in overrides.items() if k not in pinned})))
            return rows
        path = Path(arguments["scenario_file"])
        if not path.exists():
            raise InputError(f"scenario file not found: {path}")
        with open(path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
        base = Scenario.from_dict(raw).replace(**self._overrides(arguments))
        return [(sc.name, sc) for sc in base.expand()]

    def run(self, arguments: Dict[str, Any]) -> CommandResult:
        settings = StudySettings(
            solver=self.settings.solver,
            workers=int(arguments["workers"]),
            bootstrap_workers=self.settings.bootstrap_workers,
            failure_budget=self.settings.failure_budget,
            bootstrap_failure_budget=self.settings.bootstrap_failure_budget,
            min_B=self.settings.min_B,
        )
        reports = []
        for label, sc in self._rows(arguments):
            seed = RngStream(sc.seed)
            reports.append((label, run_coverage_study(sc, settings, seed)))

        payload = {
            "rows": [{"label": label, **report.to_dict()} for label, report in reports],
        }
        inputs = [arguments["scenario_file"]] if arguments.get("scenario_file") else []
        return CommandResult(
            payload=payload,
            text=format_coverage_table(reports),
            inputs=inputs,
            seeds={label: report.scenario.seed for label, report in reports},
            summary={
                "rows": len(reports),
                "runtime": {label: round(report.runtime, 3) for label, report in reports},
            },
        )
