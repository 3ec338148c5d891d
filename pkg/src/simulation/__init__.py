"""模拟场景与 Monte Carlo 覆盖率研究"""
from .scenarios import (
    BOOTSTRAP_STREAM,
    CV_STREAM,
    DATA_STREAM,
    Scenario,
    ScenarioFactory,
    draw_errors,
    generate_scenario_data,
    preset,
)
from .coverage import (
    CoverageCell,
    CoverageReport,
    ReplicateRecord,
    StudySettings,
    aggregate,
    run_coverage_study,
    run_replicate,
    tune_and_fit,
)
from .studies import PINNED_FIELDS, STUDIES, list_studies, pinned_fields, study_rows
from .formatters import format_coverage_table

__all__ = [
    "BOOTSTRAP_STREAM",
    "CV_STREAM",
    "DATA_STREAM",
    "Scenario",
    "ScenarioFactory",
    "draw_errors",
    "generate_scenario_data",
    "preset",
    "CoverageCell",
    "CoverageReport",
    "ReplicateRecord",
    "StudySettings",
    "aggregate",
    "run_coverage_study",
    "run_replicate",
    "tune_and_fit",
    "STUDIES",
    "PINNED_FIELDS",
    "list_studies",
    "pinned_fields",
    "study_rows",
    "format_coverage_table",
]
