"""命令工具模块"""
from .base import CommandResult, CommandTool
from .pipeline import FitOptions, FitOutcome, fit_dataset, load_dataset, rule_lambda
from .fit import FitTool
from .confidence_interval import ConfidenceIntervalTool
from .screen import ScreenTool, screen_correlation
from .simulate import SimulateTool
from .diagnose import DiagnoseTool
from .edgeworth import EdgeworthTool
from .replay import ReplayTool

__all__ = [
    "CommandResult",
    "CommandTool",
    "FitOptions",
    "FitOutcome",
    "fit_dataset",
    "load_dataset",
    "rule_lambda",
    "FitTool",
    "ConfidenceIntervalTool",
    "ScreenTool",
    "screen_correlation",
    "SimulateTool",
    "DiagnoseTool",
    "EdgeworthTool",
    "ReplayTool",
]
