"""枢轴量模块"""
from .base import BiasCorrection, PivotKind, PivotSpec, PivotStrategy, PopulationBias
from .quantities import (
    bias_correction,
    oracle_variance,
    pivot_R,
    pivot_Rbreve,
    pivot_T,
    population_bias,
)
from .factory import PivotFactory

__all__ = [
    "BiasCorrection",
    "PivotKind",
    "PivotSpec",
    "PivotStrategy",
    "PopulationBias",
    "bias_correction",
    "oracle_variance",
    "pivot_R",
    "pivot_Rbreve",
    "pivot_T",
    "population_bias",
    "PivotFactory",
]
