"""置信区间策略实现"""
from .oracle import OracleNormalInterval
from .percentile import PercentileTInterval, PivotQuantileInterval
from .student import StudentRInterval, StudentRbreveInterval

__all__ = [
    "OracleNormalInterval",
    "PercentileTInterval",
    "PivotQuantileInterval",
    "StudentRInterval",
    "StudentRbreveInterval",
]
