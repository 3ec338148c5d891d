"""枢轴量策略实现"""
from .raw_t import RawTPivot
from .studentized import StudentizedRPivot
from .corrected import CorrectedRbrevePivot

__all__ = [
    "RawTPivot",
    "StudentizedRPivot",
    "CorrectedRbrevePivot",
]
