"""原始枢轴 T_n"""
from ...estimators import AlassoFit
from ..base import PivotKind, PivotStrategy
from ..quantities import pivot_T


class RawTPivot(PivotStrategy):
    kind = PivotKind.RAW_T

    def evaluate(self, fit: AlassoFit, data, spec, center):
        return pivot_T(fit, spec, center)
