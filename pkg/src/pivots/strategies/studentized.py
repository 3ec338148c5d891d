"""标量学生化枢轴 R_n = T_n / σ̂_n"""
from ...estimators import AlassoFit
from ..base import PivotKind, PivotStrategy
from ..quantities import pivot_R


class StudentizedRPivot(PivotStrategy):
    kind = PivotKind.STUDENTIZED_R

    def evaluate(self, fit: AlassoFit, data, spec, center):
        return pivot_R(fit, spec, center)
