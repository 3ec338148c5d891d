"""偏差修正的学生化枢轴 R̆_n"""
from ...estimators import AlassoFit
from ..base import PivotKind, PivotStrategy
from ..quantities import bias_correction, pivot_Rbreve


class CorrectedRbrevePivot(PivotStrategy):
    """每次计算都用当前拟合（含其初始估计）重建 f̆ 与 σ̆"""

    kind = PivotKind.CORRECTED_RBREVE

    def evaluate(self, fit: AlassoFit, data, spec, center):
        correction = bias_correction(fit, fit.initial, data, spec)
        return pivot_Rbreve(fit, correction, spec, center)
