"""学生化 percentile-t 区间（R 与 R̆）"""
import math

from ....errors import DegenerateVariance, InputError
from ....pivots import PivotKind
from ...base import IntervalMethod
from .percentile import PivotQuantileInterval

VARIANCE_FLOOR = 1e-14


class StudentRInterval(PivotQuantileInterval):
    method = IntervalMethod.STUDENT_R
    kind = PivotKind.STUDENTIZED_R

    def shift_and_scale(self, draws, fit):
        if fit.sigma_hat_sq <= VARIANCE_FLOOR:
            raise DegenerateVariance(f"sigma_hat^2 = {fit.sigma_hat_sq:.3e} is degenerate")
        return 0.0, math.sqrt(fit.sigma_hat_sq)


class StudentRbreveInterval(PivotQuantileInterval):
    method = IntervalMethod.STUDENT_RBREVE
    kind = PivotKind.CORRECTED_RBREVE

    def shift_and_scale(self, draws, fit):
        correction = draws.observed_correction
        if correction is None:
            raise InputError("corrected draws carry no observed bias correction")
        if correction.sigma_breve_sq <= VARIANCE_FLOOR:
            raise DegenerateVariance(
                f"sigma_breve^2 = {correction.sigma_breve_sq:.3e} is degenerate"
            )
        return float(correction.f_breve[0]), math.sqrt(correction.sigma_breve_sq)
