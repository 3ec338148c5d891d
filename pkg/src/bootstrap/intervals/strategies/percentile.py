"""基于 bootstrap 枢轴分位数的区间

枢轴 P = (√n(θ̂ − θ) + f)/s 反解得 θ = θ̂ + (f − s·P)/√n，
三种方法只在 (f, s) 上不同：
    percentile-T:   f = 0, s = 1
    student-R:      f = 0, s = σ̂
    student-Rbreve: f = f̆, s = σ̆
"""
import math
from typing import Tuple

import numpy as np

from ....errors import InputError, ParameterOutOfRange
from ....pivots import PivotKind
from ....utils import empirical_quantile
from ...base import ConfidenceInterval, IntervalMethod, PivotDraws, Side
from ..base import MIN_B_FOR_CI, IntervalStrategy, check_level, check_scalar


class PivotQuantileInterval(IntervalStrategy):
    """分位数反解的公共实现"""

    kind: PivotKind

    def shift_and_scale(self, draws: PivotDraws, fit) -> Tuple[float, float]:
        raise NotImplementedError

    def compute(self, fit, spec, level, side, *, data=None, draws=None, min_B=MIN_B_FOR_CI):
        if draws is None:
            raise InputError(f"{self.method.value} needs bootstrap draws")
        if draws.kind is not self.kind:
            raise InputError(
                f"{self.method.value} needs {self.kind.value} draws, got {draws.kind.value}"
            )
        if draws.B < min_B:
            raise ParameterOutOfRange(f"B = {draws.B} is below the minimum {min_B} for intervals")
        level = check_level(level)
        side = Side.parse(side)
        check_scalar(spec)

        point = float(spec.point(fit.beta_hat)[0])
        f, s = self.shift_and_scale(draws, fit)
        sample = draws.values[:, 0]
        root_n = math.sqrt(fit.n)
        alpha = 1.0 - level

        if side is Side.TWO_SIDED:
            lower = point + (f - s * empirical_quantile(sample, 1.0 - alpha / 2.0)) / root_n
            upper = point + (f - s * empirical_quantile(sample, alpha / 2.0)) / root_n
        elif side is Side.SYMMETRIC:
            c = empirical_quantile(np.abs(sample), level)
            lower = point + (f - s * c) / root_n
            upper = point + (f + s * c) / root_n
        elif side is Side.LOWER_BOUND:
            lower = point + (f - s * empirical_quantile(sample, level)) / root_n
            upper = math.inf
        else:
            lower = -math.inf
            upper = point + (f - s * empirical_quantile(sample, alpha)) / root_n

        warnings = ()
        if draws.flagged:
            warnings = (f"{draws.failures} failed bootstrap replicates were re-drawn",)
        if draws.caveat:
            warnings = warnings + (draws.caveat,)
        return ConfidenceInterval(
            lower=lower, upper=upper, level=level, side=side, method=self.method,
            point_estimate=point, warnings=warnings,
        )


class PercentileTInterval(PivotQuantileInterval):
    method = IntervalMethod.PERCENTILE_T
    kind = PivotKind.RAW_T

    def shift_and_scale(self, draws, fit):
        return 0.0, 1.0
