"""正态临界值（oracle）区间"""
import logging
import math

from scipy.stats import norm

from ....errors import InputError
from ....pivots import oracle_variance
from ...base import ConfidenceInterval, IntervalMethod, Side
from ..base import IntervalStrategy, check_level, check_scalar

logger = logging.getLogger(__name__)


class OracleNormalInterval(IntervalStrategy):
    """β̂_D ± z·sqrt(σ̂²D̆C̆₁₁⁻¹D̆′)/√n"""

    method = IntervalMethod.ORACLE

    def compute(self, fit, spec, level, side, *, data=None, draws=None, min_B=0, **kwargs):
        if data is None:
            raise InputError("the oracle interval needs the observed dataset")
        level = check_level(level)
        side = Side.parse(side)
        check_scalar(spec)
        point = float(spec.point(fit.beta_hat)[0])
        variance = float(oracle_variance(fit, data, spec, **kwargs)[0, 0])
        warnings = ()
        if variance <= 0.0:
            warnings = ("degenerate oracle variance; point interval returned",)
            logger.warning("oracle 方差为 0，返回退化的点区间")
            variance = 0.0
        se = math.sqrt(variance) / math.sqrt(fit.n)
        if side in (Side.TWO_SIDED, Side.SYMMETRIC):
            z = float(norm.ppf(1.0 - (1.0 - level) / 2.0))
            lower, upper = point - z * se, point + z * se
        elif side is Side.LOWER_BOUND:
            lower, upper = point - float(norm.ppf(level)) * se, math.inf
        else:
            lower, upper = -math.inf, point + float(norm.ppf(level)) * se
        return ConfidenceInterval(
            lower=lower, upper=upper, level=level, side=side, method=self.method,
            point_estimate=point, warnings=warnings,
        )
