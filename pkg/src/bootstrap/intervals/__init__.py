"""置信区间：oracle 正态区间与三种 bootstrap 区间"""
import logging
from typing import Dict, List, Sequence, Tuple

from ...errors import InputError
from ..base import ConfidenceInterval, IntervalMethod, PivotDraws, Side
from .base import MIN_B_FOR_CI, IntervalStrategy
from .factory import IntervalFactory

logger = logging.getLogger(__name__)

EMPTY_SUPPORT_FALLBACK = IntervalMethod.PERCENTILE_T
NEEDS_SUPPORT = (IntervalMethod.ORACLE, IntervalMethod.STUDENT_RBREVE)


def plan_methods(
    methods: Sequence, fit
) -> Tuple[Dict[IntervalMethod, IntervalMethod], List[str]]:
    """
    请求的区间方法 -> 实际计算的方法

    Î 为空时 oracle 方差与 f̆、σ̆ 都无定义，oracle-normal 与 student-Rbreve
    改用 T* 上的 percentile 区间，并返回对应的警告文本。
    """
    plan: Dict[IntervalMethod, IntervalMethod] = {}
    notes: List[str] = []
    for method in (IntervalMethod.parse(m) for m in methods):
        if not fit.active_set and method in NEEDS_SUPPORT:
            plan[method] = EMPTY_SUPPORT_FALLBACK
            notes.append(
                f"empty active set: {method.value} is undefined, falling back to "
                f"{EMPTY_SUPPORT_FALLBACK.value}"
            )
            logger.warning(f"Î 为空，{method.value} 退化为 {EMPTY_SUPPORT_FALLBACK.value}")
        else:
            plan[method] = method
    return plan, notes


def ci_oracle(fit, data, spec, level=0.9, side=Side.TWO_SIDED, **kwargs) -> ConfidenceInterval:
    """正态临界值区间，方差由 Î 上的经验 C_n 代入"""
    return IntervalFactory.create(IntervalMethod.ORACLE).compute(
        fit, spec, level, side, data=data, **kwargs
    )


def ci_percentile_T(
    draws: PivotDraws, fit, spec, level=0.9, side=Side.TWO_SIDED, min_B: int = MIN_B_FOR_CI
) -> ConfidenceInterval:
    """基于 T* 分位数的 percentile 区间"""
    return IntervalFactory.create(IntervalMethod.PERCENTILE_T).compute(
        fit, spec, level, side, draws=draws, min_B=min_B
    )


def ci_student(
    draws: PivotDraws,
    fit,
    spec,
    level=0.9,
    side=Side.TWO_SIDED,
    method=IntervalMethod.STUDENT_R,
    min_B: int = MIN_B_FOR_CI,
) -> ConfidenceInterval:
    """基于 R* 或 R̆* 分位数的 percentile-t 区间"""
    method = IntervalMethod.parse(method)
    if method not in (IntervalMethod.STUDENT_R, IntervalMethod.STUDENT_RBREVE):
        raise InputError(f"ci_student handles student-R / student-Rbreve, got {method.value}")
    return IntervalFactory.create(method).compute(fit, spec, level, side, draws=draws, min_B=min_B)


__all__ = [
    "EMPTY_SUPPORT_FALLBACK",
    "NEEDS_SUPPORT",
    "plan_methods",
    "MIN_B_FOR_CI",
    "IntervalStrategy",
    "IntervalFactory",
    "ci_oracle",
    "ci_percentile_T",
    "ci_student",
]
