"""置信区间策略抽象基类"""
from abc import ABC, abstractmethod
from typing import Optional

from ...data import RegressionDataset
from ...errors import ParameterOutOfRange
from ...estimators import AlassoFit
from ...pivots import PivotSpec
from ..base import ConfidenceInterval, IntervalMethod, PivotDraws, Side

MIN_B_FOR_CI = 100


def check_level(level: float) -> float:
    level = float(level)
    if not 0.0 < level < 1.0:
        raise ParameterOutOfRange(f"confidence level must lie in (0, 1), got {level}")
    return level


def check_scalar(spec: PivotSpec) -> None:
    if spec.q != 1:
        raise ParameterOutOfRange(f"intervals are built for q = 1, got q = {spec.q}")


class IntervalStrategy(ABC):
    """置信区间构造策略"""

    method: IntervalMethod

    @abstractmethod
    def compute(
        self,
        fit: AlassoFit,
        spec: PivotSpec,
        level: float,
        side: Side,
        *,
        data: Optional[RegressionDataset] = None,
        draws: Optional[PivotDraws] = None,
        min_B: int = MIN_B_FOR_CI,
    ) -> ConfidenceInterval:
        """
        构造区间

        Args:
            fit: 观测 ALASSO 拟合
            spec: q = 1 的 PivotSpec
            level: 名义水平
            side: 区间类型
            data: 观测数据（oracle 方法需要）
            draws: bootstrap 重复值（bootstrap 方法需要）

        Returns:
            ConfidenceInterval
        """
        pass

    def get_name(self) -> str:
        return self.method.value
