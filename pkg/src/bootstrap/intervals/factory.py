"""置信区间策略工厂"""
from ...errors import UnknownVariant
from ..base import IntervalMethod
from .base import IntervalStrategy
from .strategies import (
    OracleNormalInterval,
    PercentileTInterval,
    StudentRbreveInterval,
    StudentRInterval,
)


class IntervalFactory:
    """置信区间策略工厂"""

    _strategies = {
        IntervalMethod.ORACLE.value: OracleNormalInterval,
        IntervalMethod.PERCENTILE_T.value: PercentileTInterval,
        IntervalMethod.STUDENT_R.value: StudentRInterval,
        IntervalMethod.STUDENT_RBREVE.value: StudentRbreveInterval,
    }

    _aliases = {"oracle": "oracle-normal", "percentile": "percentile-T"}

    @classmethod
    def create(cls, method) -> IntervalStrategy:
        """
        创建区间策略实例

        Args:
            method: "oracle-normal" | "percentile-T" | "student-R" | "student-Rbreve"

        Returns:
            IntervalStrategy 实例
        """
        name = method.value if isinstance(method, IntervalMethod) else str(method)
        name = cls._aliases.get(name, name)
        if name not in cls._strategies:
            raise UnknownVariant(
                f"Unknown interval method: {name}. "
                f"Available strategies: {list(cls._strategies.keys())}"
            )
        return cls._strategies[name]()

    @classmethod
    def register_strategy(cls, name: str, strategy_class: type):
        """注册新的区间策略（插件机制）"""
        cls._strategies[name] = strategy_class

    @classmethod
    def list_strategies(cls) -> list:
        """返回所有可用的策略名称"""
        return list(cls._strategies.keys())
