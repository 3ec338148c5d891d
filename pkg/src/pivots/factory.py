"""枢轴量策略工厂"""
from ..errors import UnknownVariant
from .base import PivotKind, PivotStrategy
from .strategies import CorrectedRbrevePivot, RawTPivot, StudentizedRPivot


class PivotFactory:
    """枢轴量策略工厂"""

    _strategies = {
        PivotKind.RAW_T.value: RawTPivot,
        PivotKind.STUDENTIZED_R.value: StudentizedRPivot,
        PivotKind.CORRECTED_RBREVE.value: CorrectedRbrevePivot,
    }

    @classmethod
    def create(cls, kind) -> PivotStrategy:
        """
        创建枢轴量策略实例

        Args:
            kind: "raw_T" | "studentized_R" | "corrected_Rbreve" 或 PivotKind

        Returns:
            PivotStrategy 实例
        """
        name = kind.value if isinstance(kind, PivotKind) else str(kind)
        if name not in cls._strategies:
            raise UnknownVariant(
                f"Unknown pivot kind: {name}. "
                f"Available strategies: {list(cls._strategies.keys())}"
            )
        return cls._strategies[name]()

    @classmethod
    def register_strategy(cls, name: str, strategy_class: type):
        """注册新的枢轴量策略（插件机制）"""
        cls._strategies[name] = strategy_class

    @classmethod
    def list_strategies(cls) -> list:
        """返回所有可用的策略名称"""
        return list(cls._strategies.keys())
