"""初始估计策略工厂"""
from typing import Dict, Optional

from ..data import RegressionDataset
from ..errors import InputError, UnknownVariant
from .base import InitialEstimate, InitialEstimator
from .strategies import LassoEstimator, OLSEstimator


class InitialEstimatorFactory:
    """初始估计策略工厂"""

    _strategies = {
        "ols": OLSEstimator,
        "lasso": LassoEstimator,
    }

    @classmethod
    def create(cls, strategy_name: str, config: Dict = None) -> InitialEstimator:
        """
        创建初始估计策略实例

        Args:
            strategy_name: 策略名称 ("ols" | "lasso")
            config: 策略参数，lasso 需要 lambda1

        Returns:
            InitialEstimator 实例
        """
        if strategy_name not in cls._strategies:
            raise UnknownVariant(
                f"Unknown initial estimator: {strategy_name}. "
                f"Available strategies: {list(cls._strategies.keys())}"
            )
        config = dict(config or {})
        strategy_class = cls._strategies[strategy_name]
        if strategy_name == "lasso":
            if config.get("lambda1") is None:
                raise InputError("the lasso initial estimator requires lambda1")
            return strategy_class(config.pop("lambda1"), **config)
        return strategy_class(**{k: v for k, v in config.items() if k == "stabilizer"})

    @classmethod
    def for_data(
        cls,
        data: RegressionDataset,
        lambda1: Optional[float] = None,
        stabilizer: str = "sqrt_n",
        **solver_kwargs,
    ) -> InitialEstimator:
        """p ≤ n 时用 OLS，否则用 LASSO(λ₁)"""
        if data.p <= data.n:
            return cls.create("ols", {"stabilizer": stabilizer})
        return cls.create("lasso", {"lambda1": lambda1, "stabilizer": stabilizer, **solver_kwargs})

    @classmethod
    def register_strategy(cls, name: str, strategy_class: type):
        """注册新的初始估计策略（插件机制）"""
        cls._strategies[name] = strategy_class

    @classmethod
    def list_strategies(cls) -> list:
        """返回所有可用的策略名称"""
        return list(cls._strategies.keys())


def initial_estimate(
    data: RegressionDataset,
    lambda1: Optional[float] = None,
    stabilizer: str = "sqrt_n",
    **solver_kwargs,
) -> InitialEstimate:
    return InitialEstimatorFactory.for_data(data, lambda1, stabilizer, **solver_kwargs).estimate(data)
