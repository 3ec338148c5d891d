"""理论调参规则 λ = K·n^c"""
from typing import Dict, Tuple

from ..errors import ParameterOutOfRange, UnknownVariant

# (stage, variant) -> (K, c)
_RULES: Dict[Tuple[str, str], Tuple[float, float]] = {
    ("lasso-initial", "simulation"): (0.5, 0.5),
    ("alasso", "simulation"): (2.0, 0.25),
    ("alasso-zero-target", "simulation"): (0.25, 0.25),
    # 单位范数列的低维数据分析
    ("alasso", "unit-norm-data"): (1.0, 0.25),
    # 筛选后的高维数据分析
    ("lasso-initial", "high-dim-data"): (0.5, 0.5),
    ("alasso", "high-dim-data"): (0.5, 0.25),
    # 等相关对照设计
    ("alasso", "comparison"): (0.5, 0.25),
}

STAGES = ("lasso-initial", "alasso", "alasso-zero-target")


def lambda_rule(stage: str, variant: str = "simulation") -> Tuple[float, float]:
    if stage not in STAGES:
        raise UnknownVariant(f"Unknown tuning stage: {stage}. Available stages: {list(STAGES)}")
    key = (stage, variant)
    if key not in _RULES:
        available = sorted({v for (s, v) in _RULES if s == stage})
        raise UnknownVariant(
            f"Unknown tuning variant: {variant} for stage {stage}. Available variants: {available}"
        )
    return _RULES[key]


def theoretical_lambda(n: int, stage: str, variant: str = "simulation") -> float:
    """
    理论调参值

    simulation 变体：
        lasso-initial       0.5·n^{1/2}
        alasso              2·n^{1/4}
        alasso-zero-target  0.25·n^{1/4}
    """
    if n < 1:
        raise ParameterOutOfRange(f"n must be positive, got {n}")
    K, c = lambda_rule(stage, variant)
    return K * float(n) ** c


def list_rules() -> Dict[str, Dict[str, float]]:
    return {f"{s}/{v}": {"K": K, "c": c} for (s, v), (K, c) in _RULES.items()}
