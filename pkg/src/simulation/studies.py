"""预定义的多场景研究方案"""
from typing import Callable, Dict, List, Tuple

from ..diagnostics import lambda_rule
from ..errors import UnknownPreset
from .scenarios import Scenario, ScenarioFactory

Row = Tuple[str, Scenario]


def _first_coordinate(**overrides) -> List[Row]:
    return [(f"({name})", ScenarioFactory.create(name, targets=(0,), **overrides)) for name in "abcd"]


def _fourth_coordinate(**overrides) -> List[Row]:
    return [(f"({name})", ScenarioFactory.create(name, targets=(3,), **overrides)) for name in "ab"]


def _sigma_sweep(**overrides) -> List[Row]:
    base = ScenarioFactory.create("equicorrelated", **overrides)
    return [(f"sigma={sc.error_sigma:g}", sc) for sc in base.expand()]


def _tuning_comparison(case: str, **overrides) -> List[Row]:
    """β₁、β₄、β₆ 在理论与 CV 调参下的对照，零系数额外加 λ₂ = 0.25n^{1/4}"""
    targets = (0, 3, 5)
    theoretical = ScenarioFactory.create(case, targets=targets, tuning="theoretical", **overrides)
    cv = ScenarioFactory.create(case, targets=targets, tuning="cv", **overrides)
    zero_target = ScenarioFactory.create(
        case,
        targets=(5,),
        tuning="theoretical",
        lambda2_rule=lambda_rule("alasso-zero-target"),
        **overrides,
    )
    return [("theoretical", theoretical), ("cv", cv), ("theoretical-0.25", zero_target)]


STUDIES: Dict[str, Callable[..., List[Row]]] = {
    "first-coordinate": _first_coordinate,
    "fourth-coordinate": _fourth_coordinate,
    "sigma-sweep": _sigma_sweep,
    "tuning-a": lambda **kw: _tuning_comparison("a", **kw),
    "tuning-b": lambda **kw: _tuning_comparison("b", **kw),
}

# 研究方案自身固定、不接受命令行覆盖的字段
PINNED_FIELDS: Dict[str, Tuple[str, ...]] = {
    "tuning-a": ("tuning",),
    "tuning-b": ("tuning",),
}


def study_rows(name: str, **overrides) -> List[Row]:
    """
    展开研究方案

    Args:
        name: first-coordinate | fourth-coordinate | sigma-sweep | tuning-a | tuning-b
        overrides: 对每个场景生效的字段覆盖（例如 mc_reps、B），方案固定的字段被忽略

    Returns:
        [(行标签, 场景), ...]
    """
    if name not in STUDIES:
        raise UnknownPreset(f"Unknown study: {name}. Available studies: {list(STUDIES.keys())}")
    pinned = pinned_fields(name)
    overrides = {k: v for k, v in overrides.items() if v is not None and k not in pinned}
    return STUDIES[name](**overrides)


def pinned_fields(name: str) -> Tuple[str, ...]:
    return PINNED_FIELDS.get(name, ())


def list_studies() -> list:
    return list(STUDIES.keys())
