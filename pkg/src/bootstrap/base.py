"""bootstrap 配置、重复值记录与置信区间"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from ..errors import ParameterOutOfRange, UnknownVariant
from ..estimators import AlassoFit, SolverSettings
from ..pivots import BiasCorrection, PivotKind, PivotSpec
from ..utils import RngStream

REUSE_CAVEAT = (
    "initial estimator reused in the bootstrap world; "
    "second-order accuracy is no longer guaranteed"
)


class Side(str, Enum):
    LOWER_BOUND = "lower-bound"
    UPPER_BOUND = "upper-bound"
    TWO_SIDED = "two-sided-equal-tail"
    SYMMETRIC = "two-sided-symmetric"

    @classmethod
    def parse(cls, value) -> "Side":
        if isinstance(value, cls):
            return value
        aliases = {"one-sided": cls.LOWER_BOUND, "two-sided": cls.TWO_SIDED}
        if value in aliases:
            return aliases[value]
        try:
            return cls(value)
        except ValueError:
            raise UnknownVariant(
                f"Unknown interval side: {value}. Available sides: {[s.value for s in cls]}"
            ) from None


class IntervalMethod(str, Enum):
    ORACLE = "oracle-normal"
    PERCENTILE_T = "percentile-T"
    STUDENT_R = "student-R"
    STUDENT_RBREVE = "student-Rbreve"

    @property
    def pivot_kind(self) -> Optional[PivotKind]:
        return {
            IntervalMethod.ORACLE: None,
            IntervalMethod.PERCENTILE_T: PivotKind.RAW_T,
            IntervalMethod.STUDENT_R: PivotKind.STUDENTIZED_R,
            IntervalMethod.STUDENT_RBREVE: PivotKind.CORRECTED_RBREVE,
        }[self]

    @classmethod
    def parse(cls, value) -> "IntervalMethod":
        if isinstance(value, cls):
            return value
        aliases = {"oracle": cls.ORACLE, "percentile": cls.PERCENTILE_T}
        if value in aliases:
            return aliases[value]
        try:
            return cls(value)
        except ValueError:
            raise UnknownVariant(
                f"Unknown interval method: {value}. Available methods: {[m.value for m in cls]}"
            ) from None


@dataclass(frozen=True)
class BootstrapConfig:
    """残差 bootstrap 配置

    λ、γ、a_n 在 bootstrap 世界中固定为观测拟合的取值。
    """

    B: int = 500
    refit_initial: bool = True
    seed: RngStream = field(default_factory=lambda: RngStream(0))
    kind: PivotKind = PivotKind.RAW_T
    lam: Optional[float] = None
    gamma: Optional[float] = None
    lambda1: Optional[float] = None
    failure_budget: float = 0.05
    workers: int = 1
    solver: SolverSettings = field(default_factory=SolverSettings)

    def __post_init__(self):
        if self.B < 1:
            raise ParameterOutOfRange(f"B must be positive, got {self.B}")
        if not 0.0 <= self.failure_budget < 1.0:
            raise ParameterOutOfRange(f"failure budget must lie in [0, 1), got {self.failure_budget}")
        if self.workers < 1:
            raise ParameterOutOfRange(f"workers must be >= 1, got {self.workers}")
        object.__setattr__(self, "kind", PivotKind.parse(self.kind))

    @property
    def max_redraws(self) -> int:
        return int(math.ceil(self.failure_budget * self.B))

    def resolved(self, fit: AlassoFit) -> "BootstrapConfig":
        """用观测拟合补齐 λ、γ、λ₁"""
        lambda1 = self.lambda1
        if lambda1 is None and fit.initial is not None:
            lambda1 = fit.initial.lambda1
        return BootstrapConfig(
            B=self.B,
            refit_initial=self.refit_initial,
            seed=self.seed,
            kind=self.kind,
            lam=fit.lam if self.lam is None else self.lam,
            gamma=fit.gamma if self.gamma is None else self.gamma,
            lambda1=lambda1,
            failure_budget=self.failure_budget,
            workers=self.workers,
            solver=self.solver,
        )

    def to_dict(self) -> Dict:
        return {
            "B": self.B,
            "refit_initial": self.refit_initial,
            "seed": self.seed.to_dict(),
            "kind": self.kind.value,
            "lambda": self.lam,
            "gamma": self.gamma,
            "lambda1": self.lambda1,
            "failure_budget": self.failure_budget,
            "solver": {"tol": self.solver.tol, "max_iter": self.solver.max_iter},
        }


@dataclass(frozen=True)
class PivotDraws:
    """B 个 bootstrap 枢轴重复值"""

    values: NDArray[np.float64]
    spec: PivotSpec
    observed_fit: AlassoFit
    config: BootstrapConfig
    observed_correction: Optional[BiasCorrection] = None
    failures: int = 0
    selection_frequency: Optional[NDArray[np.float64]] = None
    distinct_active_sets: int = 0
    caveat: Optional[str] = None

    @property
    def B(self) -> int:
        return self.values.shape[0]

    @property
    def kind(self) -> PivotKind:
        return self.spec.kind

    @property
    def flagged(self) -> bool:
        return self.failures > 0

    def coordinate(self, i: int) -> "PivotDraws":
        """取第 i 个线性组合（q = 1 视图）"""
        return PivotDraws(
            values=self.values[:, i : i + 1],
            spec=self.spec.row(i),
            observed_fit=self.observed_fit,
            config=self.config,
            observed_correction=(
                self.observed_correction.row(i) if self.observed_correction is not None else None
            ),
            failures=self.failures,
            selection_frequency=self.selection_frequency,
            distinct_active_sets=self.distinct_active_sets,
            caveat=self.caveat,
        )

    def summary(self) -> Dict:
        return {
            "B": self.B,
            "kind": self.kind.value,
            "failures": self.failures,
            "flagged": self.flagged,
            "caveat": self.caveat,
            "distinct_active_sets": self.distinct_active_sets,
            "selection_frequency": (
                self.selection_frequency.tolist() if self.selection_frequency is not None else None
            ),
            "config": self.config.to_dict(),
        }


def _finite_or_str(value: float):
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return float(value)


@dataclass(frozen=True)
class ConfidenceInterval:
    """置信区间"""

    lower: float
    upper: float
    level: float
    side: Side
    method: IntervalMethod
    point_estimate: float = float("nan")
    warnings: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.lower > self.upper:
            raise ParameterOutOfRange(f"interval endpoints out of order: {self.lower} > {self.upper}")

    @property
    def length(self) -> float:
        if math.isfinite(self.lower) and math.isfinite(self.upper):
            return self.upper - self.lower
        return float("inf")

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper

    def to_dict(self) -> Dict:
        return {
            "lower": _finite_or_str(self.lower),
            "upper": _finite_or_str(self.upper),
            "length": _finite_or_str(self.length),
            "level": self.level,
            "side": self.side.value,
            "method": self.method.value,
            "point_estimate": self.point_estimate,
            "warnings": list(self.warnings),
        }
