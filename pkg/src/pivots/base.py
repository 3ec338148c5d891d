"""枢轴量数据结构与策略基类"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from ..data import RegressionDataset
from ..errors import DimensionMismatch, ParameterOutOfRange, UnknownVariant
from ..estimators import AlassoFit


class PivotKind(str, Enum):
    RAW_T = "raw_T"
    STUDENTIZED_R = "studentized_R"
    CORRECTED_RBREVE = "corrected_Rbreve"

    @classmethod
    def parse(cls, value) -> "PivotKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise UnknownVariant(
                f"Unknown pivot kind: {value}. Available kinds: {[k.value for k in cls]}"
            ) from None


@dataclass(frozen=True)
class PivotSpec:
    """线性组合 D (q×p) 与枢轴类型

    坐标推断时 D 为选取第 j 个坐标的单位行向量。
    """

    D: NDArray[np.float64]
    kind: PivotKind = PivotKind.RAW_T
    trace_bound: float = 10.0

    def __post_init__(self):
        D = np.array(self.D, dtype=np.float64, copy=True)
        if D.ndim == 1:
            D = D.reshape(1, -1)
        if D.ndim != 2 or D.shape[0] < 1:
            raise DimensionMismatch(f"D must be a q x p matrix with q >= 1, got shape {D.shape}")
        trace = float(np.sum(D * D))
        if trace > self.trace_bound:
            raise ParameterOutOfRange(
                f"trace(DD') = {trace:.4g} exceeds the configured bound {self.trace_bound}"
            )
        D.setflags(write=False)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "kind", PivotKind.parse(self.kind))

    @property
    def q(self) -> int:
        return self.D.shape[0]

    @property
    def p(self) -> int:
        return self.D.shape[1]

    @classmethod
    def coordinate(cls, j: int, p: int, kind=PivotKind.RAW_T, trace_bound: float = 10.0) -> "PivotSpec":
        if not 0 <= j < p:
            raise DimensionMismatch(f"coordinate {j} outside 0..{p - 1}")
        D = np.zeros((1, p))
        D[0, j] = 1.0
        return cls(D=D, kind=kind, trace_bound=trace_bound)

    @classmethod
    def coordinates(cls, indices: Sequence[int], p: int, kind=PivotKind.RAW_T,
                    trace_bound: float = 10.0) -> "PivotSpec":
        """多个坐标堆叠成 q×p 的 D（一次 bootstrap 同时得到各坐标的重复值）"""
        D = np.zeros((len(indices), p))
        for row, j in enumerate(indices):
            if not 0 <= j < p:
                raise DimensionMismatch(f"coordinate {j} outside 0..{p - 1}")
            D[row, j] = 1.0
        return cls(D=D, kind=kind, trace_bound=max(trace_bound, float(len(indices))))

    def row(self, i: int) -> "PivotSpec":
        return PivotSpec(D=self.D[i : i + 1], kind=self.kind, trace_bound=self.trace_bound)

    def with_kind(self, kind) -> "PivotSpec":
        return PivotSpec(D=self.D, kind=kind, trace_bound=self.trace_bound)

    def check(self, p: int) -> None:
        if self.p != p:
            raise DimensionMismatch(f"D has {self.p} columns but the model has p={p}")

    def point(self, beta: NDArray[np.float64]) -> NDArray[np.float64]:
        """D·β"""
        return self.D @ beta


@dataclass(frozen=True)
class BiasCorrection:
    """修正枢轴 R̆ 的偏差项与尺度"""

    f_breve: NDArray[np.float64]
    sigma_breve_sq: float
    beta_breve: NDArray[np.float64]
    active_set_used: Tuple[int, ...]

    @property
    def sigma_breve(self) -> float:
        return float(np.sqrt(self.sigma_breve_sq))

    def row(self, i: int) -> "BiasCorrection":
        return BiasCorrection(
            f_breve=self.f_breve[i : i + 1],
            sigma_breve_sq=self.sigma_breve_sq,
            beta_breve=self.beta_breve,
            active_set_used=self.active_set_used,
        )

    def to_dict(self) -> Dict:
        return {
            "f_breve": self.f_breve.tolist(),
            "sigma_breve_sq": self.sigma_breve_sq,
            "active_set_used": list(self.active_set_used),
        }


@dataclass(frozen=True)
class PopulationBias:
    """总体偏差向量 f_n（需要真实 β）"""

    f_n: NDArray[np.float64]
    s1: NDArray[np.float64]
    support: Tuple[int, ...]
    gamma_matrix: NDArray[np.float64]
    f_norm: float
    a3n: Optional[float] = None

    def to_dict(self) -> Dict:
        return {
            "f_n": self.f_n.tolist(),
            "s1": self.s1.tolist(),
            "support": list(self.support),
            "gamma_matrix": self.gamma_matrix.tolist(),
            "f_norm": self.f_norm,
            "a3n": self.a3n,
        }


class PivotStrategy(ABC):
    """枢轴量策略抽象基类

    center 为 β（模拟）或 β̂（bootstrap 世界中扮演真值）。
    """

    kind: PivotKind

    @abstractmethod
    def evaluate(
        self,
        fit: AlassoFit,
        data: RegressionDataset,
        spec: PivotSpec,
        center: NDArray[np.float64],
    ) -> NDArray[np.float64]:
        """
        计算枢轴量

        Args:
            fit: ALASSO 拟合（bootstrap 中为带星号的拟合）
            data: 与 fit 对应的数据（bootstrap 中为 (X, y*)）
            spec: PivotSpec
            center: 充当真值的系数向量

        Returns:
            q 维向量
        """
        pass

    def get_name(self) -> str:
        return self.kind.value
