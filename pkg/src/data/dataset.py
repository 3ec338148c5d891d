"""回归数据集与标准化"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from ..errors import DimensionMismatch, EmptySample, InputError, UnknownVariant

logger = logging.getLogger(__name__)


class Standardization(str, Enum):
    """标准化方式

    UNIT_NORM: 列中心化并缩放为单位范数（响应只中心化）
    UNIT_SD:   列中心化并除以列标准差，响应同样处理
    NONE:      保持原样
    """

    UNIT_NORM = "unitnorm"
    UNIT_SD = "unitsd"
    NONE = "none"

    @classmethod
    def parse(cls, value) -> "Standardization":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise UnknownVariant(
                f"Unknown standardization: {value}. "
                f"Available modes: {[m.value for m in cls]}"
            ) from None


@dataclass(frozen=True)
class ColumnScale:
    """标准化记录，用于把系数换回原始尺度"""

    mode: Standardization
    centers: NDArray[np.float64]
    scales: NDArray[np.float64]
    declared_norm: float
    y_center: float = 0.0
    y_scale: float = 1.0
    zero_variance: Tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "centers": self.centers.tolist(),
            "scales": self.scales.tolist(),
            "declared_norm": self.declared_norm,
            "y_center": self.y_center,
            "y_scale": self.y_scale,
            "zero_variance": list(self.zero_variance),
        }

    def to_original(self, beta: NDArray[np.float64]) -> Tuple[NDArray[np.float64], float]:
        """标准化尺度的系数换回原始尺度，返回 (系数, 截距)；零方差列的系数为 0"""
        coef = self.y_scale * np.asarray(beta, dtype=np.float64) / self.scales
        coef[list(self.zero_variance)] = 0.0
        return coef, float(self.y_center - self.centers @ coef)


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.float64, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class RegressionDataset:
    """线性模型 y_i = x_i′β + ε_i 的观测数据

    X、y 在构造后只读，可以在多个 worker 之间安全共享。
    """

    X: NDArray[np.float64]
    y: NDArray[np.float64]
    column_scale: Optional[ColumnScale] = None
    names: Tuple[str, ...] = field(default_factory=tuple)
    response_name: str = "y"

    def __post_init__(self):
        X = _readonly(self.X)
        y = _readonly(self.y).ravel()
        if X.ndim == 1:
            X = X.reshape(-1, 1)
            X.setflags(write=False)
        if X.ndim != 2:
            raise DimensionMismatch(f"X must be a matrix, got shape {X.shape}")
        if X.shape[0] != y.shape[0]:
            raise DimensionMismatch(
                f"X has {X.shape[0]} rows but y has {y.shape[0]} entries"
            )
        if X.shape[0] < 2:
            raise EmptySample(f"need at least 2 observations, got {X.shape[0]}")
        if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
            raise InputError("dataset contains non-finite entries")
        names = tuple(self.names) if self.names else tuple(f"x{j + 1}" for j in range(X.shape[1]))
        if len(names) != X.shape[1]:
            raise DimensionMismatch(f"{len(names)} names for {X.shape[1]} columns")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return self.X.shape[0]

    @property
    def p(self) -> int:
        return self.X.shape[1]

    def with_response(self, y_new: NDArray[np.float64]) -> "RegressionDataset":
        """同一设计矩阵、新的响应（bootstrap 世界 y*）"""
        return RegressionDataset(
            X=self.X,
            y=y_new,
            column_scale=self.column_scale,
            names=self.names,
            response_name=self.response_name,
        )

    def subset(self, rows: Sequence[int]) -> "RegressionDataset":
        idx = np.asarray(rows, dtype=int)
        return RegressionDataset(
            X=self.X[idx],
            y=self.y[idx],
            column_scale=None,
            names=self.names,
            response_name=self.response_name,
        )

    def column_index(self, key) -> int:
        """按列名或 0 起始下标定位列"""
        if isinstance(key, (int, np.integer)):
            j = int(key)
        elif isinstance(key, str) and key in self.names:
            return self.names.index(key)
        elif isinstance(key, str) and key.isdigit():
            j = int(key)
        else:
            raise DimensionMismatch(f"unknown coordinate {key!r}; columns are {list(self.names)}")
        if not 0 <= j < self.p:
            raise DimensionMismatch(f"coordinate {j} outside 0..{self.p - 1}")
        return j


def standardize(
    X: NDArray[np.float64],
    y: NDArray[np.float64],
    mode="unitnorm",
    *,
    names: Sequence[str] = (),
    response_name: str = "y",
) -> RegressionDataset:
    """
    按指定方式标准化并构造数据集

    unitnorm: 列中心化后除以 ‖x_j‖，y 中心化
    unitsd:   列中心化后除以样本标准差（ddof=1），y 同样中心化并缩放
    none:     不做变换

    零方差列保持为全零列并记录在 ColumnScale.zero_variance 中。
    """
    mode = Standardization.parse(mode)
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64).ravel()
    n, p = X.shape
    if mode is Standardization.NONE:
        return RegressionDataset(X=X, y=y, names=tuple(names), response_name=response_name)

    centers = X.mean(axis=0)
    Xc = X - centers
    if mode is Standardization.UNIT_NORM:
        scales = np.sqrt(np.sum(Xc**2, axis=0))
        declared_norm = 1.0
        y_center, y_scale = float(y.mean()), 1.0
    else:
        scales = Xc.std(axis=0, ddof=1)
        declared_norm = float(np.sqrt(n - 1))
        y_center, y_scale = float(y.mean()), float(y.std(ddof=1))
        if y_scale == 0.0:
            y_scale = 1.0

    zero = tuple(int(j) for j in np.flatnonzero(scales <= 1e-12 * max(1.0, float(np.abs(X).max()))))
    if zero:
        logger.warning(f"零方差列保持为全零: {[names[j] if names else j for j in zero]}")
        scales = scales.copy()
        scales[list(zero)] = 1.0
        Xc[:, list(zero)] = 0.0

    Xs = Xc / scales
    ys = (y - y_center) / y_scale
    scale = ColumnScale(
        mode=mode,
        centers=_readonly(centers),
        scales=_readonly(scales),
        declared_norm=declared_norm,
        y_center=y_center,
        y_scale=y_scale,
        zero_variance=zero,
    )
    return RegressionDataset(
        X=Xs, y=ys, column_scale=scale, names=tuple(names), response_name=response_name
    )
