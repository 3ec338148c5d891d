"""bootstrap 分位数"""
from typing import Sequence, Union

import numpy as np

from ..errors import EmptySample, ParameterOutOfRange


def empirical_quantile(sample: Union[Sequence[float], np.ndarray], u: float) -> float:
    """
    经验分位数（顺序统计量线性插值）

    位置 h = (m−1)u（0 起始），返回 x_(⌊h⌋) + (h−⌊h⌋)(x_(⌊h⌋+1) − x_(⌊h⌋))，
    与 numpy 的 "linear" 方法一致。
    """
    values = np.asarray(sample, dtype=np.float64).ravel()
    if values.size == 0:
        raise EmptySample("quantile of an empty sample")
    if not 0.0 < u < 1.0:
        raise ParameterOutOfRange(f"quantile level must lie in (0, 1), got {u}")
    return float(np.quantile(values, u, method="linear"))
