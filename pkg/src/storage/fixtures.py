"""合成的、格式兼容的真实数据样例

prostate 格式：97 行，8 个临床协变量与响应 lpsa。
microarray 格式：30 个样本，基因列 G1…Gp 与响应 y；其中一部分基因与 y
高度相关，使 |corr| ≥ 0.5 的筛选保留数百列。
"""
from pathlib import Path
from typing import Union

import numpy as np

from ..data import RegressionDataset
from ..utils import RngStream
from .csv_io import write_dataset

PROSTATE_COLUMNS = ("lcavol", "lweight", "age", "lbph", "svi", "lcp", "gleason", "pgg45")
PROSTATE_RESPONSE = "lpsa"


def prostate_like(seed: int = 97, n: int = 97) -> RegressionDataset:
    rng = RngStream(seed).generator()
    lcavol = rng.normal(1.35, 1.18, n)
    lweight = rng.normal(3.63, 0.43, n)
    age = np.round(rng.normal(63.9, 7.4, n))
    lbph = rng.normal(0.1, 1.45, n)
    svi = (rng.uniform(size=n) < 0.12 + 0.1 * (lcavol > 2)).astype(np.float64)
    lcp = 0.6 * lcavol + rng.normal(-0.99, 1.1, n)
    gleason = rng.choice([6.0, 7.0, 8.0, 9.0], size=n, p=[0.36, 0.58, 0.01, 0.05])
    pgg45 = np.clip(np.round(8.0 * (gleason - 6.0) * rng.uniform(0.5, 3.0, n)), 0, 100)
    lpsa = 0.67 + 0.58 * lcavol + 0.61 * lweight + 0.73 * svi + rng.normal(0.0, 0.7, n) - 2.2
    X = np.column_stack([lcavol, lweight, age, lbph, svi, lcp, gleason, pgg45])
    return RegressionDataset(X, lpsa, names=PROSTATE_COLUMNS, response_name=PROSTATE_RESPONSE)


def microarray_like(
    seed: int = 30, n: int = 30, genes: int = 2000, correlated: int = 540, causal: int = 6
) -> RegressionDataset:
    rng = RngStream(seed).generator()
    X = rng.standard_normal((n, genes))
    causal_idx = np.arange(causal)
    effects = rng.choice([-1.0, 1.0], size=causal) * rng.uniform(0.4, 1.0, causal)
    y = X[:, causal_idx] @ effects + rng.normal(0.0, 0.3, n)
    y_std = (y - y.mean()) / y.std()
    block = np.arange(causal, causal + correlated)
    X[:, block] = 0.85 * y_std[:, None] + 0.5 * rng.standard_normal((n, correlated))
    names = tuple(f"G{j + 1}" for j in range(genes))
    return RegressionDataset(X, y, names=names, response_name="y")


def write_prostate_fixture(path: Union[str, Path], seed: int = 97) -> Path:
    return write_dataset(prostate_like(seed), path)


def write_microarray_fixture(path: Union[str, Path], seed: int = 30, genes: int = 2000) -> Path:
    return write_dataset(microarray_like(seed, genes=genes), path)
