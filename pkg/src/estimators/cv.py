"""K 折交叉验证选择 λ"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from ..data import RegressionDataset
from ..errors import FoldTooSmall, InputError, UnknownVariant
from ..utils import RngStream
from .alasso import fit_alasso
from .base import InitialEstimate
from .factory import initial_estimate
from .strategies import fit_lasso

logger = logging.getLogger(__name__)

OBJECTIVES = ("lasso", "alasso-given-init")
DEFAULT_LAMBDA1_RULE = (0.5, 0.5)


@dataclass(frozen=True)
class CVResult:
    """交叉验证结果"""

    chosen: float
    grid: tuple
    mean_error: tuple
    std_error: tuple
    fold_ids: tuple
    objective: str
    rng: RngStream

    def to_dict(self) -> Dict:
        return {
            "chosen": self.chosen,
            "objective": self.objective,
            "grid": list(self.grid),
            "mean_error": list(self.mean_error),
            "std_error": list(self.std_error),
            "fold_ids": list(self.fold_ids),
            "rng": self.rng.to_dict(),
        }


def assign_folds(n: int, folds: int, rng: RngStream) -> NDArray[np.int64]:
    """按随机置换把 n 个观测尽量均匀地分成 folds 份"""
    if folds < 2:
        raise InputError(f"need at least 2 folds, got {folds}")
    perm = rng.generator().permutation(n)
    fold_ids = np.empty(n, dtype=np.int64)
    for k, chunk in enumerate(np.array_split(perm, folds)):
        if chunk.size < 2:
            raise FoldTooSmall(f"fold {k} has {chunk.size} observations (n={n}, folds={folds})")
        fold_ids[chunk] = k
    return fold_ids


def lambda_grid(
    data: RegressionDataset,
    size: int = 30,
    ratio: float = 1e-3,
    stage: str = "lasso",
    weights: Optional[NDArray[np.float64]] = None,
) -> List[float]:
    """
    对数等距的降序 λ 网格

    起点为全部压缩为零的阈值：lasso 为 2‖X′y‖_max，alasso 为 2 max_j |x_j′y| / w_j。
    """
    score = np.abs(data.X.T @ data.y)
    if stage == "lasso":
        top = 2.0 * float(score.max())
    elif stage in ("alasso", "alasso-given-init"):
        if weights is None:
            raise InputError("an alasso grid needs the adaptive weights")
        top = 2.0 * float(np.max(score / weights))
    else:
        raise UnknownVariant(f"Unknown grid stage: {stage}. Available stages: ['lasso', 'alasso']")
    if top <= 0.0:
        top = 1.0
    return [float(v) for v in np.geomspace(top, top * ratio, int(size))]


def fold_initial_estimate(
    train: RegressionDataset,
    lambda1: Optional[float],
    lambda1_rule: Tuple[float, float],
    stabilizer: str,
    solver_kwargs: dict,
) -> InitialEstimate:
    """训练折上的初始估计：p ≤ n_train 用 OLS，否则用 LASSO，λ₁ 未给定时取 K·n_train^c"""
    if train.p > train.n and lambda1 is None:
        K, c = lambda1_rule
        lambda1 = K * float(train.n) ** c
        logger.debug(f"训练折 n={train.n} < p={train.p}，初始估计改用 LASSO(lambda1={lambda1:.4g})")
    return initial_estimate(train, lambda1, stabilizer, **solver_kwargs)


def _held_out_error(
    train: RegressionDataset,
    test: RegressionDataset,
    lam: float,
    objective: str,
    gamma: float,
    init: Optional[InitialEstimate],
    lambda1: Optional[float],
    lambda1_rule: Tuple[float, float],
    stabilizer: str,
    solver_kwargs: dict,
) -> float:
    if objective == "lasso":
        beta = fit_lasso(train, lam, stabilizer=stabilizer, **solver_kwargs).beta_tilde
    else:
        fold_init = init if init is not None else fold_initial_estimate(
            train, lambda1, lambda1_rule, stabilizer, solver_kwargs
        )
        beta = fit_alasso(train, fold_init, lam, gamma, **solver_kwargs).beta_hat
    residual = test.y - test.X @ beta
    return float(np.mean(residual**2))


def cross_validate(
    data: RegressionDataset,
    grid: Sequence[float],
    folds: int = 5,
    objective: str = "lasso",
    rng: Optional[RngStream] = None,
    *,
    gamma: float = 1.0,
    init: Optional[InitialEstimate] = None,
    lambda1: Optional[float] = None,
    lambda1_rule: Tuple[float, float] = DEFAULT_LAMBDA1_RULE,
    stabilizer: str = "sqrt_n",
    **solver_kwargs,
) -> CVResult:
    """
    K 折交叉验证

    Args:
        grid: 候选 λ
        folds: 折数
        objective: "lasso" 或 "alasso-given-init"
        rng: 折划分使用的随机流
        init: 固定的初始估计；为 None 时在每个训练折上重新计算
            （p ≤ n_train 用 OLS，否则用 LASSO(lambda1)）
        lambda1_rule: lambda1 为 None 而训练折 p > n_train 时的 (K, c)

    Returns:
        CVResult，平均留出误差最小的 λ，并列时取较大的 λ
    """
    if objective not in OBJECTIVES:
        raise UnknownVariant(f"Unknown CV objective: {objective}. Available: {list(OBJECTIVES)}")
    grid = [float(v) for v in grid]
    if not grid:
        raise InputError("lambda grid is empty")
    rng = rng or RngStream(0)
    fold_ids = assign_folds(data.n, folds, rng)

    errors = np.empty((len(grid), folds))
    for k in range(folds):
        train = data.subset(np.flatnonzero(fold_ids != k))
        test = data.subset(np.flatnonzero(fold_ids == k))
        for i, lam in enumerate(grid):
            errors[i, k] = _held_out_error(
                train, test, lam, objective, gamma, init, lambda1, lambda1_rule, stabilizer,
                solver_kwargs,
            )

    mean_error = errors.mean(axis=1)
    std_error = errors.std(axis=1, ddof=1) / np.sqrt(folds)
    best = float(mean_error.min())
    tied = [i for i, e in enumerate(mean_error) if e <= best + 1e-12 * max(abs(best), 1e-300)]
    chosen_index = max(tied, key=lambda i: grid[i])
    chosen = grid[chosen_index]
    logger.info(f"交叉验证完成: objective={objective}, folds={folds}, lambda={chosen:.6g}")
    return CVResult(
        chosen=chosen,
        grid=tuple(grid),
        mean_error=tuple(float(v) for v in mean_error),
        std_error=tuple(float(v) for v in std_error),
        fold_ids=tuple(int(v) for v in fold_ids),
        objective=objective,
        rng=rng,
    )
