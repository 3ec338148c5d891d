"""Monte Carlo 覆盖率研究"""
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..bootstrap import (
    BootstrapConfig,
    IntervalFactory,
    IntervalMethod,
    Side,
    plan_methods,
    run_bootstrap_multi,
)
from ..data import RegressionDataset
from ..errors import BudgetError, NumericalError, ReplicateBudgetExceeded
from ..estimators import (
    AlassoFit,
    InitialEstimate,
    SolverSettings,
    cross_validate,
    fit_alasso,
    fit_lasso,
    initial_estimate,
    lambda_grid,
)
from ..pivots import PivotKind, PivotSpec
from ..utils import RngStream
from .scenarios import BOOTSTRAP_STREAM, CV_STREAM, Scenario, generate_scenario_data

logger = logging.getLogger(__name__)

REPLICATE_FAILURE_BUDGET = 0.02


@dataclass(frozen=True)
class StudySettings:
    """与场景无关的运行参数"""

    solver: SolverSettings = field(default_factory=SolverSettings)
    workers: int = 1
    bootstrap_workers: int = 1
    failure_budget: float = REPLICATE_FAILURE_BUDGET
    bootstrap_failure_budget: float = 0.05
    min_B: int = 100


@dataclass(frozen=True)
class ReplicateRecord:
    """单个 MC 重复的结果"""

    rep_index: int
    covered: Dict[Tuple[int, str, str, float], bool]
    lengths: Dict[Tuple[int, str, str, float], float]
    active_set: Tuple[int, ...]
    lam: float
    lambda1: Optional[float]
    degraded: bool = False


@dataclass
class CoverageCell:
    """(坐标, 方法, 区间类型, 水平) 的汇总"""

    coordinate: int
    method: str
    side: str
    level: float
    hits: int = 0
    reps: int = 0
    length_sum: float = 0.0
    finite_lengths: int = 0

    @property
    def coverage(self) -> float:
        return self.hits / self.reps if self.reps else float("nan")

    @property
    def mc_standard_error(self) -> float:
        if not self.reps:
            return float("nan")
        c = self.coverage
        return math.sqrt(c * (1.0 - c) / self.reps)

    @property
    def average_length(self) -> Optional[float]:
        if not self.finite_lengths:
            return None
        return self.length_sum / self.finite_lengths

    def to_dict(self) -> Dict:
        return {
            "coordinate": self.coordinate,
            "method": self.method,
            "side": self.side,
            "level": self.level,
            "coverage": self.coverage,
            "mc_standard_error": self.mc_standard_error,
            "average_length": self.average_length,
            "reps": self.reps,
        }


@dataclass
class CoverageReport:
    """覆盖率研究报告（runtime 只写入运行清单）"""

    scenario: Scenario
    cells: List[CoverageCell]
    reps: int
    failures: int
    support_contained: int
    support_exact: int
    average_model_size: float
    runtime: float = 0.0
    failed_replicates: Tuple[int, ...] = ()
    degraded_replicates: int = 0

    def cell(self, coordinate: int, method: str, side: str, level: float = 0.9) -> CoverageCell:
        method = IntervalMethod.parse(method).value
        side = Side.parse(side).value
        for c in self.cells:
            if (c.coordinate, c.method, c.side) == (coordinate, method, side) and math.isclose(
                c.level, level
            ):
                return c
        raise KeyError((coordinate, method, side, level))

    def to_dict(self) -> Dict:
        return {
            "scenario": self.scenario.to_dict(),
            "reps": self.reps,
            "failures": self.failures,
            "failed_replicates": list(self.failed_replicates),
            "degraded_replicates": self.degraded_replicates,
            "support_contained": self.support_contained,
            "support_exact": self.support_exact,
            "average_model_size": self.average_model_size,
            "cells": [c.to_dict() for c in self.cells],
        }


def tune_and_fit(
    data: RegressionDataset,
    sc: Scenario,
    cv_stream: RngStream,
    solver: SolverSettings,
) -> Tuple[InitialEstimate, AlassoFit, Optional[float]]:
    """
    按场景的调参方式得到初始估计与 ALASSO 拟合

    theoretical: λ₁ = K₁n^{c₁}（仅 p > n），λ₂ = K₂n^{c₂}
    cv: p > n 时先用 5 折 CV 选 λ₁ 并固定，再以其为初始估计对 λ₂ 做 CV
    """
    kwargs = solver.as_kwargs()
    lambda1 = sc.lambda1()
    if sc.tuning == "cv" and data.p > data.n:
        grid1 = lambda_grid(data, sc.cv_grid_size, sc.cv_grid_ratio, stage="lasso")
        lambda1 = cross_validate(
            data, grid1, sc.cv_folds, "lasso", cv_stream.substream(0), **kwargs
        ).chosen
    init = initial_estimate(data, lambda1, **kwargs)
    lam = sc.lambda2()
    if sc.tuning == "cv":
        grid2 = lambda_grid(
            data, sc.cv_grid_size, sc.cv_grid_ratio, stage="alasso", weights=init.weights(sc.gamma)
        )
        lam = cross_validate(
            data,
            grid2,
            sc.cv_folds,
            "alasso-given-init",
            cv_stream.substream(1),
            gamma=sc.gamma,
            lambda1=lambda1,
            lambda1_rule=sc.lambda1_rule,
            **kwargs,
        ).chosen
    fit = fit_alasso(data, init, lam, sc.gamma, **kwargs)
    return init, fit, lambda1


def run_replicate(
    sc: Scenario, rep_index: int, seed: RngStream, settings: StudySettings
) -> ReplicateRecord:
    """一个 MC 重复：生成数据、拟合、bootstrap，再对每个目标坐标构造全部区间"""
    data, beta = generate_scenario_data(sc, rep_index, seed)
    rep_stream = seed.substream(rep_index)
    _, fit, lambda1 = tune_and_fit(data, sc, rep_stream.substream(CV_STREAM), settings.solver)

    plan, notes = plan_methods(sc.methods, fit)
    if notes:
        logger.warning(f"MC 重复 {rep_index}: Î 为空，使用 percentile-T 代替")
    kinds = list(dict.fromkeys(m.pivot_kind for m in plan.values() if m.pivot_kind is not None))
    spec = PivotSpec.coordinates(sc.targets, data.p)
    draws = {}
    if kinds:
        config = BootstrapConfig(
            B=sc.B,
            seed=rep_stream.substream(BOOTSTRAP_STREAM),
            lambda1=lambda1,
            failure_budget=settings.bootstrap_failure_budget,
            workers=settings.bootstrap_workers,
            solver=settings.solver,
        )
        draws = run_bootstrap_multi(data, fit, config, spec, kinds)

    covered, lengths = {}, {}
    for i, j in enumerate(sc.targets):
        row = spec.row(i)
        for method, used in plan.items():
            strategy = IntervalFactory.create(used)
            kind = used.pivot_kind
            coord_draws = draws[kind].coordinate(i) if kind is not None else None
            for side in sc.sides:
                for level in sc.levels:
                    ci = strategy.compute(
                        fit,
                        row.with_kind(kind) if kind is not None else row,
                        level,
                        side,
                        data=data,
                        draws=coord_draws,
                        min_B=min(settings.min_B, sc.B),
                    )
                    key = (j, method.value, ci.side.value, float(level))
                    covered[key] = ci.contains(float(beta[j]))
                    lengths[key] = ci.length
    return ReplicateRecord(
        rep_index=rep_index,
        covered=covered,
        lengths=lengths,
        active_set=fit.active_set,
        lam=fit.lam,
        lambda1=lambda1,
        degraded=bool(notes),
    )


def _replicate_worker(args) -> Tuple[int, Optional[ReplicateRecord], Optional[str]]:
    """进程池入口，必须位于模块顶层"""
    sc, rep_index, seed, settings = args
    try:
        return rep_index, run_replicate(sc, rep_index, seed, settings), None
    except (NumericalError, BudgetError) as e:
        return rep_index, None, f"{type(e).__name__}: {e}"


def aggregate(
    sc: Scenario, records: Sequence[ReplicateRecord], failed: Sequence[int]
) -> CoverageReport:
    """按重复编号顺序汇总"""
    cells: Dict[tuple, CoverageCell] = {}
    support = set(sc.support)
    contained = exact = degraded = 0
    sizes = []
    for record in sorted(records, key=lambda r: r.rep_index):
        for key, hit in record.covered.items():
            j, method, side, level = key
            cell = cells.setdefault(key, CoverageCell(j, method, side, level))
            cell.reps += 1
            cell.hits += int(hit)
            length = record.lengths[key]
            if math.isfinite(length):
                cell.length_sum += length
                cell.finite_lengths += 1
        active = set(record.active_set)
        contained += int(support <= active)
        exact += int(support == active)
        sizes.append(len(active))
        degraded += int(record.degraded)
    return CoverageReport(
        scenario=sc,
        cells=list(cells.values()),
        reps=len(records),
        failures=len(failed),
        support_contained=contained,
        support_exact=exact,
        average_model_size=float(np.mean(sizes)) if sizes else float("nan"),
        failed_replicates=tuple(sorted(failed)),
        degraded_replicates=degraded,
    )


def run_coverage_study(
    sc: Scenario, settings: Optional[StudySettings] = None, seed: Optional[RngStream] = None
) -> CoverageReport:
    """
    Monte Carlo 覆盖率研究

    每个重复只依赖 (seed, 重复编号)，汇总按编号顺序进行，与 worker 数无关。
    失败的重复被记录但不重抽；失败比例超过 failure_budget 时整体失败。

    Args:
        sc: 场景
        settings: 求解器、并发与失败预算
        seed: 主随机流，默认 RngStream(sc.seed)

    Returns:
        CoverageReport
    """
    settings = settings or StudySettings()
    seed = seed if seed is not None else RngStream(sc.seed)
    logger.info(
        f"开始覆盖率研究: scenario={sc.name}, reps={sc.mc_reps}, B={sc.B}, "
        f"tuning={sc.tuning}, workers={settings.workers}"
    )
    started = time.perf_counter()
    jobs = [(sc, r, seed, settings) for r in range(sc.mc_reps)]
    if settings.workers > 1:
        with ProcessPoolExecutor(max_workers=settings.workers) as executor:
            results = list(executor.map(_replicate_worker, jobs))
    else:
        results = [_replicate_worker(job) for job in jobs]

    records = [rec for _, rec, _ in results if rec is not None]
    failed = [r for r, rec, _ in results if rec is None]
    for r, _, message in results:
        if message is not None:
            logger.warning(f"MC 重复 {r} 失败: {message}")
    if len(failed) > settings.failure_budget * sc.mc_reps:
        raise ReplicateBudgetExceeded(
            f"{len(failed)} of {sc.mc_reps} replicates failed, above the "
            f"{settings.failure_budget:.0%} budget",
            detail={"failed_replicates": failed},
        )

    report = aggregate(sc, records, failed)
    report.runtime = time.perf_counter() - started
    logger.info(
        f"覆盖率研究完成: scenario={sc.name}, reps={report.reps}, failures={report.failures}, "
        f"runtime={report.runtime:.1f}s"
    )
    return report
