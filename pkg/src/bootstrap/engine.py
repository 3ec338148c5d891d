"""残差 bootstrap 引擎

第 b 个重复使用子流 b；失败的重复按槽位顺序用新的子流 B, B+1, ... 重抽，
结果只取决于 (数据, 配置)，与 worker 数和完成顺序无关。
"""
import dataclasses
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.typing import NDArray

from ..data import RegressionDataset
from ..errors import EmptyActiveSet, InputError, NumericalError, TooManyFailures
from ..estimators import AlassoFit, InitialEstimate, fit_alasso, fit_lasso, fit_ols
from ..pivots import PivotFactory, PivotKind, PivotSpec, bias_correction
from ..utils import RngStream
from .base import REUSE_CAVEAT, BootstrapConfig, PivotDraws

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReplicateOutcome:
    """单个 bootstrap 重复：各枢轴的取值与 Î*"""

    values: Dict[PivotKind, NDArray[np.float64]]
    active_set: Tuple[int, ...]


def resample_errors(
    fit: AlassoFit, n: int, rng: Union[RngStream, np.random.Generator]
) -> NDArray[np.float64]:
    """从中心化残差 {ě_i} 中有放回抽取 n 个"""
    generator = rng.generator() if isinstance(rng, RngStream) else rng
    source = fit.centered_residuals
    return source[generator.integers(0, source.shape[0], size=n)]


def _starred_initial(
    data_star: RegressionDataset, fit: AlassoFit, config: BootstrapConfig
) -> InitialEstimate:
    observed = fit.initial
    if not config.refit_initial:
        return observed
    solver = config.solver.as_kwargs()
    if data_star.p <= data_star.n:
        init = fit_ols(data_star)
    else:
        start = observed.beta_tilde if observed is not None else None
        init = fit_lasso(data_star, config.lambda1, start=start, **solver)
    # a_n 固定为观测值
    stabilizer = observed.stabilizer if observed is not None else init.stabilizer
    return dataclasses.replace(init, stabilizer=stabilizer)


def _replicate(
    data: RegressionDataset,
    fit: AlassoFit,
    config: BootstrapConfig,
    spec: PivotSpec,
    kinds: Sequence[PivotKind],
    rng: RngStream,
) -> ReplicateOutcome:
    e_star = resample_errors(fit, data.n, rng)
    data_star = data.with_response(data.X @ fit.beta_hat + e_star)
    init_star = _starred_initial(data_star, fit, config)
    fit_star = fit_alasso(
        data_star,
        init_star,
        config.lam,
        config.gamma,
        start=fit.beta_hat,
        **config.solver.as_kwargs(),
    )
    values = {
        kind: np.asarray(
            PivotFactory.create(kind).evaluate(fit_star, data_star, spec, fit.beta_hat),
            dtype=np.float64,
        )
        for kind in kinds
    }
    return ReplicateOutcome(values=values, active_set=fit_star.active_set)


def bootstrap_replicate(
    data: RegressionDataset,
    fit: AlassoFit,
    config: BootstrapConfig,
    rng: RngStream,
    spec: PivotSpec,
) -> NDArray[np.float64]:
    """
    单个 bootstrap 重复

    y* = Xβ̂ + e*；按配置重算初始估计，用相同 (λ, γ, a_n) 重拟合 ALASSO，
    以 β̂ 为真值返回 config.kind 对应的枢轴。
    """
    config = config.resolved(fit)
    return _replicate(data, fit, config, spec, [config.kind], rng).values[config.kind]


def _attempt(args) -> Optional[ReplicateOutcome]:
    data, fit, config, spec, kinds, rng = args
    try:
        return _replicate(data, fit, config, spec, kinds, rng)
    except NumericalError as e:
        logger.debug(f"bootstrap 重复失败 (stream {rng.path}): {e}")
        return None


def _run_batch(
    executor: Optional[ThreadPoolExecutor], jobs: List[tuple]
) -> List[Optional[ReplicateOutcome]]:
    if executor is None:
        return [_attempt(job) for job in jobs]
    return list(executor.map(_attempt, jobs))


def _collect(
    data: RegressionDataset,
    fit: AlassoFit,
    config: BootstrapConfig,
    spec: PivotSpec,
    kinds: Sequence[PivotKind],
) -> Tuple[List[ReplicateOutcome], int]:
    B = config.B

    def jobs_for(ids: Iterable[int]) -> List[tuple]:
        return [(data, fit, config, spec, kinds, config.seed.substream(i)) for i in ids]

    executor = ThreadPoolExecutor(max_workers=config.workers) if config.workers > 1 else None
    try:
        outcomes = _run_batch(executor, jobs_for(range(B)))
        failed = [slot for slot, out in enumerate(outcomes) if out is None]
        next_id, used = B, 0
        while failed:
            if used + len(failed) > config.max_redraws:
                raise TooManyFailures(
                    f"{used + len(failed)} failed bootstrap replicates exceed the budget "
                    f"of {config.max_redraws} (B={B})"
                )
            ids = list(range(next_id, next_id + len(failed)))
            logger.warning(f"重抽 {len(failed)} 个失败的 bootstrap 重复")
            next_id += len(failed)
            used += len(failed)
            retry = _run_batch(executor, jobs_for(ids))
            for slot, out in zip(failed, retry):
                outcomes[slot] = out
            failed = [slot for slot, out in zip(failed, retry) if out is None]
    finally:
        if executor is not None:
            executor.shutdown(wait=True)
    return outcomes, used


def run_bootstrap_multi(
    data: RegressionDataset,
    fit: AlassoFit,
    config: BootstrapConfig,
    spec: PivotSpec,
    kinds: Sequence[PivotKind],
) -> Dict[PivotKind, PivotDraws]:
    """
    一次 bootstrap 同时产生多种枢轴的重复值（共享带星号的拟合）

    任一枢轴在某个重复上失败都会触发该重复整体重抽。
    """
    config = config.resolved(fit)
    kinds = [PivotKind.parse(k) for k in kinds]
    spec.check(data.p)
    observed_correction = None
    if PivotKind.CORRECTED_RBREVE in kinds:
        if not fit.active_set:
            raise EmptyActiveSet(
                "observed fit selected no variables; the corrected pivot cannot be bootstrapped"
            )
        observed_correction = bias_correction(fit, fit.initial, data, spec)
    if fit.p > fit.n and config.refit_initial and config.lambda1 is None:
        raise InputError("p > n bootstrap refits need lambda1 for the lasso initial estimator")

    logger.info(f"开始 bootstrap: B={config.B}, kinds={[k.value for k in kinds]}, workers={config.workers}")
    outcomes, failures = _collect(data, fit, config, spec, kinds)

    selection = np.zeros(data.p)
    for out in outcomes:
        selection[list(out.active_set)] += 1.0
    selection /= config.B
    distinct = len({out.active_set for out in outcomes})
    caveat = None if config.refit_initial else REUSE_CAVEAT

    result = {}
    for kind in kinds:
        values = np.vstack([out.values[kind] for out in outcomes])
        values.setflags(write=False)
        result[kind] = PivotDraws(
            values=values,
            spec=spec.with_kind(kind),
            observed_fit=fit,
            config=dataclasses.replace(config, kind=kind),
            observed_correction=observed_correction if kind is PivotKind.CORRECTED_RBREVE else None,
            failures=failures,
            selection_frequency=selection,
            distinct_active_sets=distinct,
            caveat=caveat,
        )
    if failures:
        logger.warning(f"bootstrap 完成，但有 {failures} 个重复失败后被重抽")
    return result


def run_bootstrap(
    data: RegressionDataset, fit: AlassoFit, config: BootstrapConfig, spec: PivotSpec
) -> PivotDraws:
    """按 config.kind 生成 PivotDraws"""
    return run_bootstrap_multi(data, fit, config, spec, [config.kind])[config.kind]
