"""残差 bootstrap 引擎"""
import numpy as np
import pytest

from src.bootstrap import REUSE_CAVEAT, BootstrapConfig, bootstrap_replicate, resample_errors, run_bootstrap, run_bootstrap_multi
from src.errors import EmptyActiveSet, ParameterOutOfRange
from src.estimators import fit_alasso, fit_ols
from src.pivots import PivotKind, PivotSpec
from src.utils import RngStream

KINDS = [PivotKind.RAW_T, PivotKind.STUDENTIZED_R, PivotKind.CORRECTED_RBREVE]


def test_resampled_errors_come_from_centered_residuals(small_data, small_fit):
    draws = resample_errors(small_fit, 200, RngStream(1))
    assert set(np.round(draws, 12)) <= set(np.round(small_fit.centered_residuals, 12))


def test_bootstrap_is_reproducible(small_data, small_fit):
    spec = PivotSpec.coordinate(0, small_data.p)
    config = BootstrapConfig(B=30, seed=RngStream(11))
    a = run_bootstrap(small_data, small_fit, config, spec)
    b = run_bootstrap(small_data, small_fit, config, spec)
    np.testing.assert_array_equal(a.values, b.values)
    assert a.values.shape == (30, 1)
    assert a.failures == 0


def test_worker_count_does_not_change_draws(small_data, small_fit):
    spec = PivotSpec.coordinates([0, 1], small_data.p)
    serial = run_bootstrap_multi(small_data, small_fit, BootstrapConfig(B=24, seed=RngStream(5)), spec, KINDS)
    threaded = run_bootstrap_multi(
        small_data, small_fit, BootstrapConfig(B=24, seed=RngStream(5), workers=3), spec, KINDS
    )
    for kind in KINDS:
        np.testing.assert_array_equal(serial[kind].values, threaded[kind].values)


def test_multi_kind_draws_share_starred_fits(small_data, small_fit):
    spec = PivotSpec.coordinate(0, small_data.p)
    draws = run_bootstrap_multi(small_data, small_fit, BootstrapConfig(B=20, seed=RngStream(2)), spec, KINDS)
    T = draws[PivotKind.RAW_T].values
    R = draws[PivotKind.STUDENTIZED_R].values
    assert np.all(np.sign(T) == np.sign(R))
    assert draws[PivotKind.CORRECTED_RBREVE].observed_correction is not None
    freq = draws[PivotKind.RAW_T].selection_frequency
    assert np.all((freq >= 0.0) & (freq <= 1.0))
    assert freq[0] == 1.0


def test_single_replicate_matches_stream(small_data, small_fit):
    spec = PivotSpec.coordinate(0, small_data.p)
    config = BootstrapConfig(B=5, seed=RngStream(8))
    draws = run_bootstrap(small_data, small_fit, config, spec)
    first = bootstrap_replicate(small_data, small_fit, config, RngStream(8).substream(0), spec)
    np.testing.assert_allclose(draws.values[0], first)


def test_reusing_initial_estimate_adds_caveat(small_data, small_fit):
    spec = PivotSpec.coordinate(0, small_data.p)
    draws = run_bootstrap(small_data, small_fit, BootstrapConfig(B=10, refit_initial=False), spec)
    assert draws.caveat == REUSE_CAVEAT


def test_corrected_bootstrap_needs_active_set(small_data):
    init = fit_ols(small_data)
    top = 2.0 * np.max(np.abs(small_data.X.T @ small_data.y) / init.weights(1.0))
    empty = fit_alasso(small_data, init, top * 2)
    config = BootstrapConfig(B=10, kind=PivotKind.CORRECTED_RBREVE)
    with pytest.raises(EmptyActiveSet):
        run_bootstrap(small_data, empty, config, PivotSpec.coordinate(0, small_data.p))


def test_config_validation():
    with pytest.raises(ParameterOutOfRange):
        BootstrapConfig(B=0)
    with pytest.raises(ParameterOutOfRange):
        BootstrapConfig(failure_budget=1.0)
    assert BootstrapConfig(B=200, failure_budget=0.05).max_redraws == 10
