"""置信区间构造"""
import math

import numpy as np
import pytest
from scipy.stats import norm

from src.bootstrap import (
    BootstrapConfig,
    ConfidenceInterval,
    IntervalFactory,
    IntervalMethod,
    Side,
    ci_oracle,
    ci_percentile_T,
    ci_student,
    run_bootstrap_multi,
)
from src.errors import InputError, ParameterOutOfRange, UnknownVariant
from src.pivots import PivotKind, PivotSpec, oracle_variance
from src.utils import RngStream

B = 120


@pytest.fixture
def draws(small_data, small_fit):
    spec = PivotSpec.coordinate(0, small_data.p)
    kinds = [PivotKind.RAW_T, PivotKind.STUDENTIZED_R, PivotKind.CORRECTED_RBREVE]
    return spec, run_bootstrap_multi(small_data, small_fit, BootstrapConfig(B=B, seed=RngStream(4)), spec, kinds)


def test_percentile_T_inverts_quantiles(small_fit, draws):
    spec, all_draws = draws
    d = all_draws[PivotKind.RAW_T]
    ci = ci_percentile_T(d, small_fit, spec, level=0.9, side="two-sided")
    sample = d.values[:, 0]
    point = small_fit.beta_hat[0]
    root_n = math.sqrt(small_fit.n)
    assert ci.lower == pytest.approx(point - np.quantile(sample, 0.95) / root_n)
    assert ci.upper == pytest.approx(point - np.quantile(sample, 0.05) / root_n)
    assert ci.contains(point)


def test_lower_bound_is_one_sided(small_fit, draws):
    spec, all_draws = draws
    ci = ci_student(all_draws[PivotKind.STUDENTIZED_R], small_fit, spec, level=0.9, side="one-sided")
    assert ci.side is Side.LOWER_BOUND
    assert ci.upper == math.inf
    expected = small_fit.beta_hat[0] - small_fit.sigma_hat * np.quantile(
        all_draws[PivotKind.STUDENTIZED_R].values[:, 0], 0.9
    ) / math.sqrt(small_fit.n)
    assert ci.lower == pytest.approx(expected)
    assert ci.to_dict()["upper"] == "inf"


def test_symmetric_interval_is_centred(small_fit, draws):
    spec, all_draws = draws
    ci = ci_percentile_T(all_draws[PivotKind.RAW_T], small_fit, spec, side=Side.SYMMETRIC)
    point = small_fit.beta_hat[0]
    assert point - ci.lower == pytest.approx(ci.upper - point)


def test_corrected_interval_uses_bias_shift(small_fit, draws):
    spec, all_draws = draws
    d = all_draws[PivotKind.CORRECTED_RBREVE]
    ci = ci_student(d, small_fit, spec, method="student-Rbreve")
    f = d.observed_correction.f_breve[0]
    s = d.observed_correction.sigma_breve
    q = np.quantile(d.values[:, 0], 0.95)
    assert ci.lower == pytest.approx(small_fit.beta_hat[0] + (f - s * q) / math.sqrt(small_fit.n))


def test_oracle_interval(small_data, small_fit):
    spec = PivotSpec.coordinate(1, small_data.p)
    ci = ci_oracle(small_fit, small_data, spec, level=0.95)
    se = math.sqrt(oracle_variance(small_fit, small_data, spec)[0, 0] / small_fit.n)
    assert ci.upper - ci.lower == pytest.approx(2 * norm.ppf(0.975) * se)


def test_small_B_is_rejected(small_fit, draws):
    spec, all_draws = draws
    with pytest.raises(ParameterOutOfRange):
        ci_percentile_T(all_draws[PivotKind.RAW_T], small_fit, spec, min_B=B + 1)


def test_wrong_draw_kind_is_rejected(small_fit, draws):
    spec, all_draws = draws
    with pytest.raises(InputError):
        IntervalFactory.create("student-R").compute(
            small_fit, spec, 0.9, Side.TWO_SIDED, draws=all_draws[PivotKind.RAW_T]
        )


def test_level_and_method_validation(small_fit, draws):
    spec, all_draws = draws
    with pytest.raises(ParameterOutOfRange):
        ci_percentile_T(all_draws[PivotKind.RAW_T], small_fit, spec, level=1.0)
    with pytest.raises(UnknownVariant):
        IntervalFactory.create("bca")
    assert IntervalMethod.parse("oracle") is IntervalMethod.ORACLE


def test_interval_endpoints_must_be_ordered():
    with pytest.raises(ParameterOutOfRange):
        ConfidenceInterval(2.0, 1.0, 0.9, Side.TWO_SIDED, IntervalMethod.ORACLE)


@pytest.mark.parametrize("side", ["two-sided", "lower-bound", "upper-bound", "two-sided-symmetric"])
def test_higher_level_interval_contains_lower_level(small_data, small_fit, draws, side):
    spec, all_draws = draws
    pairs = [
        (ci_percentile_T(all_draws[PivotKind.RAW_T], small_fit, spec, 0.9, side),
         ci_percentile_T(all_draws[PivotKind.RAW_T], small_fit, spec, 0.95, side)),
        (ci_student(all_draws[PivotKind.STUDENTIZED_R], small_fit, spec, 0.9, side),
         ci_student(all_draws[PivotKind.STUDENTIZED_R], small_fit, spec, 0.95, side)),
        (ci_student(all_draws[PivotKind.CORRECTED_RBREVE], small_fit, spec, 0.9, side, method="student-Rbreve"),
         ci_student(all_draws[PivotKind.CORRECTED_RBREVE], small_fit, spec, 0.95, side, method="student-Rbreve")),
        (ci_oracle(small_fit, small_data, spec, 0.9, side), ci_oracle(small_fit, small_data, spec, 0.95, side)),
    ]
    for narrow, wide in pairs:
        assert wide.lower <= narrow.lower
        assert wide.upper >= narrow.upper
