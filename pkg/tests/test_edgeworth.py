"""Edgeworth 展开"""
import math

import numpy as np
import pytest
from scipy.stats import norm

from src.data import RegressionDataset
from src.edgeworth import (
    EdgeworthSpec,
    build_spec,
    build_spec_from_fit,
    chi,
    ee_cdf,
    gaussian_density,
    edgeworth_order,
    pi_density,
    psi_density,
    tabulate,
)
from src.errors import DimensionMismatch, ParameterOutOfRange, RequiresPleN, UnknownVariant
from src.pivots import PivotSpec


def _spec(**overrides):
    values = dict(
        n=100,
        f_n=0.5,
        upsilon=1.0,
        upsilon_breve=1.2,
        sigma_sq=1.0,
        mu3=1.0,
        r1=2,
        xi0_moments={1: 0.1, 2: 1.0, 3: 0.3},
    )
    values.update(overrides)
    return EdgeworthSpec(**values)


def test_hermite_factors():
    x = 1.3
    assert chi(1, x, 2.0) == pytest.approx(x / 2.0)
    assert chi(2, x, 2.0) == pytest.approx((x**2 / 2.0 - 1.0) / 2.0)
    assert chi(3, x, 1.0) == pytest.approx(x**3 - 3 * x)


def test_edgeworth_order():
    assert edgeworth_order(0.0, 100) == 1
    # 0.3^2 = 0.09 <= 0.1
    assert edgeworth_order(0.3, 100) == 1
    # 0.5^3 = 0.125 > 0.1, 0.5^4 = 0.0625
    assert edgeworth_order(0.5, 100) == 3
    assert edgeworth_order(0.95, 100) == 6


def test_densities_integrate_to_one():
    spec = _spec()
    assert ee_cdf(psi_density, (-math.inf, math.inf), spec) == pytest.approx(1.0, abs=1e-7)
    assert ee_cdf("pi", (-math.inf, math.inf), spec) == pytest.approx(1.0, abs=1e-7)


def test_unbiased_symmetric_case_is_normal():
    spec = _spec(f_n=0.0, mu3=0.0, upsilon_breve=1.0, r1=1)
    assert ee_cdf(psi_density, (-math.inf, 0.0), spec) == pytest.approx(0.5, abs=1e-8)
    assert ee_cdf("psi", (-1.0, 1.0), spec) == pytest.approx(norm.cdf(1) - norm.cdf(-1), abs=1e-8)
    assert pi_density(0.3, spec) == pytest.approx(norm.pdf(0.3))


def test_empty_interval_has_zero_mass():
    assert ee_cdf("psi", (1.0, 1.0), _spec()) == 0.0


def test_unknown_density():
    with pytest.raises(UnknownVariant):
        ee_cdf("phi", (0.0, 1.0), _spec())


def test_spec_validation():
    with pytest.raises(DimensionMismatch):
        _spec(q=2)
    with pytest.raises(ParameterOutOfRange):
        _spec(upsilon=0.0)


def test_build_spec_from_true_coefficients(small_data):
    beta = np.zeros(small_data.p)
    beta[:3] = (3.0, -2.0, 1.5)
    spec = build_spec(small_data, beta, 4.0, 1.0, PivotSpec.coordinate(0, small_data.p), (0.25, 0.0))
    assert spec.mode == "diagnostic"
    assert spec.upsilon > 0 and spec.upsilon_breve > 0
    assert spec.xi_bar(2) == pytest.approx(spec.upsilon)
    assert 1 <= spec.r1 <= 6


def test_plug_in_spec(small_data, small_fit):
    spec = build_spec_from_fit(small_fit, small_data, PivotSpec.coordinate(0, small_data.p))
    assert spec.mode == "plug-in"
    assert spec.sigma_sq == pytest.approx(small_fit.sigma_hat_sq)


def test_high_dimensional_design_is_rejected(rng):
    data = RegressionDataset(rng.standard_normal((5, 8)), rng.standard_normal(5))
    beta = np.zeros(8)
    beta[0] = 1.0
    with pytest.raises(RequiresPleN):
        build_spec(data, beta, 1.0, 1.0, PivotSpec.coordinate(0, 8), (1.0, 0.0))


def test_tabulate_rows():
    table = tabulate(_spec(), [-1.0, 0.0, 1.0])
    assert table["x"] == [-1.0, 0.0, 1.0]
    assert len(table["psi_cdf"]) == len(table["pi"]) == 3
    assert table["normal_cdf_R"][1] == pytest.approx(0.5)


@pytest.mark.parametrize("variance", [0.5, 1.0, 2.5])
def test_hermite_factor_matches_density_derivatives(variance):
    x = np.linspace(-3.0, 3.0, 25)
    h = 1e-3
    phi = gaussian_density(x, variance)
    left = gaussian_density(x - h, variance)
    right = gaussian_density(x + h, variance)
    # 中心差分
    first = (right - left) / (2.0 * h)
    second = (right - 2.0 * phi + left) / h**2
    third = (
        gaussian_density(x + 2 * h, variance) - 2.0 * right + 2.0 * left - gaussian_density(x - 2 * h, variance)
    ) / (2.0 * h**3)
    np.testing.assert_allclose(first, -chi(1, x, variance) * phi, atol=1e-5)
    np.testing.assert_allclose(second, chi(2, x, variance) * phi, atol=1e-5)
    np.testing.assert_allclose(third, -chi(3, x, variance) * phi, atol=1e-5)
