"""线性代数、分位数与随机流"""
import numpy as np
import pytest

from src.errors import EmptySample, NonSymmetric, NotPositiveDefinite, ParameterOutOfRange, SingularDesign
from src.utils import RngStream, empirical_quantile, gram, least_squares_qr, solve_spd, sym_eigen
from src.utils.linalg import solve_submatrix
from src.errors import SingularSubmatrix


def test_solve_spd_matches_direct_solution(rng):
    A = rng.standard_normal((5, 5))
    A = A @ A.T + 5 * np.eye(5)
    b = rng.standard_normal(5)
    np.testing.assert_allclose(A @ solve_spd(A, b), b, atol=1e-10)


def test_solve_spd_rejects_indefinite_matrix():
    with pytest.raises(NotPositiveDefinite):
        solve_spd(np.diag([1.0, -1.0]), np.ones(2))


def test_solve_spd_rejects_non_symmetric_matrix():
    with pytest.raises(NonSymmetric):
        solve_spd(np.array([[2.0, 1.0], [0.0, 2.0]]), np.ones(2))


def test_singular_submatrix_is_reported():
    C = np.array([[1.0, 1.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    with pytest.raises(SingularSubmatrix):
        solve_submatrix(C, [0, 1], np.ones(2))


def test_sym_eigen_returns_ascending_values():
    values, vectors = sym_eigen(np.diag([3.0, 1.0, 2.0]))
    np.testing.assert_allclose(values, [1.0, 2.0, 3.0])
    np.testing.assert_allclose(vectors.T @ vectors, np.eye(3), atol=1e-12)


def test_gram_is_scaled_cross_product(rng):
    X = rng.standard_normal((20, 3))
    np.testing.assert_allclose(gram(X), X.T @ X / 20)


def test_least_squares_qr_agrees_with_lstsq(rng):
    X = rng.standard_normal((30, 4))
    y = rng.standard_normal(30)
    expected = np.linalg.lstsq(X, y, rcond=None)[0]
    np.testing.assert_allclose(least_squares_qr(X, y), expected, atol=1e-10)


def test_least_squares_qr_detects_rank_deficiency(rng):
    x = rng.standard_normal(10)
    with pytest.raises(SingularDesign):
        least_squares_qr(np.column_stack([x, 2 * x]), rng.standard_normal(10))


def test_empirical_quantile_interpolates_order_statistics():
    sample = [4.0, 1.0, 3.0, 2.0, 5.0]
    assert empirical_quantile(sample, 0.5) == 3.0
    # h = 4 * 0.1 = 0.4 -> 1 + 0.4 * (2 - 1)
    assert empirical_quantile(sample, 0.1) == pytest.approx(1.4)


def test_empirical_quantile_rejects_bad_input():
    with pytest.raises(EmptySample):
        empirical_quantile([], 0.5)
    with pytest.raises(ParameterOutOfRange):
        empirical_quantile([1.0, 2.0], 1.0)


def test_rng_substreams_are_reproducible_and_distinct():
    root = RngStream(7)
    a = root.substream(3).generator().standard_normal(4)
    b = RngStream(7).substream(3).generator().standard_normal(4)
    c = root.substream(4).generator().standard_normal(4)
    np.testing.assert_array_equal(a, b)
    assert not np.allclose(a, c)


def test_rng_stream_round_trips_through_dict():
    stream = RngStream(99, 2, (1, 5))
    assert RngStream.from_dict(stream.to_dict()) == stream
