"""工具函数包"""
from .linalg import (
    Matrix,
    as_matrix,
    gram,
    least_squares_qr,
    smallest_eigenvalue,
    solve_spd,
    solve_submatrix,
    submatrix,
    sym_eigen,
)
from .quantile import empirical_quantile
from .rng import RngStream

__all__ = [
    "Matrix",
    "as_matrix",
    "gram",
    "least_squares_qr",
    "smallest_eigenvalue",
    "solve_spd",
    "solve_submatrix",
    "submatrix",
    "sym_eigen",
    "empirical_quantile",
    "RngStream",
]
