"""稠密线性代数工具

C_n 及其分块、Cholesky 求解、对称特征分解、QR 最小二乘都集中在这里，
其他模块不直接调用 scipy.linalg。
"""
import logging
from typing import Sequence, Tuple

import numpy as np
from numpy.typing import NDArray
from scipy import linalg as sla

from ..errors import NonSymmetric, NotPositiveDefinite, SingularDesign, SingularSubmatrix

logger = logging.getLogger(__name__)

Matrix = NDArray[np.float64]

SYMMETRY_TOL = 1e-10


def as_matrix(values, *, name: str = "matrix") -> Matrix:
    """转换为只读的二维 float64 数组，并检查有限性"""
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be two-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    arr.setflags(write=False)
    return arr


def _max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


def check_symmetric(A: Matrix, tol: float = SYMMETRY_TOL) -> None:
    """非对称时抛出 NonSymmetric（容差相对于 ‖A‖_max）"""
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NonSymmetric(f"matrix of shape {A.shape} is not square")
    scale = max(1.0, _max_abs(A))
    if _max_abs(A - A.T) > tol * scale:
        raise NonSymmetric("matrix is not symmetric within tolerance")


def solve_spd(A: Matrix, B: Matrix) -> Matrix:
    """
    求解对称正定系统 AX = B（Cholesky）

    Args:
        A: 对称正定矩阵
        B: 右端项（向量或矩阵）

    Returns:
        X，形状与 B 相同

    Raises:
        NotPositiveDefinite: Cholesky 分解的主元 ≤ 0
    """
    A = np.asarray(A, dtype=np.float64)
    B = np.asarray(B, dtype=np.float64)
    check_symmetric(A)
    try:
        factor = sla.cho_factor(A, lower=True, check_finite=True)
    except sla.LinAlgError as e:
        raise NotPositiveDefinite(f"Cholesky factorization failed: {e}") from e
    return sla.cho_solve(factor, B, check_finite=False)


def sym_eigen(A: Matrix) -> Tuple[NDArray[np.float64], Matrix]:
    """
    对称矩阵特征分解

    Returns:
        (eigenvalues 升序, 正交特征向量矩阵)
    """
    A = np.asarray(A, dtype=np.float64)
    check_symmetric(A)
    # eigh 只读下三角，先对称化消除舍入误差
    values, vectors = sla.eigh(0.5 * (A + A.T))
    return values, vectors


def smallest_eigenvalue(A: Matrix) -> float:
    if A.size == 0:
        return float("nan")
    values = sla.eigh(0.5 * (A + A.T), eigvals_only=True)
    return float(values[0])


def gram(X: Matrix) -> Matrix:
    """C_n = n⁻¹ X′X"""
    n = X.shape[0]
    return (X.T @ X) / n


def submatrix(C: Matrix, index: Sequence[int]) -> Matrix:
    idx = np.asarray(index, dtype=int)
    return C[np.ix_(idx, idx)]


def solve_submatrix(C: Matrix, index: Sequence[int], B: Matrix) -> Matrix:
    """在 C 的主子矩阵 C[I, I] 上求解，失败时抛出 SingularSubmatrix"""
    try:
        return solve_spd(submatrix(C, index), B)
    except NotPositiveDefinite as e:
        raise SingularSubmatrix(
            f"submatrix on {len(index)} active columns is not invertible"
        ) from e


def least_squares_qr(X: Matrix, y: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    QR 分解求最小二乘解 argmin ‖y − Xu‖²

    Raises:
        SingularDesign: R 的对角元相对过小（列秩亏）
    """
    Q, R = sla.qr(X, mode="economic")
    diag = np.abs(np.diag(R))
    if diag.size == 0 or diag.min() <= 1e-12 * max(diag.max(), 1.0):
        raise SingularDesign("design matrix is rank deficient")
    return sla.solve_triangular(R, Q.T @ y, lower=False)


__all__ = [
    "Matrix",
    "as_matrix",
    "check_symmetric",
    "solve_spd",
    "sym_eigen",
    "smallest_eigenvalue",
    "gram",
    "submatrix",
    "solve_submatrix",
    "least_squares_qr",
]
