"""三种枢轴量 T_n、R_n、R̆_n 及其组成部分"""
import logging
from typing import Optional, Sequence

import numpy as np
from numpy.typing import NDArray

from ..data import RegressionDataset
from ..errors import DegenerateVariance, DimensionMismatch, EmptyActiveSet, ZeroTrueCoefficient
from ..estimators import AlassoFit, InitialEstimate
from ..utils import gram, solve_spd, solve_submatrix
from .base import BiasCorrection, PivotSpec, PopulationBias

logger = logging.getLogger(__name__)

VARIANCE_FLOOR = 1e-14


def _check_center(spec: PivotSpec, fit: AlassoFit, beta_true) -> NDArray[np.float64]:
    beta_true = np.asarray(beta_true, dtype=np.float64).ravel()
    spec.check(fit.p)
    if beta_true.shape[0] != fit.p:
        raise DimensionMismatch(f"beta_true has {beta_true.shape[0]} entries for p={fit.p}")
    return beta_true


def pivot_T(fit: AlassoFit, spec: PivotSpec, beta_true) -> NDArray[np.float64]:
    """T_n = √n D(β̂ − β)"""
    beta_true = _check_center(spec, fit, beta_true)
    return np.sqrt(fit.n) * (spec.D @ (fit.beta_hat - beta_true))


def pivot_R(fit: AlassoFit, spec: PivotSpec, beta_true) -> NDArray[np.float64]:
    """R_n = T_n / σ̂_n"""
    if fit.sigma_hat_sq <= VARIANCE_FLOOR:
        raise DegenerateVariance(f"sigma_hat^2 = {fit.sigma_hat_sq:.3e} is degenerate")
    return pivot_T(fit, spec, beta_true) / np.sqrt(fit.sigma_hat_sq)


def bias_correction(
    fit: AlassoFit,
    init: Optional[InitialEstimate],
    data: RegressionDataset,
    spec: PivotSpec,
) -> BiasCorrection:
    """
    f̆ = D̆C̆₁₁⁻¹s̆·λ/√n，s̆_j = sgn(β̂_j)(|β̃_j| + a_n)^{−γ}，j ∈ Î

    σ̆² 为 y − Xβ̆ 中心化残差的方差，β̆ = β̃·1(Î)。
    """
    init = init if init is not None else fit.initial
    if init is None:
        raise DimensionMismatch("bias correction needs the initial estimate of the fit")
    spec.check(fit.p)
    active = list(fit.active_set)
    if not active:
        raise EmptyActiveSet("the fitted model selected no variables; R-breve is undefined")
    weights = init.weights(fit.gamma)
    s = np.sign(fit.beta_hat[active]) * weights[active]
    C = gram(data.X)
    f = spec.D[:, active] @ solve_submatrix(C, active, s) * (fit.lam / np.sqrt(fit.n))

    beta_breve = np.zeros(fit.p)
    beta_breve[active] = init.beta_tilde[active]
    eps = data.y - data.X @ beta_breve
    eps = eps - eps.mean()
    return BiasCorrection(
        f_breve=np.asarray(f, dtype=np.float64),
        sigma_breve_sq=float(np.mean(eps**2)),
        beta_breve=beta_breve,
        active_set_used=tuple(active),
    )


def pivot_Rbreve(
    fit: AlassoFit, correction: BiasCorrection, spec: PivotSpec, beta_true
) -> NDArray[np.float64]:
    """R̆_n = (√n D(β̂ − β) + f̆) / σ̆"""
    if correction.sigma_breve_sq <= VARIANCE_FLOOR:
        raise DegenerateVariance(f"sigma_breve^2 = {correction.sigma_breve_sq:.3e} is degenerate")
    return (pivot_T(fit, spec, beta_true) + correction.f_breve) / np.sqrt(correction.sigma_breve_sq)


def oracle_variance(
    fit: AlassoFit,
    data: RegressionDataset,
    spec: PivotSpec,
    *,
    covariance: Optional[NDArray[np.float64]] = None,
    support: Optional[Sequence[int]] = None,
    sigma_sq: Optional[float] = None,
) -> NDArray[np.float64]:
    """
    正态近似方差 σ̂²·D̆C̆₁₁⁻¹D̆′

    默认用 Î 和经验 C_n；传入 covariance/support/sigma_sq 时使用总体量（仅模拟）。
    """
    spec.check(fit.p)
    active = list(support) if support is not None else list(fit.active_set)
    if not active:
        raise EmptyActiveSet("oracle variance needs a nonempty active set")
    C = np.asarray(covariance, dtype=np.float64) if covariance is not None else gram(data.X)
    D1 = spec.D[:, active]
    V = D1 @ solve_submatrix(C, active, D1.T)
    scale = fit.sigma_hat_sq if sigma_sq is None else float(sigma_sq)
    V = scale * 0.5 * (V + V.T)
    return V


def population_bias(
    beta_true,
    data: RegressionDataset,
    spec: PivotSpec,
    lam: float,
    gamma: float = 1.0,
    *,
    support: Optional[Sequence[int]] = None,
    a: Optional[float] = None,
    b: Optional[float] = None,
) -> PopulationBias:
    """
    f_n = D⁽¹⁾C₁₁⁻¹s⁽¹⁾·λ/√n，s_j = sgn(β_j)|β_j|^{−γ}

    同时给出 Γ_n = D⁽¹⁾C₁₁⁻¹Λ⁽¹⁾C₁₁⁻¹D⁽¹⁾′，Λ_jj = sgn(β_j)|β_j|^{−(γ+1)}，
    以及给定 (a, b) 时的 a₃,n = (λ/n)·n^{a+b(γ+1)}。
    """
    beta_true = np.asarray(beta_true, dtype=np.float64).ravel()
    spec.check(data.p)
    if beta_true.shape[0] != data.p:
        raise DimensionMismatch(f"beta_true has {beta_true.shape[0]} entries for p={data.p}")
    if support is None:
        support = [int(j) for j in np.flatnonzero(beta_true)]
    else:
        support = [int(j) for j in support]
        zeros = [j for j in support if beta_true[j] == 0.0]
        if zeros:
            raise ZeroTrueCoefficient(f"declared support contains zero coefficients {zeros}")
    if not support:
        raise EmptyActiveSet("true coefficient vector has empty support")

    n = data.n
    b1 = beta_true[support]
    s1 = np.sign(b1) * np.abs(b1) ** (-gamma)
    C11 = gram(data.X)[np.ix_(support, support)]
    D1 = spec.D[:, support]
    C11_inv_D = solve_spd(C11, D1.T)
    f_n = (C11_inv_D.T @ s1) * (lam / np.sqrt(n))
    Lambda = np.diag(np.sign(b1) * np.abs(b1) ** (-(gamma + 1.0)))
    Gamma = C11_inv_D.T @ Lambda @ C11_inv_D
    a3n = None
    if a is not None and b is not None:
        a3n = float(lam / n * n ** (a + b * (gamma + 1.0)))
    return PopulationBias(
        f_n=np.asarray(f_n, dtype=np.float64),
        s1=s1,
        support=tuple(support),
        gamma_matrix=Gamma,
        f_norm=float(np.linalg.norm(f_n)),
        a3n=a3n,
    )
