"""Edgeworth 展开参数（q = 1）"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

import numpy as np

from ..data import RegressionDataset
from ..errors import DimensionMismatch, NotPositiveDefinite, ParameterOutOfRange, RequiresPleN, SingularDesign
from ..estimators import AlassoFit
from ..pivots import PivotSpec, population_bias
from ..utils import gram, solve_spd

logger = logging.getLogger(__name__)

R1_CAP = 6


def edgeworth_order(f_n: float, n: int, cap: int = R1_CAP) -> int:
    """r₁ = 最小的 r ≥ 1 使 |f_n|^{r+1} ≤ n^{−1/2}，上限 cap"""
    bound = n ** -0.5
    for r in range(1, cap + 1):
        if abs(f_n) ** (r + 1) <= bound:
            return r
    return cap


@dataclass(frozen=True)
class EdgeworthSpec:
    """ψ_n / π_n 的参数"""

    n: int
    f_n: float
    upsilon: float
    upsilon_breve: float
    sigma_sq: float
    mu3: float
    r1: int
    xi0_moments: Dict[int, float] = field(default_factory=dict)
    mode: str = "diagnostic"
    q: int = 1

    def __post_init__(self):
        if self.q != 1:
            raise DimensionMismatch("Edgeworth expansions are implemented for q = 1 only")
        if not (self.upsilon > 0 and self.upsilon_breve > 0):
            raise ParameterOutOfRange(
                f"Upsilon and Upsilon-breve must be positive, got {self.upsilon}, {self.upsilon_breve}"
            )
        if not self.sigma_sq > 0:
            raise ParameterOutOfRange(f"sigma^2 must be positive, got {self.sigma_sq}")
        if self.r1 < 1:
            raise ParameterOutOfRange(f"r1 must be >= 1, got {self.r1}")

    def xi_bar(self, order: int) -> float:
        return float(self.xi0_moments.get(order, 0.0))

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "q": self.q,
            "f_n": self.f_n,
            "upsilon": self.upsilon,
            "upsilon_breve": self.upsilon_breve,
            "sigma_sq": self.sigma_sq,
            "mu3": self.mu3,
            "r1": self.r1,
            "xi0_moments": {str(k): v for k, v in sorted(self.xi0_moments.items())},
            "mode": self.mode,
        }


def build_spec(
    data: RegressionDataset,
    beta_true,
    lam: float,
    gamma: float,
    spec: PivotSpec,
    error_moments: Sequence[float],
    *,
    support: Optional[Sequence[int]] = None,
    r1_cap: int = R1_CAP,
    mode: str = "diagnostic",
) -> EdgeworthSpec:
    """
    由设计矩阵与真实 β 计算 EdgeworthSpec

    ξ⁰_i = D⁽¹⁾C₁₁⁻¹x_i⁽¹⁾
    η_ij = −(λ/√n)·x̃_ij·sgn(β_j)γ|β_j|^{−(γ+1)}，x̃_i 为 X C_n⁻¹ 的第 i 行
    η⁰_i = D⁽¹⁾C₁₁⁻¹η_i
    Υ = mean((ξ⁰)²)，Ῠ = mean((ξ⁰ + η⁰)²)

    Args:
        error_moments: (σ², μ₃)
    """
    if spec.q != 1:
        raise DimensionMismatch("Edgeworth expansions are implemented for q = 1 only")
    if data.p > data.n:
        raise RequiresPleN(f"x-tilde needs C_n^-1, which does not exist for p={data.p} > n={data.n}")
    beta_true = np.asarray(beta_true, dtype=np.float64).ravel()
    sigma_sq, mu3 = float(error_moments[0]), float(error_moments[1])
    n = data.n

    bias = population_bias(beta_true, data, spec, lam, gamma, support=support)
    S = list(bias.support)
    C = gram(data.X)
    try:
        X_tilde = solve_spd(C, data.X.T).T
    except NotPositiveDefinite as e:
        raise SingularDesign("C_n is singular; x-tilde is undefined") from e
    a = solve_spd(C[np.ix_(S, S)], spec.D[0, S])

    xi0 = data.X[:, S] @ a
    b1 = beta_true[S]
    slope = np.sign(b1) * gamma * np.abs(b1) ** (-(gamma + 1.0))
    eta = -(lam / math.sqrt(n)) * X_tilde[:, S] * slope
    eta0 = eta @ a

    upsilon = float(np.mean(xi0**2))
    upsilon_breve = float(np.mean((xi0 + eta0) ** 2))
    f_n = float(bias.f_n[0])
    moments = {k: float(np.mean(xi0**k)) for k in (1, 2, 3)}
    logger.debug(f"EdgeworthSpec: f_n={f_n:.4g}, Upsilon={upsilon:.4g}, Upsilon_breve={upsilon_breve:.4g}")
    return EdgeworthSpec(
        n=n,
        f_n=f_n,
        upsilon=upsilon,
        upsilon_breve=upsilon_breve,
        sigma_sq=sigma_sq,
        mu3=mu3,
        r1=edgeworth_order(f_n, n, r1_cap),
        xi0_moments=moments,
        mode=mode,
    )


def build_spec_from_fit(
    fit: AlassoFit, data: RegressionDataset, spec: PivotSpec, *, r1_cap: int = R1_CAP
) -> EdgeworthSpec:
    """代入版本：β̂ 代替 β、Î 代替支撑集，σ̂² 与 μ̂₃ 来自中心化残差"""
    e = fit.centered_residuals
    return build_spec(
        data,
        fit.beta_hat,
        fit.lam,
        fit.gamma,
        spec,
        (fit.sigma_hat_sq, float(np.mean(e**3))),
        support=fit.active_set,
        r1_cap=r1_cap,
        mode="plug-in",
    )
