"""Hermite 因子 χ_k(x; v)

χ_k(x; v)·φ(x; v) = (−d/dx)^k φ(x; v)，即 χ_k(x; v) = v^{−k/2}·He_k(x/√v)。
"""
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import hermite_e
from scipy.stats import norm

from ..errors import ParameterOutOfRange


def gaussian_density(x, variance: float):
    """φ(x; v)，均值 0、方差 v 的正态密度"""
    return norm.pdf(x, loc=0.0, scale=np.sqrt(variance))


@dataclass(frozen=True)
class HermiteFactor:
    order: int
    variance: float

    def __post_init__(self):
        if self.order < 0:
            raise ParameterOutOfRange(f"Hermite order must be >= 0, got {self.order}")
        if not self.variance > 0:
            raise ParameterOutOfRange(f"variance must be positive, got {self.variance}")

    def __call__(self, x):
        coef = np.zeros(self.order + 1)
        coef[self.order] = 1.0
        scale = np.sqrt(self.variance)
        return self.variance ** (-self.order / 2.0) * hermite_e.hermeval(np.asarray(x) / scale, coef)


def chi(k: int, x, variance: float):
    return HermiteFactor(k, variance)(x)
