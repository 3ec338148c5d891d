"""Edgeworth 展开诊断（q = 1）"""
from .hermite import HermiteFactor, chi, gaussian_density
from .expansion import R1_CAP, EdgeworthSpec, build_spec, build_spec_from_fit, edgeworth_order
from .densities import DENSITIES, ee_cdf, pi_density, psi_density, tabulate

__all__ = [
    "HermiteFactor",
    "chi",
    "gaussian_density",
    "R1_CAP",
    "EdgeworthSpec",
    "build_spec",
    "build_spec_from_fit",
    "edgeworth_order",
    "DENSITIES",
    "ee_cdf",
    "pi_density",
    "psi_density",
    "tabulate",
]
