"""Adaptive LASSO 残差 bootstrap 推断工具包"""
__version__ = "0.1.0"
__description__ = "Residual-bootstrap inference for the Adaptive LASSO"

from .config import load_config, get_config

__all__ = [
    "__version__",
    "load_config",
    "get_config",
]
