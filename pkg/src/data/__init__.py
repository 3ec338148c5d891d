"""数据集模块"""
from .dataset import ColumnScale, RegressionDataset, Standardization, standardize

__all__ = [
    "ColumnScale",
    "RegressionDataset",
    "Standardization",
    "standardize",
]
