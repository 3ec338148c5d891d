"""正则条件诊断与理论调参"""
from .conditions import (
    FAIL,
    NOT_CHECKABLE,
    PASS,
    ConditionReport,
    c3_eigen_range,
    check_c1,
    check_c6_window,
    column_moments,
    diagnose,
    error_moments,
    rate_exponents,
    sigma0_min_eigen,
)
from .tuning import STAGES, lambda_rule, list_rules, theoretical_lambda

__all__ = [
    "FAIL",
    "NOT_CHECKABLE",
    "PASS",
    "ConditionReport",
    "c3_eigen_range",
    "check_c1",
    "check_c6_window",
    "column_moments",
    "diagnose",
    "error_moments",
    "rate_exponents",
    "sigma0_min_eigen",
    "STAGES",
    "lambda_rule",
    "list_rules",
    "theoretical_lambda",
]
