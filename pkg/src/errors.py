"""统一异常体系

所有业务异常都继承 AlassoError，并携带 exit_code，CLI 据此决定进程退出码：
    2 - 输入错误（InputError）
    3 - 数值失败（NumericalError）
    4 - 可复现性预算超限（BudgetError）
"""
from typing import Optional


class AlassoError(Exception):
    """工具包异常基类"""

    exit_code: int = 1

    def __init__(self, message: str, *, detail: Optional[dict] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}

    @property
    def error_type(self) -> str:
        return type(self).__name__

    def to_dict(self) -> dict:
        """转换为命令返回结构"""
        return {
            "status": "error",
            "message": self.message,
            "error_type": self.error_type,
            "exit_code": self.exit_code,
            **({"detail": self.detail} if self.detail else {}),
        }


# ---------------------------------------------------------------------------
# 输入错误
# ---------------------------------------------------------------------------

class InputError(AlassoError, ValueError):
    exit_code = 2


class EmptySample(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class DimensionExceedsSample(InputError):
    pass


class FoldTooSmall(InputError):
    pass


class UnknownPreset(InputError):
    pass


class UnknownVariant(InputError):
    pass


class ParameterOutOfRange(InputError):
    pass


class MalformedCsv(InputError):
    """CSV 格式错误，message 中包含行号与列名"""

    def __init__(self, message: str, *, row: Optional[int] = None, column: Optional[str] = None):
        detail = {}
        if row is not None:
            detail["row"] = row
        if column is not None:
            detail["column"] = column
        super().__init__(message, detail=detail)
        self.row = row
        self.column = column


class NonNumericCell(MalformedCsv):
    pass


class RequiresPleN(InputError):
    pass


class NonSymmetric(InputError):
    pass


class ZeroTrueCoefficient(InputError):
    pass


# ---------------------------------------------------------------------------
# 数值失败
# ---------------------------------------------------------------------------

class NumericalError(AlassoError, ArithmeticError):
    exit_code = 3


class NotPositiveDefinite(NumericalError):
    pass


class SingularDesign(NumericalError):
    pass


class SingularSubmatrix(NumericalError):
    pass


class SingularBlock(NumericalError):
    pass


class NoConvergence(NumericalError):
    pass


class ZeroWeightColumn(NumericalError):
    pass


class DegenerateVariance(NumericalError):
    pass


class EmptyActiveSet(NumericalError):
    pass


class ZeroInitialComponent(NumericalError):
    pass


class QuadratureFailure(NumericalError):
    pass


# ---------------------------------------------------------------------------
# 可复现性预算
# ---------------------------------------------------------------------------

class BudgetError(AlassoError):
    exit_code = 4


class TooManyFailures(BudgetError):
    """bootstrap 失败重抽次数超出预算"""


class ReplicateBudgetExceeded(BudgetError):
    """Monte Carlo 失败重复次数超出预算"""


__all__ = [
    "AlassoError",
    "InputError",
    "EmptySample",
    "DimensionMismatch",
    "DimensionExceedsSample",
    "FoldTooSmall",
    "UnknownPreset",
    "UnknownVariant",
    "ParameterOutOfRange",
    "MalformedCsv",
    "NonNumericCell",
    "RequiresPleN",
    "NonSymmetric",
    "ZeroTrueCoefficient",
    "NumericalError",
    "NotPositiveDefinite",
    "SingularDesign",
    "SingularSubmatrix",
    "SingularBlock",
    "NoConvergence",
    "ZeroWeightColumn",
    "DegenerateVariance",
    "EmptyActiveSet",
    "ZeroInitialComponent",
    "QuadratureFailure",
    "BudgetError",
    "TooManyFailures",
    "ReplicateBudgetExceeded",
]
