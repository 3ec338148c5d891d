"""模拟场景：设计矩阵、真实系数、误差分布与调参规则"""
import dataclasses
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray
from scipy import linalg as sla

from ..data import RegressionDataset
from ..diagnostics import lambda_rule
from ..errors import DimensionMismatch, ParameterOutOfRange, UnknownPreset, UnknownVariant
from ..utils import RngStream

logger = logging.getLogger(__name__)

DESIGNS = ("ar_block", "equicorrelated")
ERROR_DISTRIBUTIONS = ("normal", "t", "centered-exponential")
TUNINGS = ("theoretical", "cv")

# 每个 MC 重复下的子流编号
DATA_STREAM, BOOTSTRAP_STREAM, CV_STREAM = 0, 1, 2


@dataclass(frozen=True)
class Scenario:
    """一个 Monte Carlo 场景"""

    name: str
    n: int
    p: int
    p0: int
    beta_true: Tuple[float, ...]
    design: str = "ar_block"
    rho: float = 0.3
    error_sigma: float = 1.0
    error_distribution: str = "normal"
    error_df: float = 5.0
    mc_reps: int = 500
    B: int = 500
    tuning: str = "theoretical"
    lambda2_rule: Tuple[float, float] = (2.0, 0.25)
    lambda1_rule: Tuple[float, float] = (0.5, 0.5)
    gamma: float = 1.0
    targets: Tuple[int, ...] = (0,)
    levels: Tuple[float, ...] = (0.9,)
    sides: Tuple[str, ...] = ("lower-bound", "two-sided-equal-tail")
    methods: Tuple[str, ...] = ("student-R", "student-Rbreve", "oracle-normal", "percentile-T")
    cv_folds: int = 5
    cv_grid_size: int = 20
    cv_grid_ratio: float = 1e-3
    seed: int = 20130601
    sigma_variants: Tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "beta_true", tuple(float(b) for b in self.beta_true))
        object.__setattr__(self, "targets", tuple(int(j) for j in self.targets))
        if len(self.beta_true) != self.p:
            raise DimensionMismatch(f"beta_true has {len(self.beta_true)} entries for p={self.p}")
        if not 1 <= self.p0 <= self.p:
            raise ParameterOutOfRange(f"p0 must lie in [1, p], got p0={self.p0}, p={self.p}")
        if any(b != 0.0 for b in self.beta_true[self.p0:]):
            raise ParameterOutOfRange("beta_true must vanish beyond the first p0 coordinates")
        if self.design not in DESIGNS:
            raise UnknownVariant(f"Unknown design: {self.design}. Available designs: {list(DESIGNS)}")
        if self.error_distribution not in ERROR_DISTRIBUTIONS:
            raise UnknownVariant(
                f"Unknown error distribution: {self.error_distribution}. "
                f"Available distributions: {list(ERROR_DISTRIBUTIONS)}"
            )
        if self.tuning not in TUNINGS:
            raise UnknownVariant(f"Unknown tuning: {self.tuning}. Available tunings: {list(TUNINGS)}")
        if self.error_sigma < 0:
            raise ParameterOutOfRange(f"error sigma must be >= 0, got {self.error_sigma}")
        if self.error_distribution == "t" and not self.error_df > 2:
            raise ParameterOutOfRange(f"t errors need df > 2, got {self.error_df}")
        if self.mc_reps < 1:
            raise ParameterOutOfRange(f"mc_reps must be positive, got {self.mc_reps}")
        bad = [j for j in self.targets if not 0 <= j < self.p]
        if bad:
            raise ParameterOutOfRange(f"target coordinates {bad} outside [0, {self.p})")

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(j for j in range(self.p0) if self.beta_true[j] != 0.0)

    @property
    def beta(self) -> NDArray[np.float64]:
        return np.asarray(self.beta_true, dtype=np.float64)

    def error_moments(self) -> Tuple[float, float]:
        """误差分布的 (σ², μ₃)"""
        s2 = self.error_sigma**2
        if self.error_distribution == "centered-exponential":
            return s2, 2.0 * self.error_sigma**3
        return s2, 0.0

    def lambda2(self) -> float:
        K, c = self.lambda2_rule
        return K * float(self.n) ** c

    def lambda1(self) -> Optional[float]:
        """p > n 时 LASSO 初始估计的 λ₁"""
        if self.p <= self.n:
            return None
        K, c = self.lambda1_rule
        return K * float(self.n) ** c

    def covariance(self) -> NDArray[np.float64]:
        """生成设计的总体协方差"""
        if self.design == "ar_block":
            Sigma = np.eye(self.p)
            idx = np.arange(self.p0)
            Sigma[: self.p0, : self.p0] = self.rho ** np.abs(idx[:, None] - idx[None, :])
        else:
            Sigma = np.full((self.p, self.p), self.rho)
            np.fill_diagonal(Sigma, 1.0)
        return Sigma

    def replace(self, **overrides) -> "Scenario":
        unknown = set(overrides) - {f.name for f in dataclasses.fields(self)}
        if unknown:
            raise UnknownVariant(f"Unknown scenario fields: {sorted(unknown)}")
        return dataclasses.replace(self, **overrides)

    def expand(self) -> List["Scenario"]:
        """按 sigma_variants 展开成多个场景"""
        if not self.sigma_variants:
            return [self]
        return [
            self.replace(name=f"{self.name}-sigma{s:g}", error_sigma=float(s), sigma_variants=())
            for s in self.sigma_variants
        ]

    def to_dict(self) -> Dict:
        d = dataclasses.asdict(self)
        for key, value in d.items():
            if isinstance(value, tuple):
                d[key] = list(value)
        return d

    @classmethod
    def from_dict(cls, data: Dict) -> "Scenario":
        fields = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - fields
        if unknown:
            raise UnknownVariant(f"Unknown scenario fields: {sorted(unknown)}")
        values = {k: tuple(v) if isinstance(v, list) else v for k, v in data.items()}
        return cls(**values)


def _padded(head, p: int) -> Tuple[float, ...]:
    return tuple(head) + (0.0,) * (p - len(head))


CASE_A_BETA = (4.0, -1.5, -8.0, 0.9, -3.0)
CASE_C_BETA = (4.0, 2.5, 0.8, -1.5, -2.0, -5.0, -7.5, 5.0, 1.5, -3.0)
EQUICORR_BETA = (2.0, -2.0, 0.5, -0.5)


class ScenarioFactory:
    """场景预设工厂"""

    _presets = {
        "a": lambda: Scenario("a", 60, 10, 5, _padded(CASE_A_BETA, 10)),
        "b": lambda: Scenario("b", 60, 100, 5, _padded(CASE_A_BETA, 100), mc_reps=200),
        "c": lambda: Scenario("c", 200, 80, 10, _padded(CASE_C_BETA, 80)),
        "d": lambda: Scenario("d", 200, 500, 10, _padded(CASE_C_BETA, 500), mc_reps=200),
        "equicorrelated": lambda: Scenario(
            "equicorrelated",
            100,
            10,
            4,
            _padded(EQUICORR_BETA, 10),
            design="equicorrelated",
            rho=0.2,
            lambda2_rule=lambda_rule("alasso", "comparison"),
            targets=(0, 4),
            sides=("two-sided-equal-tail",),
            sigma_variants=(1.0, 5.0),
        ),
    }

    _aliases = {"minnier": "equicorrelated"}

    @classmethod
    def create(cls, name: str, **overrides) -> Scenario:
        """
        创建预设场景

        Args:
            name: 预设名称 ("a" | "b" | "c" | "d" | "equicorrelated")
            overrides: 覆盖字段，例如 mc_reps、B

        Returns:
            Scenario 实例
        """
        name = cls._aliases.get(name, name)
        if name not in cls._presets:
            raise UnknownPreset(
                f"Unknown preset: {name}. Available presets: {list(cls._presets.keys())}"
            )
        scenario = cls._presets[name]()
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return scenario.replace(**overrides) if overrides else scenario

    @classmethod
    def register_preset(cls, name: str, builder):
        """注册新的预设（插件机制）"""
        cls._presets[name] = builder

    @classmethod
    def list_presets(cls) -> list:
        return list(cls._presets.keys())


def preset(name: str, **overrides) -> Scenario:
    return ScenarioFactory.create(name, **overrides)


def draw_errors(
    distribution: str, n: int, sigma: float, rng: np.random.Generator, df: float = 5.0
) -> NDArray[np.float64]:
    """
    均值 0、方差 σ² 的误差

    "t" 按 sqrt((df−2)/df) 缩放到单位方差；"centered-exponential" 为 Exp(1) − 1。
    """
    if distribution == "normal":
        z = rng.standard_normal(n)
    elif distribution == "t":
        z = rng.standard_t(df, size=n) * np.sqrt((df - 2.0) / df)
    elif distribution == "centered-exponential":
        z = rng.standard_exponential(n) - 1.0
    else:
        raise UnknownVariant(
            f"Unknown error distribution: {distribution}. "
            f"Available distributions: {list(ERROR_DISTRIBUTIONS)}"
        )
    return sigma * z


def generate_scenario_data(
    sc: Scenario, rep_index: int, seed: Optional[RngStream] = None
) -> Tuple[RegressionDataset, NDArray[np.float64]]:
    """
    生成第 rep_index 个 MC 重复的数据

    只依赖 (seed, rep_index)：设计和误差都来自该重复的数据子流。

    Returns:
        (数据集, 真实系数)
    """
    seed = seed if seed is not None else RngStream(sc.seed)
    rng = seed.substream(rep_index).substream(DATA_STREAM).generator()
    L = sla.cholesky(sc.covariance(), lower=True)
    X = rng.standard_normal((sc.n, sc.p)) @ L.T
    beta = sc.beta
    y = X @ beta
    if sc.error_sigma > 0:
        y = y + draw_errors(sc.error_distribution, sc.n, sc.error_sigma, rng, sc.error_df)
    return RegressionDataset(X, y), beta
