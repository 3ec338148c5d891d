"""配置管理模块"""
import os
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from .errors import InputError

logger = logging.getLogger(__name__)

load_dotenv()

ENV_PREFIX = "ALASSO_"
USER_CONFIG_DIR = ".alasso"


class Config:
    """配置管理类"""

    def __init__(self, config_path: str = "config.yaml"):
        """
        初始化配置

        Args:
            config_path: 配置文件路径，支持：
                - 绝对路径：如 "/path/to/config.yaml"
                - 相对路径：会依次在以下位置查找
                  1. 当前工作目录
                  2. 项目根目录（pyproject.toml 所在目录）
                  3. ~/.alasso/config.yaml
        """
        self.config_path = self._resolve_config_path(config_path)
        self._config: Dict[str, Any] = {}
        self._load_config()

    def _resolve_config_path(self, config_path: str) -> Path:
        """
        解析配置文件路径

        查找顺序：
        1. 绝对路径
        2. 当前工作目录
        3. 项目根目录（src/ 的上一级且包含 pyproject.toml）
        4. 用户主目录 ~/.alasso/
        5. src 目录下的 default_config.yaml（随包安装的默认配置）
        """
        path = Path(config_path).expanduser()

        if path.is_absolute():
            return path

        cwd_path = Path.cwd() / config_path
        if cwd_path.exists():
            return cwd_path

        src_dir = Path(__file__).resolve().parent
        project_root = src_dir.parent
        if (project_root / "pyproject.toml").exists():
            project_config = project_root / config_path
            if project_config.exists():
                return project_config

        home_path = Path.home() / USER_CONFIG_DIR / config_path
        if home_path.exists():
            return home_path

        default_config = src_dir / "default_config.yaml"
        if default_config.exists():
            logger.debug(f"使用默认配置文件: {default_config}")
            return default_config

        return home_path

    def _load_config(self):
        """加载配置文件"""
        if not self.config_path.exists():
            raise InputError(f"配置文件不存在: {self.config_path}")

        with open(self.config_path, "r", encoding="utf-8") as f:
            self._config = yaml.safe_load(f) or {}

        self._config = self._replace_env_variables(self._config)

    def _replace_env_variables(self, config: Any) -> Any:
        """
        递归替换配置中的环境变量

        支持的格式:
        - ${VAR_NAME}           : 必需的环境变量，不存在时抛出异常
        - ${VAR_NAME?}          : 可选的环境变量，不存在时返回空字符串
        - ${VAR_NAME:default}   : 带默认值的环境变量，不存在时使用默认值
        """
        if isinstance(config, dict):
            return {key: self._replace_env_variables(value) for key, value in config.items()}
        if isinstance(config, list):
            return [self._replace_env_variables(item) for item in config]
        if isinstance(config, str) and config.startswith("${") and config.endswith("}"):
            var_spec = config[2:-1]

            if ":" in var_spec:
                var_name, default_value = var_spec.split(":", 1)
                return _coerce(os.getenv(var_name, default_value))

            if var_spec.endswith("?"):
                return os.getenv(var_spec[:-1], "")

            env_value = os.getenv(var_spec)
            if env_value is None:
                raise InputError(
                    f"环境变量未设置: {var_spec}\n"
                    f"请在环境或项目根目录的 .env 文件中设置 {var_spec}"
                )
            return _coerce(env_value)
        return config

    def get(self, *keys, default=None) -> Any:
        """
        获取配置值

        例如: config.get('bootstrap', 'B') -> 500
        """
        value = self._config
        for key in keys:
            if isinstance(value, dict):
                value = value.get(key, default)
            else:
                return default
        return value

    def get_solver_config(self) -> Dict[str, Any]:
        """获取坐标下降求解器配置"""
        return {
            "tol": 1e-10,
            "max_iter": 10000,
            "stabilizer": "sqrt_n",
            "debug_objective_check": False,
            **self.get("solver", default={}),
        }

    def get_tuning_config(self) -> Dict[str, Any]:
        return {"gamma": 1.0, "variant": "simulation", **self.get("tuning", default={})}

    def get_bootstrap_config(self) -> Dict[str, Any]:
        """获取 bootstrap 配置"""
        return {
            "B": 500,
            "refit_initial": True,
            "failure_budget": 0.05,
            "workers": 1,
            "min_B_for_ci": 100,
            **self.get("bootstrap", default={}),
        }

    def get_cv_config(self) -> Dict[str, Any]:
        return {"folds": 5, "grid_size": 30, "grid_ratio": 1e-3, **self.get("cv", default={})}

    def get_pivots_config(self) -> Dict[str, Any]:
        return {"trace_bound": 10.0, **self.get("pivots", default={})}

    def get_diagnostics_config(self) -> Dict[str, Any]:
        return {"delta": 0.1, "a": 0.0, "b": 0.0, **self.get("diagnostics", default={})}

    def get_edgeworth_config(self) -> Dict[str, Any]:
        return {"r1_cap": 6, "quadrature_tol": 1e-10, **self.get("edgeworth", default={})}

    def get_simulation_config(self) -> Dict[str, Any]:
        """获取 Monte Carlo 研究配置"""
        return {
            "mc_reps": 500,
            "reduced_mc_reps": 200,
            "failure_budget": 0.02,
            "workers": 1,
            **self.get("simulation", default={}),
        }

    def get_storage_config(self) -> Dict[str, Any]:
        """获取存储配置"""
        backend = self.get("storage", "backend", default="json")
        return {
            "backend": backend,
            **self.get("storage", backend, default={}),
        }

    def get_logging_config(self) -> Dict[str, Any]:
        return {"level": "INFO", **self.get("logging", default={})}

    @property
    def all(self) -> Dict[str, Any]:
        """返回完整配置"""
        return self._config


def _coerce(value: str) -> Any:
    """环境变量文本按 YAML 标量解析（"200" -> 200, "true" -> True）"""
    try:
        return yaml.safe_load(value) if value != "" else value
    except yaml.YAMLError:
        return value


def env_override(name: str, default: Optional[Any] = None) -> Any:
    """读取 ALASSO_<NAME> 环境变量"""
    raw = os.getenv(ENV_PREFIX + name.upper().replace("-", "_"))
    if raw is None:
        return default
    return _coerce(raw)


# 全局配置实例
_global_config: Optional[Config] = None


def load_config(config_path: str = "config.yaml") -> Config:
    """加载全局配置"""
    global _global_config
    _global_config = Config(config_path)
    return _global_config


def get_config() -> Config:
    """获取全局配置实例"""
    global _global_config
    if _global_config is None:
        _global_config = Config()
    return _global_config
