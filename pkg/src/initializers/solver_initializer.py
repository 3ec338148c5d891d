"""坐标下降求解器设置初始化器"""

import logging
from typing import Any, Dict

from .base import ComponentInitializer
from ..estimators import SolverSettings

logger = logging.getLogger("alasso-inference")


class SolverInitializer(ComponentInitializer):

    @property
    def name(self) -> str:
        return "solver"

    async def initialize(self, context: Dict[str, Any]) -> Any:
        settings = SolverSettings.from_config(self.config.get_solver_config())
        logger.debug(f"求解器设置: tol={settings.tol}, max_iter={settings.max_iter}")
        return settings
