"""bootstrap 引擎初始化器"""

from typing import Any, Dict

from .base import ComponentInitializer
from ..bootstrap import BootstrapEngine


class BootstrapInitializer(ComponentInitializer):
    """bootstrap 引擎初始化器"""

    @property
    def name(self) -> str:
        return "bootstrap"

    @property
    def dependencies(self):
        return ["solver"]

    async def initialize(self, context: Dict[str, Any]) -> Any:
        solver = self._get_component(context, "solver")
        return BootstrapEngine(self.config.get_bootstrap_config(), solver)
