"""命令工具初始化器"""

from typing import Any, Dict

from .base import ComponentInitializer
from ..tools import (
    ConfidenceIntervalTool,
    DiagnoseTool,
    EdgeworthTool,
    FitTool,
    ReplayTool,
    ScreenTool,
    SimulateTool,
)


class CommandsInitializer(ComponentInitializer):
    """命令工具初始化器"""

    @property
    def name(self) -> str:
        return "commands"

    @property
    def dependencies(self):
        # 命令依赖所有其他组件
        return ["storage", "solver", "bootstrap", "simulation"]

    async def initialize(self, context: Dict[str, Any]) -> Any:
        storage = self._get_component(context, "storage")
        solver = self._get_component(context, "solver")
        engine = self._get_component(context, "bootstrap")
        settings = self._get_component(context, "simulation")

        commands = {
            "fit": FitTool(self.config, storage, solver),
            "ci": ConfidenceIntervalTool(self.config, storage, solver, engine),
            "screen": ScreenTool(self.config, storage),
            "simulate": SimulateTool(self.config, storage, settings),
            "diagnose": DiagnoseTool(self.config, storage, solver),
            "edgeworth": EdgeworthTool(self.config, storage, solver),
        }
        commands["replay"] = ReplayTool(self.config, storage, commands)
        return commands
