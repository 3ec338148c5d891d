"""覆盖率研究设置初始化器"""

from typing import Any, Dict

from .base import ComponentInitializer
from ..simulation import StudySettings


class SimulationInitializer(ComponentInitializer):
    """覆盖率研究设置初始化器"""

    @property
    def name(self) -> str:
        return "simulation"

    @property
    def dependencies(self):
        return ["solver", "bootstrap"]

    async def initialize(self, context: Dict[str, Any]) -> Any:
        sim = self.config.get_simulation_config()
        engine = self._get_component(context, "bootstrap")
        return StudySettings(
            solver=self._get_component(context, "solver"),
            workers=int(sim["workers"]),
            bootstrap_workers=engine.workers,
            failure_budget=float(sim["failure_budget"]),
            bootstrap_failure_budget=engine.failure_budget,
            min_B=engine.min_B,
        )
