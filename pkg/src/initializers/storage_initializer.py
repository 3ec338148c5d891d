"""报告存储初始化器"""

from typing import Any, Dict

from .base import ComponentInitializer
from ..storage import StorageFactory


class StorageInitializer(ComponentInitializer):
    """报告存储初始化器"""

    @property
    def name(self) -> str:
        return "storage"

    async def initialize(self, context: Dict[str, Any]) -> Any:
        return StorageFactory.create(self.config.get_storage_config())
