"""报告存储与数据读写模块"""
from .base import ReportStore
from .backends.json_backend import JSONReportStore, dumps_report, to_jsonable
from .manifest import RunManifest, sha256_file
from .csv_io import read_dataset, read_frame, write_dataset
from ..errors import UnknownVariant


class StorageFactory:
    """报告存储后端工厂"""

    _backends = {
        "json": JSONReportStore,
    }

    @classmethod
    def create(cls, config: dict) -> ReportStore:
        """
        创建存储后端实例

        Args:
            config: 配置字典，包含 'backend' 键和对应配置

        Returns:
            ReportStore 实例
        """
        backend_name = config.get("backend", "json")

        if backend_name not in cls._backends:
            raise UnknownVariant(
                f"Unknown storage backend: {backend_name}. "
                f"Available backends: {list(cls._backends.keys())}"
            )

        backend_class = cls._backends[backend_name]
        return backend_class(config)

    @classmethod
    def register_backend(cls, name: str, backend_class: type):
        """注册新的存储后端（插件机制）"""
        cls._backends[name] = backend_class


__all__ = [
    "ReportStore",
    "JSONReportStore",
    "dumps_report",
    "to_jsonable",
    "RunManifest",
    "sha256_file",
    "read_dataset",
    "read_frame",
    "write_dataset",
    "StorageFactory",
]
