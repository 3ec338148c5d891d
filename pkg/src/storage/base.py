"""报告存储抽象基类"""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Dict, List

from .manifest import RunManifest


class ReportStore(ABC):
    """报告存储抽象接口"""

    @abstractmethod
    async def save_report(self, stem: str, payload: Dict) -> Path:
        """
        保存机器可读报告 <stem>.json

        Args:
            stem: 文件名主干
            payload: 报告内容

        Returns:
            写入的路径
        """
        pass

    @abstractmethod
    async def load_report(self, stem: str) -> Dict:
        """读取 <stem>.json"""
        pass

    @abstractmethod
    async def save_text(self, stem: str, text: str) -> Path:
        """保存格式化表格 <stem>.txt"""
        pass

    @abstractmethod
    async def save_manifest(self, stem: str, manifest: RunManifest) -> Path:
        """保存运行清单 <stem>.manifest.json"""
        pass

    @abstractmethod
    async def list_reports(self) -> List[str]:
        """列出已保存的报告 stem"""
        pass
