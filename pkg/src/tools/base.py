"""命令基类：参数解析、异常到状态字典的映射、报告与运行清单的写出"""
import asyncio
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..errors import AlassoError
from ..storage import ReportStore, RunManifest, sha256_file

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """一次命令运行的产物"""

    payload: Dict
    text: Optional[str] = None
    inputs: List[str] = field(default_factory=list)
    seeds: Dict = field(default_factory=dict)
    summary: Dict = field(default_factory=dict)


class CommandTool(ABC):
    """命令基类

    子类实现 resolve（补齐默认参数）与 run（同步计算，在线程中执行）。
    execute 从不抛出异常，总是返回带 status 与 exit_code 的字典。
    """

    name: str = ""

    def __init__(self, config, storage: ReportStore):
        self.config = config
        self.storage = storage

    def resolve(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        """用配置补齐缺省参数，结果写入运行清单"""
        return dict(arguments)

    @abstractmethod
    def run(self, arguments: Dict[str, Any]) -> CommandResult:
        pass

    def default_stem(self, arguments: Dict[str, Any]) -> str:
        return f"{self.name}-seed{arguments.get('seed', 0)}"

    async def execute(self, **arguments) -> Dict:
        started = time.perf_counter()
        try:
            resolved = self.resolve({k: v for k, v in arguments.items() if v is not None})
            stem = resolved.pop("output", None) or self.default_stem(resolved)
            result = await asyncio.to_thread(self.run, resolved)
            elapsed = time.perf_counter() - started

            manifest = RunManifest(
                command=self.name,
                arguments=resolved,
                config=getattr(self.config, "all", {}) or {},
                seeds=result.seeds,
                library_version=_library_version(),
                input_checksums={path: sha256_file(path) for path in result.inputs},
                timing={"seconds": round(elapsed, 3)},
            )
            report_path = await self.storage.save_report(stem, result.payload)
            manifest_path = await self.storage.save_manifest(stem, manifest)
            outputs = {"report": str(report_path), "manifest": str(manifest_path)}
            if result.text is not None:
                outputs["table"] = str(await self.storage.save_text(stem, result.text))
            logger.info(f"{self.name} 完成，报告已写入 {report_path}")
            return {
                "status": "success",
                "command": self.name,
                "stem": stem,
                "outputs": outputs,
                "exit_code": 0,
                **result.summary,
            }
        except AlassoError as e:
            logger.error(f"{self.name} 失败: {e}", exc_info=True)
            return {**e.to_dict(), "command": self.name}
        except Exception as e:
            logger.error(f"{self.name} 发生未预期错误: {e}", exc_info=True)
            return {
                "status": "error",
                "command": self.name,
                "message": f"{self.name} 失败: {e}",
                "error_type": type(e).__name__,
                "exit_code": 1,
            }


def _library_version() -> str:
    from .. import __version__

    return __version__
