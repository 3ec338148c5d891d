"""replay 命令 - 按运行清单重新执行命令"""
import logging
from typing import Dict, Optional

from ..errors import AlassoError, InputError
from ..storage import ReportStore, RunManifest, dumps_report

logger = logging.getLogger(__name__)


class ReplayTool:
    """重放工具

    不继承 CommandTool：重放本身不写清单，只调用原命令并比较报告。
    """

    name = "replay"

    def __init__(self, config, storage: ReportStore, commands: Optional[Dict] = None):
        self.config = config
        self.storage = storage
        self.commands = commands if commands is not None else {}

    async def execute(self, manifest_path: str, output: Optional[str] = None) -> Dict:
        try:
            manifest = RunManifest.load(manifest_path)
            if manifest.command not in self.commands:
                raise InputError(
                    f"manifest names unknown command {manifest.command!r}; "
                    f"available: {sorted(self.commands)}"
                )
            mismatched = manifest.verify_inputs()
            if mismatched:
                logger.warning(f"输入文件校验和已变化: {sorted(mismatched)}")

            original_stem = _stem_of(manifest_path)
            stem = output or f"{original_stem}.replay"
            result = await self.commands[manifest.command].execute(**manifest.arguments, output=stem)
            if result.get("status") != "success":
                return {**result, "command": self.name}

            identical = None
            try:
                original = await self.storage.load_report(original_stem)
                replayed = await self.storage.load_report(stem)
                identical = dumps_report(original) == dumps_report(replayed)
            except (OSError, ValueError):
                logger.warning(f"找不到原始报告 {original_stem}，跳过比较")
            return {
                **result,
                "command": self.name,
                "replayed": manifest.command,
                "identical": identical,
                "changed_inputs": sorted(mismatched),
            }
        except AlassoError as e:
            logger.error(f"replay 失败: {e}", exc_info=True)
            return {**e.to_dict(), "command": self.name}


def _stem_of(manifest_path: str) -> str:
    name = str(manifest_path).replace("\\", "/").rsplit("/", 1)[-1]
    for suffix in (".manifest.json", ".json"):
        if name.endswith(suffix):
            return name[: -len(suffix)]
    return name
