"""JSON 报告存储后端"""
import json
import math
from pathlib import Path
from threading import Lock
from typing import Any, Dict, List

import numpy as np

from ..base import ReportStore
from ..manifest import RunManifest

MANIFEST_SUFFIX = ".manifest.json"


def to_jsonable(value: Any) -> Any:
    """
    转换为可 JSON 序列化的结构

    numpy 标量与数组转为 Python 类型，±inf 写成 "inf"/"-inf"，NaN 写成 null。
    """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        if math.isnan(value):
            return None
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    return value


def dumps_report(payload: Dict) -> str:
    """稳定的 JSON 文本：键排序，浮点用 repr（可精确往返）"""
    return json.dumps(to_jsonable(payload), ensure_ascii=False, indent=2, sort_keys=True) + "\n"


class JSONReportStore(ReportStore):
    """JSON 文件报告存储"""

    def __init__(self, config: Dict):
        self.output_dir = Path(config.get("output_dir", "reports")).expanduser()
        self._lock = Lock()
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def _path(self, stem: str, suffix: str) -> Path:
        return self.output_dir / f"{stem}{suffix}"

    def _write(self, path: Path, text: str) -> Path:
        with self._lock:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        return path

    def _read(self, path: Path) -> Dict:
        with self._lock:
            with open(path, "r", encoding="utf-8") as f:
                return json.load(f)

    async def save_report(self, stem: str, payload: Dict) -> Path:
        return self._write(self._path(stem, ".json"), dumps_report(payload))

    async def load_report(self, stem: str) -> Dict:
        return self._read(self._path(stem, ".json"))

    async def save_text(self, stem: str, text: str) -> Path:
        return self._write(self._path(stem, ".txt"), text.rstrip("\n") + "\n")

    async def save_manifest(self, stem: str, manifest: RunManifest) -> Path:
        return self._write(self._path(stem, MANIFEST_SUFFIX), dumps_report(manifest.to_dict()))

    async def load_manifest(self, stem: str) -> RunManifest:
        return RunManifest.from_dict(self._read(self._path(stem, MANIFEST_SUFFIX)))

    async def list_reports(self) -> List[str]:
        return sorted(
            p.name[: -len(".json")]
            for p in self.output_dir.glob("*.json")
            if not p.name.endswith(MANIFEST_SUFFIX)
        )
