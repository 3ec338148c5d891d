"""运行清单：重放一条命令所需的全部信息"""
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Union

from ..errors import InputError

MANIFEST_VERSION = "1.0"


def sha256_file(path: Union[str, Path]) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


@dataclass
class RunManifest:
    """
    运行清单

    arguments 为解析后的全部命令参数，config 为生效的配置，
    两者足以逐字节重现报告。timing 不参与重放。
    """

    command: str
    arguments: Dict
    config: Dict = field(default_factory=dict)
    seeds: Dict = field(default_factory=dict)
    library_version: str = ""
    input_checksums: Dict[str, str] = field(default_factory=dict)
    timing: Dict[str, float] = field(default_factory=dict)
    manifest_version: str = MANIFEST_VERSION

    def to_dict(self) -> Dict:
        return {
            "manifest_version": self.manifest_version,
            "command": self.command,
            "arguments": self.arguments,
            "config": self.config,
            "seeds": self.seeds,
            "library_version": self.library_version,
            "input_checksums": self.input_checksums,
            "timing": self.timing,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "RunManifest":
        if "command" not in data or "arguments" not in data:
            raise InputError("manifest lacks command or arguments")
        return cls(
            command=data["command"],
            arguments=dict(data["arguments"]),
            config=dict(data.get("config", {})),
            seeds=dict(data.get("seeds", {})),
            library_version=data.get("library_version", ""),
            input_checksums=dict(data.get("input_checksums", {})),
            timing=dict(data.get("timing", {})),
            manifest_version=data.get("manifest_version", MANIFEST_VERSION),
        )

    @classmethod
    def load(cls, path: Union[str, Path]) -> "RunManifest":
        path = Path(path)
        if not path.exists():
            raise InputError(f"manifest not found: {path}")
        with open(path, "r", encoding="utf-8") as f:
            return cls.from_dict(json.load(f))

    def verify_inputs(self) -> Dict[str, Optional[str]]:
        """返回校验和不一致的输入文件 {path: 当前校验和或 None}"""
        mismatched = {}
        for path, expected in self.input_checksums.items():
            current = sha256_file(path) if Path(path).exists() else None
            if current != expected:
                mismatched[path] = current
        return mismatched
