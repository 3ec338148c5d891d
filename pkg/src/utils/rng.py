"""可复现随机流

每个随机操作都显式接收 RngStream。子流由 (master_seed, stream_id, path)
经 numpy SeedSequence 派生，与线程数和调度顺序无关。
"""
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

UINT64_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class RngStream:
    """随机流标识"""

    master_seed: int
    stream_id: int = 0
    path: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "master_seed", int(self.master_seed) & UINT64_MASK)
        object.__setattr__(self, "stream_id", int(self.stream_id) & UINT64_MASK)
        object.__setattr__(self, "path", tuple(int(i) & UINT64_MASK for i in self.path))

    def seed_sequence(self) -> np.random.SeedSequence:
        return np.random.SeedSequence(
            entropy=self.master_seed, spawn_key=(self.stream_id, *self.path)
        )

    def generator(self) -> np.random.Generator:
        """创建新的 Generator（每次调用都从头开始）"""
        return np.random.Generator(np.random.PCG64(self.seed_sequence()))

    def substream(self, index: int) -> "RngStream":
        """派生子流，例如 bootstrap 第 b 个重复"""
        return RngStream(self.master_seed, self.stream_id, (*self.path, int(index)))

    def to_dict(self) -> dict:
        return {"master_seed": self.master_seed, "stream_id": self.stream_id, "path": list(self.path)}

    @classmethod
    def from_dict(cls, data: dict) -> "RngStream":
        return cls(data["master_seed"], data.get("stream_id", 0), tuple(data.get("path", ())))
