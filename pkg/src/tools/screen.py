"""screen 命令 - 按 |corr(y, x_j)| 筛选协变量"""
import logging
from pathlib import Path
from typing import Any, Dict

import numpy as np

from ..data import RegressionDataset
from ..errors import ParameterOutOfRange
from ..storage import read_dataset, write_dataset
from .base import CommandResult, CommandTool

logger = logging.getLogger(__name__)


def screen_correlation(data: RegressionDataset, threshold: float = 0.5):
    """
    保留 |corr(y, x_j)| ≥ threshold 的列

    Returns:
        (保留的列下标, 各列相关系数, 零方差列下标)
    """
    if not 0.0 <= threshold <= 1.0:
        raise ParameterOutOfRange(f"threshold must lie in [0, 1], got {threshold}")
    Xc = data.X - data.X.mean(axis=0)
    yc = data.y - data.y.mean()
    x_norm = np.sqrt(np.sum(Xc**2, axis=0))
    y_norm = float(np.sqrt(yc @ yc))
    zero = np.flatnonzero(x_norm <= 1e-12 * max(1.0, float(np.abs(data.X).max())))
    corr = np.full(data.p, np.nan)
    valid = np.setdiff1d(np.arange(data.p), zero)
    if y_norm > 0:
        corr[valid] = (Xc[:, valid].T @ yc) / (x_norm[valid] * y_norm)
    if zero.size:
        logger.warning(f"零方差列被排除: {[data.names[j] for j in zero]}")
    # 浮点误差可能使 |corr| 略大于 1
    corr = np.clip(corr, -1.0, 1.0)
    kept = [int(j) for j in valid if np.isfinite(corr[j]) and abs(corr[j]) >= threshold - 1e-12]
    return kept, corr, [int(j) for j in zero]


class ScreenTool(CommandTool):
    """相关系数筛选工具"""

    name = "screen"

    def resolve(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        resolved = {"response": "y", "threshold": 0.5, **arguments}
        if "output_csv" not in resolved:
            source = Path(resolved["csv_path"])
            resolved["output_csv"] = str(source.with_name(f"{source.stem}_screened.csv"))
        return resolved

    def default_stem(self, arguments: Dict[str, Any]) -> str:
        return f"screen-{Path(arguments['csv_path']).stem}"

    def run(self, arguments: Dict[str, Any]) -> CommandResult:
        data = read_dataset(arguments["csv_path"], arguments["response"])
        kept, corr, zero = screen_correlation(data, float(arguments["threshold"]))
        reduced = None
        if kept:
            reduced = RegressionDataset(
                data.X[:, kept],
                data.y,
                names=tuple(data.names[j] for j in kept),
                response_name=data.response_name,
            )
            write_dataset(reduced, arguments["output_csv"])
        else:
            logger.warning("没有协变量通过筛选，未写出数据文件")
        logger.info(f"筛选完成: 保留 {len(kept)}/{data.p} 列")
        payload = {
            "threshold": arguments["threshold"],
            "n": data.n,
            "p_before": data.p,
            "p_after": len(kept),
            "kept": [data.names[j] for j in kept],
            "zero_variance": [data.names[j] for j in zero],
            "correlations": {data.names[j]: corr[j] for j in range(data.p)},
            "output_csv": arguments["output_csv"] if reduced is not None else None,
        }
        return CommandResult(
            payload=payload,
            inputs=[arguments["csv_path"]],
            summary={"kept": len(kept), "p_before": data.p},
        )
