"""CSV 读写

读取时所有单元格先按字符串读入，再逐列转换为 float，
出错时报告文件中的行号（表头为第 1 行）与列名。
写出使用 17 位有效数字，读回后数值完全一致。
"""
import logging
import math
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd

from ..data import RegressionDataset
from ..errors import DimensionMismatch, EmptySample, MalformedCsv, NonNumericCell

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


def _parse_column(series: pd.Series, name: str) -> np.ndarray:
    values = np.empty(len(series), dtype=np.float64)
    for i, cell in enumerate(series.tolist()):
        line = i + 2
        if cell is None or (isinstance(cell, float) and math.isnan(cell)) or str(cell).strip() == "":
            raise MalformedCsv(f"missing cell at row {line}, column {name!r}", row=line, column=name)
        try:
            value = float(str(cell).strip())
        except ValueError:
            raise NonNumericCell(
                f"non-numeric cell {cell!r} at row {line}, column {name!r}", row=line, column=name
            ) from None
        if not math.isfinite(value):
            raise NonNumericCell(
                f"non-finite cell {cell!r} at row {line}, column {name!r}", row=line, column=name
            )
        values[i] = value
    return values


def read_frame(path: Union[str, Path]) -> pd.DataFrame:
    """读取 CSV 并转换为数值 DataFrame"""
    path = Path(path)
    if not path.exists():
        raise MalformedCsv(f"CSV file not found: {path}")
    try:
        table = pd.read_csv(path, dtype=str, header=None, keep_default_na=False, encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise EmptySample(f"CSV file is empty: {path}") from None
    except pd.errors.ParserError as e:
        raise MalformedCsv(f"cannot parse {path}: {e}") from None
    columns = [str(c).strip() for c in table.iloc[0].tolist()]
    duplicated = sorted({c for c in columns if columns.count(c) > 1})
    if duplicated:
        raise MalformedCsv(f"duplicated column names: {duplicated}", column=duplicated[0])
    if table.shape[0] < 2:
        raise EmptySample(f"CSV file has a header but no rows: {path}")
    body = table.iloc[1:]
    return pd.DataFrame(
        {name: _parse_column(body.iloc[:, k], name) for k, name in enumerate(columns)}
    )


def read_dataset(
    path: Union[str, Path],
    response: str = "y",
    covariates: Optional[Sequence[str]] = None,
) -> RegressionDataset:
    """
    读取回归数据

    Args:
        path: CSV 路径，首行为表头
        response: 响应变量列名
        covariates: 协变量列名，默认为除响应外的全部列

    Returns:
        未标准化的 RegressionDataset（列名保留）
    """
    frame = read_frame(path)
    if response not in frame.columns:
        raise MalformedCsv(f"response column {response!r} not found in {path}", column=response)
    names = list(covariates) if covariates is not None else [c for c in frame.columns if c != response]
    missing = [c for c in names if c not in frame.columns]
    if missing:
        raise MalformedCsv(f"covariate columns {missing} not found in {path}", column=missing[0])
    if not names:
        raise DimensionMismatch(f"{path} has no covariate columns")
    logger.info(f"读取数据: {path} (n={frame.shape[0]}, p={len(names)})")
    return RegressionDataset(
        frame[names].to_numpy(dtype=np.float64),
        frame[response].to_numpy(dtype=np.float64),
        names=tuple(names),
        response_name=response,
    )


def write_dataset(data: RegressionDataset, path: Union[str, Path]) -> Path:
    """写出数据集（协变量在前，响应在最后一列）"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(data.X, columns=list(data.names))
    frame[data.response_name] = data.y
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, encoding="utf-8", lineterminator="\n")
    return path
