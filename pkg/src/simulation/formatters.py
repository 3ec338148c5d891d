"""覆盖率表格的文本格式化"""
from typing import List, Sequence, Tuple

from .coverage import CoverageReport

METHOD_LABELS = {
    "student-R": "R",
    "student-Rbreve": "R-breve",
    "oracle-normal": "Oracle",
    "percentile-T": "T",
}
SIDE_LABELS = {
    "lower-bound": "One-sided",
    "upper-bound": "Upper",
    "two-sided-equal-tail": "Two-sided",
    "two-sided-symmetric": "Symmetric",
}


def _fmt(value) -> str:
    if value is None:
        return "-"
    return f"{value:.3f}"


def format_coverage_table(rows: Sequence[Tuple[str, CoverageReport]], level: float = 0.9) -> str:
    """
    生成与覆盖率表相同布局的文本

    每行一个 (场景, 坐标)，列按区间类型分组、组内按方法排列；
    双侧区间在下一行用括号给出平均长度。
    """
    if not rows:
        return "（空研究）"

    first = rows[0][1]
    methods = [m for m in METHOD_LABELS if m in first.scenario.methods] or list(first.scenario.methods)
    sides = [s for s in SIDE_LABELS if any(c.side == s for c in first.cells)]
    columns = [(s, m) for s in sides for m in methods]

    label_width = max(12, max(len(label) for label, _ in rows) + 6)
    width = 9
    header_groups = "".join(
        SIDE_LABELS[s].center(width * len(methods)) for s in sides
    )
    lines: List[str] = [
        f"{'':<{label_width}}{header_groups}",
        f"{'Case':<{label_width}}"
        + "".join(METHOD_LABELS.get(m, m).rjust(width) for _, m in columns),
        "-" * (label_width + width * len(columns)),
    ]
    for label, report in rows:
        for j in report.scenario.targets:
            coverage_line = f"{label + f' b{j + 1}':<{label_width}}"
            length_line = f"{'':<{label_width}}"
            has_lengths = False
            for side, method in columns:
                try:
                    cell = report.cell(j, method, side, level)
                except KeyError:
                    coverage_line += "-".rjust(width)
                    length_line += "".rjust(width)
                    continue
                coverage_line += _fmt(cell.coverage).rjust(width)
                if side.startswith("two-sided") and cell.average_length is not None:
                    length_line += f"({_fmt(cell.average_length)})".rjust(width)
                    has_lengths = True
                else:
                    length_line += "".rjust(width)
            lines.append(coverage_line)
            if has_lengths:
                lines.append(length_line.rstrip())
        lines.append(
            f"{'':<{label_width}}reps={report.reps} failures={report.failures} "
            f"support_exact={report.support_exact} avg_size={report.average_model_size:.2f}"
        )
    return "\n".join(lines)
