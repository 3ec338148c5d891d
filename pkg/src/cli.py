"""命令行入口

子命令: fit, ci, screen, simulate, diagnose, edgeworth, replay
未在命令行给出的参数依次从 ALASSO_<FLAG> 环境变量、配置文件和内置默认值取得。
退出码: 0 成功, 2 输入错误, 3 数值失败, 4 可复现性预算超限
"""
import argparse
import asyncio
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from .config import env_override, load_config
from .errors import AlassoError
from .initializers import DEFAULT_INITIALIZERS, InitializerRegistry
from .storage import to_jsonable

logger = logging.getLogger("alasso-inference")

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
GLOBAL_DESTS = {"command", "config", "log_level", "output_dir"}


class AlassoApp:
    """组装全部组件并分发命令"""

    def __init__(self, config_path: str = "config.yaml"):
        self.config_path = config_path
        self.config = None
        self.commands: Dict[str, Any] = {}

    async def initialize(self):
        self.config = load_config(self.config_path)
        registry = InitializerRegistry()
        registry.auto_register(DEFAULT_INITIALIZERS, self.config)
        components = await registry.initialize_all(self.config)
        self.commands = components.get("commands", {})
        logger.info(f"✓ 组件初始化完成: {registry.initialization_order()}")

    async def dispatch(self, name: str, arguments: Dict[str, Any]) -> Dict:
        if name not in self.commands:
            return {
                "status": "error",
                "message": f"Unknown command: {name}. Available commands: {sorted(self.commands)}",
                "error_type": "UnknownVariant",
                "exit_code": 2,
            }
        return await self.commands[name].execute(**arguments)


def _add_fit_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--response", help="响应变量列名 (默认: y)")
    parser.add_argument("--lambda", dest="lam", type=float, help="ALASSO 惩罚参数 λ")
    parser.add_argument("--lambda1", type=float, help="p > n 时 LASSO 初始估计的 λ₁")
    parser.add_argument("--gamma", type=float, help="权重指数 γ (默认: 1)")
    parser.add_argument("--cv", action="store_true", default=None, help="用交叉验证选择 λ")
    parser.add_argument("--folds", type=int, help="交叉验证折数 (默认: 5)")
    parser.add_argument(
        "--standardize", choices=["unitnorm", "unitsd", "none"], help="标准化方式 (默认: unitnorm)"
    )
    parser.add_argument("--variant", help="理论调参规则变体")
    parser.add_argument("--seed", type=int, help="主随机种子")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alasso-inference", description="Adaptive LASSO 残差 bootstrap 推断工具"
    )
    parser.add_argument("--config", default="config.yaml", help="配置文件路径")
    parser.add_argument("--log-level", help="日志级别 (默认取配置 logging.level)")
    parser.add_argument("--output-dir", help="报告输出目录")
    sub = parser.add_subparsers(dest="command", required=True)

    fit = sub.add_parser("fit", help="拟合 ALASSO")
    fit.add_argument("csv_path")
    _add_fit_flags(fit)
    fit.add_argument("--output", help="报告文件名主干")

    ci = sub.add_parser("ci", help="bootstrap 置信区间")
    ci.add_argument("csv_path")
    _add_fit_flags(ci)
    ci.add_argument("--coordinate", help="列名、下标或 all (默认: all)")
    ci.add_argument("--method", help="oracle-normal | percentile-T | student-R | student-Rbreve | all")
    ci.add_argument("--level", type=float, help="名义水平 (默认: 0.9)")
    ci.add_argument("--side", help="two-sided | one-sided | lower-bound | upper-bound | two-sided-symmetric")
    ci.add_argument("--B", dest="B", type=int, help="bootstrap 重复数")
    ci.add_argument("--workers", type=int, help="bootstrap 线程数")
    ci.add_argument(
        "--no-refit-initial", dest="refit_initial", action="store_false", default=None,
        help="bootstrap 中复用观测的初始估计",
    )
    ci.add_argument("--output", help="报告文件名主干")

    screen = sub.add_parser("screen", help="按相关系数筛选协变量")
    screen.add_argument("csv_path")
    screen.add_argument("--response", help="响应变量列名 (默认: y)")
    screen.add_argument("--threshold", type=float, help="|corr| 阈值 (默认: 0.5)")
    screen.add_argument("--output-csv", dest="output_csv", help="筛选后的 CSV 路径")
    screen.add_argument("--output", help="报告文件名主干")

    simulate = sub.add_parser("simulate", help="Monte Carlo 覆盖率研究")
    source = simulate.add_mutually_exclusive_group()
    source.add_argument("--preset", help="a | b | c | d | equicorrelated")
    source.add_argument("--study", help="first-coordinate | fourth-coordinate | sigma-sweep | tuning-a | tuning-b")
    source.add_argument("--scenario-file", dest="scenario_file", help="YAML 场景文件")
    simulate.add_argument("--mc-reps", dest="mc_reps", type=int, help="MC 重复数")
    simulate.add_argument("--B", dest="B", type=int, help="bootstrap 重复数")
    simulate.add_argument("--seed", type=int, help="主随机种子")
    simulate.add_argument("--workers", type=int, help="MC 进程数")
    simulate.add_argument("--tuning", choices=["theoretical", "cv"], help="调参方式")
    simulate.add_argument("--full", action="store_true", default=None, help="情形 (b)/(d) 也使用完整重复数")
    simulate.add_argument("--output", help="报告文件名主干")

    for name, help_text in (("diagnose", "正则条件诊断"), ("edgeworth", "Edgeworth 展开列表")):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("csv_path", nargs="?")
        cmd.add_argument("--preset", help="用模拟场景代替数据文件")
        cmd.add_argument("--rep-index", dest="rep_index", type=int, help="场景的 MC 重复编号")
        cmd.add_argument("--coordinate", help="列名或下标 (默认: 0)")
        _add_fit_flags(cmd)
        cmd.add_argument("--output", help="报告文件名主干")
    diagnose = sub.choices["diagnose"]
    diagnose.add_argument("--delta", type=float, help="条件中的 δ")
    diagnose.add_argument("--a", dest="a", type=float, help="p₀ 增长指数 a")
    diagnose.add_argument("--b", dest="b", type=float, help="β-min 衰减指数 b")
    edgeworth = sub.choices["edgeworth"]
    edgeworth.add_argument("--mode", choices=["diagnostic", "plug-in"], help="真实参数或代入估计")
    edgeworth.add_argument("--grid-min", dest="grid_min", type=float)
    edgeworth.add_argument("--grid-max", dest="grid_max", type=float)
    edgeworth.add_argument("--grid-points", dest="grid_points", type=int)

    replay = sub.add_parser("replay", help="按运行清单重新执行")
    replay.add_argument("manifest_path")
    replay.add_argument("--output", help="重放报告的文件名主干")
    return parser


def _env_name(action: argparse.Action) -> str:
    longs = [s for s in action.option_strings if s.startswith("--")]
    flag = longs[0][2:] if longs else action.dest
    return flag.replace("-", "_")


def apply_env_overrides(parser: argparse.ArgumentParser, args: argparse.Namespace) -> Dict[str, Any]:
    """未给出的参数从 ALASSO_<FLAG> 环境变量读取"""
    subparser = parser._subparsers._group_actions[0].choices[args.command]
    arguments = {}
    for action in subparser._actions:
        if action.dest in ("help",) or action.dest in GLOBAL_DESTS:
            continue
        value = getattr(args, action.dest, None)
        if value is None:
            value = env_override(_env_name(action))
        if value is not None:
            arguments[action.dest] = value
    return arguments


def configure_logging(level: Optional[str]):
    logging.basicConfig(level=getattr(logging, str(level).upper(), logging.INFO), format=LOG_FORMAT)


async def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.output_dir:
        os.environ["ALASSO_OUTPUT_DIR"] = args.output_dir

    app = AlassoApp(args.config)
    try:
        await app.initialize()
    except AlassoError as e:
        configure_logging(args.log_level or "INFO")
        logger.error(f"✗ 初始化失败: {e}", exc_info=True)
        print(json.dumps(e.to_dict(), ensure_ascii=False, indent=2))
        return e.exit_code
    configure_logging(args.log_level or app.config.get_logging_config()["level"])

    arguments = apply_env_overrides(parser, args)
    result = await app.dispatch(args.command, arguments)
    print(json.dumps(to_jsonable(result), ensure_ascii=False, indent=2))
    return int(result.get("exit_code", 0))


def run_cli():
    """同步入口点"""
    sys.exit(asyncio.run(main()))


if __name__ == "__main__":
    run_cli()
