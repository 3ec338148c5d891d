"""命令行入口点"""
from .cli import run_cli

if __name__ == "__main__":
    run_cli()
