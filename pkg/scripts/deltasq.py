#!/usr/bin/env python3
"""
deltasq - 명령 디스패처

Usage:
    deltasq enumerate PLD --m 0 --n 3 --k 0
    deltasq verify gen-delta-square --m 0 --n 3
    deltasq table F --n 3 --format csv
    deltasq cache check --degree 5
"""

import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

# 프로젝트 루트를 Python 경로에 추가
sys.path.insert(0, str(Path(__file__).parent.parent))

from scripts import build_tables, enumerate_paths, manage_cache, run_verify
from scripts.common import EXIT_USAGE

COMMANDS: dict[str, Callable[[Optional[Sequence[str]]], int]] = {
    "enumerate": enumerate_paths.main,
    "verify": run_verify.main,
    "table": build_tables.main,
    "cache": manage_cache.main,
}


def usage() -> str:
    return f"usage: deltasq {{{','.join(COMMANDS)}}} [options]"


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    if not args or args[0] in ("-h", "--help"):
        print(usage())
        return 0 if args else EXIT_USAGE
    command = COMMANDS.get(args[0])
    if command is None:
        print(f"unknown command: {args[0]}\n{usage()}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return command(args[1:])
    except SystemExit as e:
        # argparse 오류
        return e.code if isinstance(e.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
