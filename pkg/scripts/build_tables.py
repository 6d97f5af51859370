#!/usr/bin/env python3
"""
Polynomial Table Builder

F / S 점화식 값과 SQE / DDd 조합론 열거값을 (n, k, p, d, l) 격자에서 계산해
정규형 다항식 문자열로 출력합니다. 출력은 스레드 수와 무관하게 같습니다.

Usage:
    python scripts/build_tables.py F --n 3
    python scripts/build_tables.py SQE --max-n 3 --max-p 1 --format csv -o sqe.csv
"""

import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Optional, Sequence

# 프로젝트 루트를 Python 경로에 추가
sys.path.insert(0, str(Path(__file__).parent.parent))

import pandas as pd

from scripts.common import (
    EXIT_OK,
    EXIT_USAGE,
    add_common_arguments,
    open_output,
    output_format,
    setup_logging,
)
from src.algebra.qt_algebra import QTPoly, qt_text
from src.conjectures.families import Key, domain, f_recursive, s_recursive
from src.core.config import OutputFormat, settings
from src.core.exceptions import BoundExceededError, DeltaSquareError
from src.paths.enumeration import PathFamily, qt_polynomial

logger = logging.getLogger(__name__)

COLUMNS = ["n", "k", "p", "d", "l", "value"]


def _sqe(n: int, k: int, p: int, d: int, ell: int) -> QTPoly:
    return qt_polynomial(PathFamily.SQE_REFINED, p, n, ell, d, k)


def _ddd(n: int, k: int, p: int, d: int, ell: int) -> QTPoly:
    return qt_polynomial(PathFamily.DDD, p, n, ell, d, k)


TABLE_KINDS: dict[str, Callable[..., QTPoly]] = {
    "F": f_recursive,
    "S": s_recursive,
    "SQE": _sqe,
    "DDd": _ddd,
}


def table_keys(n: Optional[int], p: Optional[int], max_n: int, max_p: int) -> list[Key]:
    """n, p 를 고정하면 그 값만, 아니면 상한까지"""
    n_top = n if n is not None else max_n
    p_top = p if p is not None else max_p
    if n_top > settings.max_n or p_top > settings.max_m:
        raise BoundExceededError(
            f"table bounds n={n_top}, p={p_top} exceed max_n={settings.max_n}, "
            f"max_m={settings.max_m}"
        )
    return [
        key
        for key in domain(n_top, p_top)
        if (n is None or key[0] == n) and (p is None or key[2] == p)
    ]


def build_table(kind: str, keys: Sequence[Key], threads: Optional[int] = None) -> pd.DataFrame:
    """
    값 테이블 (행 순서 = keys 순서)

    Args:
        kind: F | S | SQE | DDd
        keys: (n, k, p, d, l) 목록
        threads: 워커 스레드 수 (기본: settings.threads)
    """
    compute = TABLE_KINDS[kind]
    workers = threads or settings.threads

    def row(key: Key) -> list[object]:
        return [*key, qt_text(compute(*key))]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, keys))
    else:
        rows = [row(key) for key in keys]
    return pd.DataFrame(rows, columns=COLUMNS)


def write_table(frame: pd.DataFrame, fmt: OutputFormat, path: Optional[str]) -> None:
    with open_output(path) as out:
        if fmt is OutputFormat.CSV:
            frame.to_csv(out, index=False)
        elif fmt is OutputFormat.JSON:
            for record in frame.to_dict(orient="records"):
                out.write(json.dumps(record, ensure_ascii=False) + "\n")
        else:
            out.write(frame.to_string(index=False) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="F / S / SQE / DDd 다항식 테이블 생성"
    )
    parser.add_argument(
        "kind",
        type=str,
        choices=list(TABLE_KINDS),
        help="테이블 종류"
    )
    parser.add_argument("--n", type=int, default=None, help="n 고정")
    parser.add_argument("--p", type=int, default=None, help="p 고정")
    parser.add_argument(
        "--max-n",
        type=int,
        default=3,
        help="n 상한 (기본: 3)"
    )
    parser.add_argument(
        "--max-p",
        type=int,
        default=0,
        help="p 상한 (기본: 0)"
    )
    add_common_arguments(parser)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    try:
        keys = table_keys(args.n, args.p, args.max_n, args.max_p)
        frame = build_table(args.kind, keys, args.threads)
    except DeltaSquareError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    write_table(frame, output_format(args.format), args.output)
    logger.info(f"{args.kind} 테이블: {len(frame)} rows")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
