#!/usr/bin/env python3
"""
Path Enumerator

경로 집합을 열거해 객체마다 한 줄씩 출력하고, 마지막에 개수를 붙입니다.

Usage:
    python scripts/enumerate_paths.py PLD --m 0 --n 3 --k 0
    python scripts/enumerate_paths.py SQE --p 0 --n 2 --l 0 --d 0 --format csv
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

# 프로젝트 루트를 Python 경로에 추가
sys.path.insert(0, str(Path(__file__).parent.parent))

from scripts.common import (
    EXIT_OK,
    EXIT_USAGE,
    add_common_arguments,
    open_output,
    output_format,
    setup_logging,
)
from src.core.config import OutputFormat
from src.core.exceptions import DeltaSquareError
from src.paths.enumeration import PathFamily, enumerate_family, records

logger = logging.getLogger(__name__)

LABELLED_PARAMS = ("m", "n", "k")
SCHROEDER_PARAMS = ("p", "n", "l", "d")


def family_params(family: PathFamily, args: argparse.Namespace) -> dict[str, int]:
    """family 에 필요한 파라미터만 모음 (빠진 값은 InvalidParameterError 로)"""
    names = LABELLED_PARAMS if family.labelled else SCHROEDER_PARAMS
    if family in (PathFamily.SQE_REFINED, PathFamily.DDD):
        names = names + ("k",)
    return {name: getattr(args, name) for name in names if getattr(args, name) is not None}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="경로 집합 열거"
    )
    parser.add_argument(
        "family",
        type=str,
        choices=[f.value for f in PathFamily],
        help="경로 집합"
    )
    for name, text in (
        ("m", "0 라벨 개수"),
        ("n", "0 이 아닌 라벨 개수 / 크기"),
        ("k", "장식된 rise 개수 (Schröder 집합은 세분 파라미터)"),
        ("p", "zero valley 개수"),
        ("l", "장식된 rise 개수 (Schröder 집합)"),
        ("d", "장식된 peak 개수"),
    ):
        parser.add_argument(f"--{name}", type=int, default=None, help=text)
    add_common_arguments(parser)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    family = PathFamily(args.family)
    params = family_params(family, args)
    fmt = output_format(args.format)
    logger.info(f"열거: {family.value} {params}")

    count = 0
    try:
        with open_output(args.output) as out:
            if fmt is OutputFormat.CSV:
                frame = records(family, **params)
                frame.to_csv(out, index=False)
                out.write(f"# count: {len(frame)}\n")
                return EXIT_OK
            for obj in enumerate_family(family, **params):
                record = {"area": obj.area(), "dinv": obj.dinv(), **obj.to_dict()}
                if fmt is OutputFormat.JSON:
                    out.write(json.dumps(record) + "\n")
                else:
                    out.write(f"area={record['area']:<3} dinv={record['dinv']:<3} {obj.to_dict()}\n")
                count += 1
            if fmt is OutputFormat.JSON:
                out.write(json.dumps({"count": count}) + "\n")
            else:
                out.write(f"# count: {count}\n")
    except DeltaSquareError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger.info(f"{count}개 객체")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
