#!/usr/bin/env python3
"""
Verification Campaign Runner

statement id 하나(또는 all)를 파라미터 격자 전체에서 검증합니다.
지정하지 않은 파라미터는 기본 범위(n ≤ --max-n, m = p = 0, 나머지 전체)로 채웁니다.

종료 코드: 0 = 모두 equal, 1 = mismatch 발견, 2 = 사용법 오류

Usage:
    python scripts/run_verify.py gen-delta-square --m 0 --n 3
    python scripts/run_verify.py main-thm --n 4
    python scripts/run_verify.py all --max-n 3 --format text
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

# 프로젝트 루트를 Python 경로에 추가
sys.path.insert(0, str(Path(__file__).parent.parent))

from scripts.common import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    add_common_arguments,
    open_output,
    output_format,
    setup_logging,
)
from src.conjectures.report import VerificationReport, write_csv, write_jsonl
from src.conjectures.statements import DEFAULT_MAX_N, campaign, expand_grid, get_statement
from src.core.config import OutputFormat, settings
from src.core.exceptions import DeltaSquareError

logger = logging.getLogger(__name__)

PARAM_NAMES = ("m", "n", "k", "p", "l", "d", "j")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="항등식 검증 캠페인 실행"
    )
    parser.add_argument(
        "statement",
        type=str,
        help="statement id 또는 all (all 이면 DELTASQ_STATEMENTS 필터 적용)"
    )
    for name in PARAM_NAMES:
        parser.add_argument(f"--{name}", type=int, default=None, help=f"{name} 고정")
    parser.add_argument(
        "--max-n",
        type=int,
        default=DEFAULT_MAX_N,
        help=f"n 을 지정하지 않았을 때의 상한 (기본: {DEFAULT_MAX_N})"
    )
    add_common_arguments(parser)
    return parser


def statement_ids(requested: str) -> list[str]:
    if requested == "all":
        return list(settings.active_statements)
    get_statement(requested)
    return [requested]


def run(args: argparse.Namespace) -> list[VerificationReport]:
    given = {name: getattr(args, name) for name in PARAM_NAMES}
    reports: list[VerificationReport] = []
    for statement_id in statement_ids(args.statement):
        stmt = get_statement(statement_id)
        if args.statement == "all":
            # all 에서는 statement 가 받지 않는 파라미터를 무시
            scoped = {k: v for k, v in given.items() if k in stmt.params}
        else:
            scoped = given
        grid = expand_grid(statement_id, scoped, args.max_n)
        reports.extend(campaign(statement_id, grid, args.threads))
    return reports


def write_reports(reports: list[VerificationReport], fmt: OutputFormat, path: Optional[str]) -> None:
    with open_output(path) as out:
        if fmt is OutputFormat.JSON:
            write_jsonl(reports, out)
        elif fmt is OutputFormat.CSV:
            write_csv(reports, out)
        else:
            for report in reports:
                out.write(report.summary() + "\n")
                for note in report.notes:
                    out.write(f"    note: {note}\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    try:
        reports = run(args)
    except DeltaSquareError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    write_reports(reports, output_format(args.format), args.output)

    failed = [r for r in reports if not r.ok]
    logger.info("=" * 70)
    logger.info(f"검증 완료: {len(reports) - len(failed)}/{len(reports)} equal")
    for report in failed:
        logger.warning(f"  mismatch: {report.statement} {report.params} - {report.witness}")
    logger.info("=" * 70)
    return EXIT_MISMATCH if failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
