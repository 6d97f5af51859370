"""
스크립트 공통 옵션

stdlib logging 과 라이브러리의 loguru 출력을 같은 레벨로 맞춥니다.
"""

import argparse
import logging
import sys
from contextlib import contextmanager
from typing import Iterator, Optional, TextIO

from loguru import logger

from src.core.config import OutputFormat, settings

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        type=str,
        default=None,
        choices=[f.value for f in OutputFormat],
        help=f"출력 형식 (기본: {settings.output_format.value})"
    )
    parser.add_argument(
        "--output",
        "-o",
        type=str,
        default=None,
        help="출력 파일 (기본: stdout)"
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help=f"워커 스레드 수 (기본: {settings.threads})"
    )
    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="상세 로깅 활성화"
    )


def setup_logging(verbose: bool = False) -> None:
    level = "DEBUG" if verbose else settings.log_level
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format="%(asctime)s [%(levelname)s] %(message)s",
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(getattr(logging, level, logging.INFO))
    logger.remove()
    logger.add(sys.stderr, level=level)


def output_format(value: Optional[str]) -> OutputFormat:
    return OutputFormat(value) if value else settings.output_format


@contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    """파일 경로가 없으면 stdout"""
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        yield f
