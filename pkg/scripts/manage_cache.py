#!/usr/bin/env python3
"""
H̃ Cache Manager

Usage:
    python scripts/manage_cache.py build --degree 5
    python scripts/manage_cache.py check --degree 5
    python scripts/manage_cache.py clear
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

# 프로젝트 루트를 Python 경로에 추가
sys.path.insert(0, str(Path(__file__).parent.parent))

from scripts.common import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, setup_logging
from src.core.cache import HTildeCache
from src.core.config import settings
from src.core.exceptions import CacheIntegrityError, DeltaSquareError
from src.macdonald.basis import MacdonaldBasis

logger = logging.getLogger(__name__)


def build(cache: HTildeCache, max_degree: int, threads: Optional[int]) -> int:
    for degree in range(1, max_degree + 1):
        basis = MacdonaldBasis.compute(degree, threads)
        path = cache.save(degree, basis.table)
        print(f"  degree {degree}: {len(basis.partitions)} partitions -> {path}")
    return EXIT_OK


def check(cache: HTildeCache, max_degree: int) -> int:
    try:
        checked = cache.check(max_degree)
    except CacheIntegrityError as e:
        where = f" (partition {e.partition})" if e.partition else ""
        print(f"cache check failed{where}: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    if not checked:
        print("nothing to check")
    else:
        print(f"cache ok: degrees {', '.join(map(str, checked))}")
    return EXIT_OK


def clear(cache: HTildeCache) -> int:
    removed = cache.clear()
    print(f"removed {removed} file(s)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="H̃ 테이블 캐시 관리"
    )
    parser.add_argument(
        "action",
        type=str,
        choices=["build", "check", "clear", "stats"],
        help="작업"
    )
    parser.add_argument(
        "--degree",
        type=int,
        default=None,
        help=f"최대 차수 (기본: {settings.max_n})"
    )
    parser.add_argument(
        "--cache-dir",
        type=str,
        default=None,
        help=f"캐시 디렉토리 (기본: {settings.cache_dir})"
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="build 워커 스레드 수"
    )
    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="상세 로깅 활성화"
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    cache = HTildeCache(cache_dir=args.cache_dir)
    max_degree = args.degree or settings.max_n
    logger.info(f"캐시: {cache.cache_dir} ({args.action}, degree <= {max_degree})")

    try:
        if args.action == "build":
            return build(cache, max_degree, args.threads)
        if args.action == "check":
            return check(cache, max_degree)
        if args.action == "clear":
            return clear(cache)
    except DeltaSquareError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    stats = cache.get_cache_stats()
    print(f"  파일 수: {stats['total_files']}")
    print(f"  총 크기: {stats['total_size_kb']:.1f} KB")
    print(f"  경로: {stats['cache_dir']} (v{stats['version']})")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
