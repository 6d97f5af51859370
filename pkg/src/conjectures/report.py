"""
검증 리포트

수학적 불일치는 예외가 아니라 status = mismatch 인 VerificationReport 로 보고합니다.
JSON lines 스키마: {"statement", "params", "status", "witness", "ms"}
"""

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Iterable, Optional, Sequence, TextIO

import pandas as pd
from loguru import logger

from ..algebra.partitions import enumerate_partitions
from ..algebra.qt_algebra import Scalar, qt_equal, qt_text
from ..algebra.symfunc import SymFunc
from ..core.config import settings
from ..core.exceptions import DeltaSquareError


class VerificationStatus(str, Enum):
    """검증 결과"""
    EQUAL = "equal"
    MISMATCH = "mismatch"


@dataclass
class VerificationReport:
    """statement 하나, 파라미터 하나의 검증 결과"""
    statement: str
    params: dict[str, int]
    status: VerificationStatus
    witness: Optional[str] = None   # 첫 번째 불일치
    ms: float = 0.0
    checks: int = 0                 # 비교한 항등식 수
    notes: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.status is VerificationStatus.MISMATCH and not self.witness:
            raise ValueError("mismatch report needs a witness")

    @property
    def ok(self) -> bool:
        return self.status is VerificationStatus.EQUAL

    def to_dict(self) -> dict[str, Any]:
        return {
            "statement": self.statement,
            "params": dict(self.params),
            "status": self.status.value,
            "witness": self.witness,
            "ms": round(self.ms, 3),
        }

    def summary(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        line = (
            f"{self.statement}({params}): {self.status.value} "
            f"[{self.checks} checks, {self.ms:.1f}ms]"
        )
        if self.witness:
            line += f"\n    witness: {self.witness}"
        return line


# ===== 비교 =====

def sym_witness(lhs: SymFunc, rhs: SymFunc) -> Optional[str]:
    """첫 번째로 다른 단항식 계수 (분할 역사전순). 같으면 None"""
    if lhs.degree != rhs.degree:
        return f"degree {lhs.degree} != {rhs.degree}"
    for lam in enumerate_partitions(lhs.degree):
        a, b = lhs.coeff(lam), rhs.coeff(lam)
        if not qt_equal(a, b):
            return f"[m{lam}] {qt_text(a)} != {qt_text(b)}"
    return None


class ReportBuilder:
    """
    비교를 누적해 VerificationReport 를 만듭니다.

    Usage:
        >>> builder = ReportBuilder("hook-lemma", {"n": 3})
        >>> builder.compare_qt("mu=(3)", lhs, rhs)
        >>> report = builder.finish()
    """

    def __init__(self, statement: str, params: dict[str, int]):
        self.statement = statement
        self.params = params
        self.checks = 0
        self.witness: Optional[str] = None
        self.notes: list[str] = []
        self._started = time.perf_counter()

    def _record(self, label: str, detail: Optional[str]) -> bool:
        self.checks += 1
        if detail is None:
            return True
        if self.witness is None:
            self.witness = f"{label}: {detail}"
            logger.warning(f"{self.statement}{self.params} 불일치 - {self.witness}")
        return False

    def compare_sym(self, label: str, lhs: SymFunc, rhs: SymFunc) -> bool:
        return self._record(label, sym_witness(lhs, rhs))

    def compare_qt(self, label: str, lhs: Scalar, rhs: Scalar) -> bool:
        if qt_equal(lhs, rhs):
            return self._record(label, None)
        return self._record(label, f"{qt_text(lhs)} != {qt_text(rhs)}")

    def expect_empty(self, label: str, problems: Sequence[str]) -> bool:
        """위반 목록이 비어 있어야 함"""
        detail = None
        if problems:
            detail = f"{len(problems)} violation(s), first: {problems[0]}"
        return self._record(label, detail)

    def fail(self, label: str, error: Exception) -> None:
        """계산 자체가 실패한 경우 (다항식이 아님, 대칭이 아님 등)"""
        self._record(label, f"{type(error).__name__}: {error}")

    def note(self, text: str) -> None:
        self.notes.append(text)

    def finish(self) -> VerificationReport:
        status = VerificationStatus.EQUAL if self.witness is None else VerificationStatus.MISMATCH
        return VerificationReport(
            statement=self.statement,
            params=dict(self.params),
            status=status,
            witness=self.witness,
            ms=(time.perf_counter() - self._started) * 1000,
            checks=self.checks,
            notes=list(self.notes),
        )


# ===== 캠페인 =====

def run_campaign(
    verify: Callable[[dict[str, int]], VerificationReport],
    grid: Sequence[dict[str, int]],
    threads: Optional[int] = None,
    statement: str = "",
) -> list[VerificationReport]:
    """
    파라미터 격자 전체를 검증

    결과는 grid 순서 그대로라 스레드 수와 무관하게 같은 순서입니다.

    Args:
        verify: 파라미터 dict 하나를 받는 검증 함수
        grid: 파라미터 목록
        threads: 워커 스레드 수 (기본: settings.threads)
        statement: 로그용 이름
    """
    threads = threads or settings.threads
    logger.info(f"캠페인 시작: {statement or verify.__name__} {len(grid)}개, threads={threads}")

    def run(params: dict[str, int]) -> VerificationReport:
        try:
            return verify(params)
        except DeltaSquareError as error:
            builder = ReportBuilder(statement or verify.__name__, params)
            builder.fail("computation", error)
            return builder.finish()

    if threads <= 1:
        reports = [run(params) for params in grid]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(run, grid))

    failed = sum(1 for r in reports if not r.ok)
    logger.info(f"캠페인 완료: {len(reports) - failed}/{len(reports)} equal")
    return reports


# ===== 출력 =====

def write_jsonl(reports: Iterable[VerificationReport], out: TextIO) -> int:
    count = 0
    for report in reports:
        out.write(json.dumps(report.to_dict(), ensure_ascii=False) + "\n")
        count += 1
    return count


def reports_frame(reports: Iterable[VerificationReport]) -> pd.DataFrame:
    """요약 DataFrame (statement, params, status, ms)"""
    rows = [
        {
            "statement": r.statement,
            "params": json.dumps(r.params),
            "status": r.status.value,
            "ms": round(r.ms, 3),
        }
        for r in reports
    ]
    return pd.DataFrame(rows, columns=["statement", "params", "status", "ms"])


def write_csv(reports: Iterable[VerificationReport], path: Path | TextIO) -> None:
    reports_frame(reports).to_csv(path, index=False)


def load_jsonl(path: Path) -> list[dict[str, Any]]:
    """저장된 리포트 읽기"""
    with open(path, encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]
