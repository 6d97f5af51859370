"""
Delta Square Verifier Configuration Module

환경 변수와 설정값을 관리합니다.
"""

from enum import Enum
from functools import lru_cache
from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class OutputFormat(str, Enum):
    """출력 형식"""
    JSON = "json"       # JSON lines
    CSV = "csv"         # 헤더 포함 CSV
    TEXT = "text"       # 사람이 읽는 표


STATEMENT_IDS: tuple[str, ...] = (
    "gen-delta",
    "gen-delta-square",
    "schroeder",
    "f-triple",
    "s-sum",
    "main-thm",
    "invo-sums",
    "appendix-q0",
    "q0-delta-square",
    "t0-k0",
    "observ",
    "hook-lemma",
)


class Settings(BaseSettings):
    """
    Delta Square Verifier 설정

    환경 변수(DELTASQ_ 접두사) 또는 .env 파일에서 설정값을 로드합니다.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="DELTASQ_",
        case_sensitive=False,
        extra="ignore"
    )

    # ===== Bound Settings =====
    max_n: int = Field(
        default=6,
        ge=1,
        le=8,
        description="대칭함수 차수 / 경로 크기 상한"
    )
    max_m: int = Field(
        default=3,
        ge=0,
        le=6,
        description="0 라벨 개수(m) 및 zero valley 개수(p) 상한"
    )

    # ===== Cache Settings =====
    cache_dir: str = Field(
        default="data/htilde",
        description="H̃_μ 테이블 캐시 디렉토리 (DELTASQ_CACHE_DIR)"
    )
    cache_enabled: bool = Field(
        default=True,
        description="디스크 캐시 사용 여부"
    )
    cache_format_version: int = Field(
        default=1,
        ge=1,
        description="캐시 파일 포맷 버전"
    )

    # ===== Output Settings =====
    output_format: OutputFormat = Field(
        default=OutputFormat.JSON,
        description="출력 형식 (json/csv/text)"
    )
    threads: int = Field(
        default=1,
        ge=1,
        le=64,
        description="검증 캠페인 워커 스레드 수"
    )
    statements: list[str] = Field(
        default_factory=list,
        description="검증 대상 statement id 목록 (비어 있으면 전체)"
    )

    # ===== Logging =====
    log_level: str = Field(
        default="INFO",
        description="로그 레벨"
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """로그 레벨 검증"""
        level = v.upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"알 수 없는 로그 레벨: {v}")
        return level

    @field_validator("statements")
    @classmethod
    def validate_statements(cls, v: list[str]) -> list[str]:
        """statement id 검증"""
        unknown = [s for s in v if s not in STATEMENT_IDS]
        if unknown:
            raise ValueError(f"알 수 없는 statement id: {', '.join(unknown)}")
        return v

    @property
    def cache_path(self) -> Path:
        """캐시 디렉토리 경로"""
        return Path(self.cache_dir)

    @property
    def active_statements(self) -> tuple[str, ...]:
        """실제로 실행할 statement 목록"""
        return tuple(self.statements) if self.statements else STATEMENT_IDS


@lru_cache
def get_settings() -> Settings:
    """
    설정 인스턴스를 반환합니다.

    캐싱되어 여러 번 호출해도 동일한 인스턴스를 반환합니다.
    """
    return Settings()


# 전역 설정 인스턴스
settings = get_settings()
