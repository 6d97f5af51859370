"""
H̃_μ 테이블 디스크 캐시

차수별로 하나의 Parquet 파일(htilde_n{n}_v{version}.parquet)에
H̃_μ 의 단항식 전개를 저장하고, 로드 시 ⟨H̃_μ, H̃_μ⟩_* 무결성 값을 확인합니다.
"""

import json
from pathlib import Path
from typing import TYPE_CHECKING, Optional

import pandas as pd
from loguru import logger

from .config import settings
from .exceptions import CacheIntegrityError

if TYPE_CHECKING:
    from ..algebra.partitions import Partition
    from ..algebra.symfunc import SymFunc

COLUMNS = ["kind", "partition", "lam", "value"]


class HTildeCache:
    """
    H̃ 테이블 저장소

    - 차수별 Parquet 파일
    - integrity 행: ⟨H̃_μ, H̃_μ⟩_* 의 정규 문자열
    - 로드 시 직교성 검사 (실패 시 CacheIntegrityError)

    Usage:
        >>> cache = HTildeCache()
        >>> cache.save(3, table)
        >>> table = cache.load(3)
    """

    def __init__(self, cache_dir: Optional[str] = None, version: Optional[int] = None):
        """
        Args:
            cache_dir: 캐시 디렉토리 (기본값: settings.cache_dir)
            version: 파일 포맷 버전 (기본값: settings.cache_format_version)
        """
        self.cache_dir = Path(cache_dir or settings.cache_dir)
        self.version = version or settings.cache_format_version

    def _get_file_path(self, degree: int) -> Path:
        return self.cache_dir / f"htilde_n{degree}_v{self.version}.parquet"

    def _save_parquet(self, df: pd.DataFrame, path: Path) -> None:
        df.to_parquet(path, engine="pyarrow", compression="snappy", index=False)

    def _load_parquet(self, path: Path) -> pd.DataFrame:
        try:
            return pd.read_parquet(path, engine="pyarrow")
        except Exception as e:
            raise CacheIntegrityError(f"unreadable cache file {path}: {e}") from e

    def exists(self, degree: int) -> bool:
        return self._get_file_path(degree).exists()

    def save(self, degree: int, table: dict["Partition", "SymFunc"]) -> Path:
        """테이블 저장 (integrity 행 포함)"""
        from ..algebra.qt_algebra import rat_text, rat_to_json
        from ..macdonald.basis import star_inner

        rows = []
        for mu, func in table.items():
            for lam, coeff in func.coeffs.items():
                rows.append({
                    "kind": "coeff",
                    "partition": json.dumps(mu.to_list()),
                    "lam": json.dumps(lam.to_list()),
                    "value": json.dumps(rat_to_json(coeff), separators=(",", ":")),
                })
            rows.append({
                "kind": "integrity",
                "partition": json.dumps(mu.to_list()),
                "lam": "",
                "value": rat_text(star_inner(func, func)),
            })

        self.cache_dir.mkdir(parents=True, exist_ok=True)
        path = self._get_file_path(degree)
        self._save_parquet(pd.DataFrame(rows, columns=COLUMNS), path)
        logger.debug(f"H̃ 캐시 저장: degree={degree}, {len(table)} partitions → {path}")
        return path

    def _parse(self, degree: int, df: pd.DataFrame) -> tuple[dict, dict]:
        from ..algebra.partitions import Partition
        from ..algebra.qt_algebra import rat_from_json
        from ..algebra.symfunc import SymFunc

        coeffs: dict[Partition, dict] = {}
        integrity: dict[Partition, str] = {}
        for row in df.itertuples(index=False):
            mu = Partition(tuple(json.loads(row.partition)))
            if row.kind == "integrity":
                integrity[mu] = row.value
                coeffs.setdefault(mu, {})
            else:
                lam = Partition(tuple(json.loads(row.lam)))
                coeffs.setdefault(mu, {})[lam] = rat_from_json(json.loads(row.value))
        table = {mu: SymFunc(degree, c) for mu, c in coeffs.items()}
        return table, integrity

    def load(self, degree: int, validate: bool = True) -> Optional[dict]:
        """
        테이블 로드

        Args:
            degree: 차수
            validate: 직교성/무결성 검사 여부

        Returns:
            Partition → SymFunc, 파일이 없으면 None
        """
        path = self._get_file_path(degree)
        if not path.exists():
            return None
        table, integrity = self._parse(degree, self._load_parquet(path))
        if validate:
            self._validate(degree, table, integrity)
        logger.debug(f"H̃ 캐시 로드: degree={degree} ({path.name})")
        return table

    def _validate(self, degree: int, table: dict, integrity: dict) -> None:
        from ..algebra.partitions import enumerate_partitions, w_mu
        from ..algebra.qt_algebra import qt_equal, rat_text
        from ..macdonald.basis import star_inner

        expected = enumerate_partitions(degree)
        missing = [mu for mu in expected if mu not in table]
        if missing:
            raise CacheIntegrityError(f"missing partition {missing[0]}", missing[0].parts)

        for mu in expected:
            diag = star_inner(table[mu], table[mu])
            if integrity.get(mu) != rat_text(diag) or not qt_equal(diag, w_mu(mu)):
                logger.warning(f"H̃ 캐시 무결성 실패: {mu}")
                raise CacheIntegrityError(f"integrity check failed for {mu}", mu.parts)
            for nu in expected:
                if nu < mu and star_inner(table[mu], table[nu]):
                    logger.warning(f"H̃ 캐시 직교성 실패: {mu}, {nu}")
                    raise CacheIntegrityError(
                        f"orthogonality check failed for {mu} and {nu}", mu.parts
                    )

    def check(self, max_degree: int) -> list[int]:
        """
        저장된 테이블 재검증

        Returns:
            검사한 차수 목록 (비어 있으면 검사할 파일 없음)
        """
        checked = []
        for degree in range(1, max_degree + 1):
            if self.load(degree, validate=True) is not None:
                checked.append(degree)
        return checked

    def clear(self) -> int:
        """현재 버전의 캐시 파일 삭제. 삭제한 파일 수를 반환"""
        if not self.cache_dir.exists():
            return 0
        removed = 0
        for path in self.cache_dir.glob(f"htilde_n*_v{self.version}.parquet"):
            path.unlink()
            removed += 1
        logger.info(f"H̃ 캐시 삭제: {removed} files")
        return removed

    def get_cache_stats(self) -> dict:
        """저장된 캐시 통계"""
        files = sorted(self.cache_dir.glob("htilde_n*.parquet")) if self.cache_dir.exists() else []
        total_size = sum(f.stat().st_size for f in files)
        return {
            "total_files": len(files),
            "total_size_kb": total_size / 1024,
            "cache_dir": str(self.cache_dir),
            "version": self.version,
        }
