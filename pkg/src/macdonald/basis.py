"""
Modified Macdonald 기저 H̃_μ[X; q, t]

채우기(filling) 공식으로 단항식 계수를 직접 계산합니다.
    H̃_μ = Σ_σ q^{inv(σ)} t^{maj(σ)} x^σ

- 다이어그램: 프랑스식, 셀 (열, 행)
- 하강(descent): 바로 아래 셀보다 큰 값을 가진 셀, maj = Σ (leg + 1)
- 공격 쌍: 같은 행, 또는 위 행의 셀이 아래 행의 셀보다 엄격히 오른쪽
- 읽기 순서: 위 행부터, 각 행은 왼쪽에서 오른쪽
- inv = #(읽기 순서상 앞선 셀의 값이 더 큰 공격 쌍) - Σ_{하강} arm
"""

import threading
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from loguru import logger
from sympy.utilities.iterables import multiset_permutations

from ..algebra.partitions import EMPTY, Partition, enumerate_partitions, epsilon, w_mu, z_lambda
from ..algebra.qt_algebra import QT_FIELD, QT_RING, Q, QTRat, T, qt_equal, to_rat
from ..algebra.symfunc import SymFunc
from ..core.cache import HTildeCache
from ..core.config import settings
from ..core.exceptions import BoundExceededError, CacheIntegrityError, DegreeMismatchError


class _FillingGeometry:
    """읽기 순서, 공격 쌍, 하강 후보를 미리 계산"""

    def __init__(self, mu: Partition):
        rows = list(range(mu.length - 1, -1, -1))
        self.cells = [(i, j) for j in rows for i in range(mu.parts[j])]
        position = {cell: idx for idx, cell in enumerate(self.cells)}

        self.attacks: list[tuple[int, int]] = []
        for a, (i, j) in enumerate(self.cells):
            for b in range(a + 1, len(self.cells)):
                i2, j2 = self.cells[b]
                if j2 == j or (j2 == j - 1 and i > i2):
                    self.attacks.append((a, b))

        # (셀, 아래 셀, leg+1, arm)
        self.descents: list[tuple[int, int, int, int]] = []
        for (i, j), idx in position.items():
            if j == 0:
                continue
            arm, leg, _, _ = mu.cell_stats((i, j))
            self.descents.append((idx, position[(i, j - 1)], leg + 1, arm))


def htilde_coefficient(mu: Partition, lam: Partition) -> QTRat:
    """[m_λ] H̃_μ: 내용이 λ 인 채우기의 q^inv t^maj 합"""
    geometry = _FillingGeometry(mu)
    word = [value for value, count in enumerate(lam.parts, start=1) for _ in range(count)]
    stats: Counter[tuple[int, int]] = Counter()
    for filling in multiset_permutations(word):
        inv = sum(1 for a, b in geometry.attacks if filling[a] > filling[b])
        maj = 0
        for upper, lower, weight, arm in geometry.descents:
            if filling[upper] > filling[lower]:
                maj += weight
                inv -= arm
        stats[(inv, maj)] += 1
    return to_rat(QT_RING({exps: count for exps, count in stats.items()}))


def htilde(mu: Partition) -> SymFunc:
    """H̃_μ 의 단항식 전개"""
    n = mu.size
    if n > settings.max_n:
        raise BoundExceededError(f"|μ|={n} exceeds max_n={settings.max_n}")
    if n == 0:
        return SymFunc.one()
    return SymFunc(n, {lam: htilde_coefficient(mu, lam) for lam in enumerate_partitions(n)})


def star_inner(f: SymFunc, g: SymFunc) -> QTRat:
    """⟨f, g⟩_* = ⟨ωφf, g⟩, φf[X] = f[MX]"""
    if f.degree != g.degree:
        raise DegreeMismatchError(f"degree {f.degree} vs {g.degree}")
    gp = g.p_coeffs
    total = QT_FIELD.zero
    for lam, a in f.p_coeffs.items():
        b = gp.get(lam)
        if not b:
            continue
        factor = QT_FIELD(z_lambda(lam) * epsilon(lam))
        for part in lam.parts:
            factor *= (1 - Q ** part) * (1 - T ** part)
        total += a * b * factor
    return total


class MacdonaldBasis:
    """
    차수 n 의 H̃_μ 테이블

    Usage:
        >>> basis = get_basis(3)
        >>> basis[Partition((2, 1))]
        >>> basis.partitions
    """

    def __init__(self, degree: int, table: dict[Partition, SymFunc]):
        """
        Args:
            degree: 차수
            table: Partition → H̃_μ (단항식 전개)
        """
        self.degree = degree
        self.table = table
        self.partitions = enumerate_partitions(degree)

    def __getitem__(self, mu: Partition) -> SymFunc:
        return self.table[mu]

    def __contains__(self, mu: Partition) -> bool:
        return mu in self.table

    @classmethod
    def compute(cls, degree: int, threads: Optional[int] = None) -> "MacdonaldBasis":
        """채우기 공식으로 새로 계산 (분할별 병렬)"""
        if degree > settings.max_n:
            raise BoundExceededError(f"degree {degree} exceeds max_n={settings.max_n}")
        parts = enumerate_partitions(degree)
        workers = threads or settings.threads
        if workers > 1 and len(parts) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                funcs = list(pool.map(htilde, parts))
        else:
            funcs = [htilde(mu) for mu in parts]
        logger.debug(f"H̃ 기저 계산 완료: degree={degree}, {len(parts)} partitions")
        return cls(degree, dict(zip(parts, funcs)))

    def orthogonality_violation(self) -> Optional[tuple[Partition, Partition]]:
        """⟨H̃_λ, H̃_μ⟩_* = w_μ δ 가 깨지는 첫 쌍 (없으면 None)"""
        for i, lam in enumerate(self.partitions):
            for mu in self.partitions[i:]:
                value = star_inner(self.table[lam], self.table[mu])
                expected = w_mu(mu) if lam == mu else QT_RING.zero
                if not qt_equal(value, expected):
                    return lam, mu
        return None


_BASES: dict[int, MacdonaldBasis] = {}
_BASIS_LOCK = threading.Lock()


def get_basis(degree: int, cache: Optional[HTildeCache] = None) -> MacdonaldBasis:
    """
    프로세스 공유 H̃ 기저 (차수별 한 번만 생성)

    settings.cache_enabled 이면 디스크 캐시를 먼저 확인하고,
    없거나 손상되었으면 새로 계산해 저장합니다.
    """
    basis = _BASES.get(degree)
    if basis is not None:
        return basis
    with _BASIS_LOCK:
        basis = _BASES.get(degree)
        if basis is not None:
            return basis
        if degree == 0:
            basis = MacdonaldBasis(0, {EMPTY: SymFunc.one()})
        elif settings.cache_enabled:
            store = cache or HTildeCache()
            table = None
            try:
                table = store.load(degree)
            except CacheIntegrityError as e:
                logger.warning(f"H̃ 캐시 무시 (degree={degree}): {e}")
            if table is None:
                basis = MacdonaldBasis.compute(degree)
                store.save(degree, basis.table)
            else:
                basis = MacdonaldBasis(degree, table)
        else:
            basis = MacdonaldBasis.compute(degree)
        _BASES[degree] = basis
        return basis


def clear_basis_memory() -> None:
    """프로세스 메모리의 기저 테이블 비우기"""
    with _BASIS_LOCK:
        _BASES.clear()
