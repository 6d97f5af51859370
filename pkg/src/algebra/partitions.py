"""
정수 분할과 셀 통계

Ferrers 다이어그램(프랑스식)의 셀은 (i, j) = (열, 행), 0부터 시작합니다.
    coarm a'(c) = i, coleg l'(c) = j
    arm a(c)    = μ_j - i - 1
    leg l(c)    = μ'_i - j - 1

B_μ, T_μ, Π_μ, w_μ 등 모든 Macdonald 측 스칼라가 여기서 계산됩니다.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb, factorial
from typing import Iterator

from .qt_algebra import QT_RING, QTPoly, binom2, q, q_multinomial, t, t_binomial

Cell = tuple[int, int]


@dataclass(frozen=True, order=True)
class Partition:
    """
    정수 분할 (약감소 양의 정수열)

    Usage:
        >>> mu = Partition((3, 1))
        >>> mu.conjugate()
        Partition(parts=(2, 1, 1))
        >>> mu.cell_stats((0, 0))
        (2, 1, 0, 0)
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0]))
        )

    @cached_property
    def _conjugate_parts(self) -> tuple[int, ...]:
        return self.conjugate().parts

    def cells(self) -> list[Cell]:
        """모든 셀 (행 우선, 아래에서 위로)"""
        return [(i, j) for j, row in enumerate(self.parts) for i in range(row)]

    def contains_cell(self, cell: Cell) -> bool:
        i, j = cell
        return 0 <= j < len(self.parts) and 0 <= i < self.parts[j]

    def cell_stats(self, cell: Cell) -> tuple[int, int, int, int]:
        """(arm, leg, coarm, coleg)"""
        if not self.contains_cell(cell):
            raise ValueError(f"cell {cell} is outside {self}")
        i, j = cell
        arm = self.parts[j] - i - 1
        leg = self._conjugate_parts[i] - j - 1
        return arm, leg, i, j

    def hook_length(self, cell: Cell) -> int:
        arm, leg, _, _ = self.cell_stats(cell)
        return arm + leg + 1

    def contains(self, other: "Partition") -> bool:
        """Ferrers 다이어그램 포함 관계 other ⊆ self"""
        if other.length > self.length:
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))

    def multiplicities(self) -> dict[int, int]:
        """m_i(μ): i 와 같은 부분의 개수"""
        return dict(sorted(Counter(self.parts).items()))

    def to_list(self) -> list[int]:
        return list(self.parts)


EMPTY = Partition(())


# ===== 열거 =====

@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result: list[tuple[int, ...]] = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            result.append((first, *rest))
    return tuple(result)


def enumerate_partitions(n: int) -> list[Partition]:
    """n 의 모든 분할 (역사전순). 예: 3 → [(3), (2,1), (1,1,1)]"""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _partitions(n, n)]


def covers(nu: Partition, k: int) -> list[Partition]:
    """μ ⊃_k ν 인 모든 μ"""
    if k < 1:
        raise ValueError("k must be positive")
    return [mu for mu in enumerate_partitions(nu.size + k) if mu.contains(nu)]


def contained(mu: Partition, k: int) -> list[Partition]:
    """ν ⊂_k μ 인 모든 ν"""
    if k < 1:
        raise ValueError("k must be positive")
    if k > mu.size:
        return []
    return [nu for nu in enumerate_partitions(mu.size - k) if mu.contains(nu)]


def hook_partition(k: int, n: int) -> Partition:
    """(k, 1^{n-k})"""
    if not 1 <= k <= n:
        raise ValueError(f"hook (k, 1^(n-k)) needs 1 <= k <= n, got k={k}, n={n}")
    return Partition((k,) + (1,) * (n - k))


def is_hook(mu: Partition) -> bool:
    return mu.length == 0 or all(p == 1 for p in mu.parts[1:])


# ===== Macdonald 스칼라 =====

@lru_cache(maxsize=None)
def b_mu(mu: Partition) -> QTPoly:
    """B_μ = Σ_c q^{a'} t^{l'}"""
    return sum((q ** i * t ** j for i, j in mu.cells()), QT_RING.zero)


@lru_cache(maxsize=None)
def t_mu(mu: Partition) -> QTPoly:
    """T_μ = Π_c q^{a'} t^{l'}"""
    qexp = sum(i for i, _ in mu.cells())
    texp = sum(j for _, j in mu.cells())
    return q ** qexp * t ** texp


@lru_cache(maxsize=None)
def pi_mu(mu: Partition) -> QTPoly:
    """Π_μ = Π_{c ∈ μ/(1)} (1 - q^{a'} t^{l'}). Π_∅ = Π_(1) = 1"""
    result = QT_RING.one
    for i, j in mu.cells():
        if (i, j) != (0, 0):
            result *= QT_RING.one - q ** i * t ** j
    return result


@lru_cache(maxsize=None)
def w_mu(mu: Partition) -> QTPoly:
    """w_μ = Π_c (q^{a} - t^{l+1})(t^{l} - q^{a+1})"""
    result = QT_RING.one
    for cell in mu.cells():
        arm, leg, _, _ = mu.cell_stats(cell)
        result *= (q ** arm - t ** (leg + 1)) * (t ** leg - q ** (arm + 1))
    return result


# ===== 조합 통계 =====

def n_stat(mu: Partition) -> int:
    """n(μ) = Σ_i μ_i (i-1)"""
    return sum(part * idx for idx, part in enumerate(mu.parts))


def g_stat(mu: Partition) -> int:
    """g(μ) = -2n(μ) - |μ| + Σ_i C(m_i + 1, 2)"""
    return -2 * n_stat(mu) - mu.size + sum(comb(m + 1, 2) for m in mu.multiplicities().values())


def appendix_stats(mu: Partition) -> tuple[int, int, dict[int, int]]:
    """(n(μ), g(μ), 중복도)"""
    return n_stat(mu), g_stat(mu), mu.multiplicities()


@lru_cache(maxsize=None)
def z_lambda(lam: Partition) -> int:
    """z_λ = Π_i i^{m_i} m_i!"""
    result = 1
    for part, mult in lam.multiplicities().items():
        result *= part ** mult * factorial(mult)
    return result


def epsilon(lam: Partition) -> int:
    """ε_λ = (-1)^{|λ| - ℓ(λ)}"""
    return -1 if (lam.size - lam.length) % 2 else 1


def t_multinomial_of_multiplicities(mu: Partition) -> QTPoly:
    """[ℓ(μ); m_1(μ), m_2(μ), ...]_t"""
    return q_multinomial(mu.length, list(mu.multiplicities().values()), "t")


def e_spec_q0(n: int, k: int, mu: Partition) -> QTPoly:
    """e_{n-k-1}[B_μ - 1] 의 q=0 특수화 = t^{C(n-k,2)} [ℓ(μ)-1, n-k-1]_t"""
    return t ** binom2(n - k) * t_binomial(mu.length - 1, n - k - 1)
