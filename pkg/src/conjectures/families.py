"""
F / S 계열 다항식

세 가지 방법으로 F_{n,k;p}^{(d,ℓ)} 를 계산합니다.
    - 정의: t^{n-k-ℓ} ⟨Δ_{h_{n-k-ℓ}} Δ_{e_ℓ} e_{n+p-d}[X(1-q^k)/(1-q)], e_p h_{n-d}⟩
    - 점화식: FTable (메모이제이션, 반복 DFS)
    - Π⁻¹∇E_{n-ℓ,k} 를 MB_γ 에서 평가한 합
S_{n,k;p}^{(d,ℓ)} = ([n]_q/[k]_q) F 는 STable 점화식과 정확한 나눗셈 양쪽으로 얻습니다.

키 순서는 항상 (n, k, p, d, ℓ) 입니다.
"""

import threading
from typing import Iterator, Optional

from loguru import logger

from ..algebra.partitions import enumerate_partitions, pi_mu, t_mu, w_mu
from ..algebra.qt_algebra import (
    QT_FIELD,
    QT_RING,
    Q,
    QTPoly,
    binom2,
    exact_divide,
    is_polynomial,
    monomial,
    q_binomial,
    q_int,
    to_rat,
)
from ..algebra.symfunc import (
    PowerSumTransform,
    e,
    eval_alphabet,
    h,
    hall_inner,
    multiply,
    pleth_transform,
)
from ..core.exceptions import InvalidParameterError
from ..macdonald.operators import (
    b_alphabet,
    delta_e,
    delta_h,
    enk,
    macdonald_expand,
    mb_alphabet,
)

Key = tuple[int, int, int, int, int]


def _check_key(n: int, k: int, p: int, d: int, ell: int) -> None:
    if min(n, k, p, d, ell) < 0:
        raise InvalidParameterError(
            f"F/S parameters must be non-negative: n={n}, k={k}, p={p}, d={d}, l={ell}"
        )


def base_value(n: int, p: int, d: int, ell: int) -> QTPoly:
    """F_{n,n;p}^{(d,ℓ)} = δ_{ℓ0} q^{C(n-d,2)} [n, n-d]_q [n+p-1, p]_q"""
    if ell != 0:
        return QT_RING.zero
    return (
        monomial(binom2(n - d), 0)
        * q_binomial(n, n - d)
        * q_binomial(n + p - 1, p)
    )


def closed_form(key: Key) -> Optional[QTPoly]:
    """
    점화식 없이 정해지는 값 (초기조건, 기저, 범위 밖)

    None 이면 점화식이 필요한 키입니다. F 와 S 가 공유합니다.
    """
    n, k, p, d, ell = key
    if min(key) < 0:
        return QT_RING.zero
    if n == 0:
        return QT_RING.one if k == p == d == ell == 0 else QT_RING.zero
    if k == 0 or k + ell > n or d > n:
        return QT_RING.zero
    if k == n:
        return base_value(n, p, d, ell)
    return None


def domain(n_max: int, p_max: int) -> Iterator[Key]:
    """n ≥ 1, 1 ≤ k ≤ n-ℓ, d ≤ n 인 (n,k,p,d,ℓ) (n+p ≤ n_max + p_max 범위)"""
    for n in range(1, n_max + 1):
        for p in range(p_max + 1):
            for d in range(n + 1):
                for ell in range(n):
                    for k in range(1, n - ell + 1):
                        yield (n, k, p, d, ell)


# ===== 정의 =====

def k_transform(k: int) -> PowerSumTransform:
    """f ↦ f[X(1-q^k)/(1-q)]"""
    return PowerSumTransform(lambda r: (1 - Q ** (k * r)) / (1 - Q ** r), f"[{k}]_q")


def f_direct(n: int, k: int, p: int, d: int, ell: int) -> QTPoly:
    """
    정의로 계산한 F_{n,k;p}^{(d,ℓ)}

    Args:
        n, k, p, d, ell: 음이 아닌 정수
    """
    _check_key(n, k, p, d, ell)
    if n == 0:
        return QT_RING.one if k == p == d == ell == 0 else QT_RING.zero
    if k + ell > n or d > n:
        return QT_RING.zero

    degree = n + p - d
    if degree == 0:
        # Δ 는 상수에 e_ℓ[0] h_{n-k-ℓ}[0] 로 작용
        return QT_RING.one if ell == 0 and k == n else QT_RING.zero

    g = pleth_transform(e(degree), k_transform(k))
    g = delta_e(ell, g)
    g = delta_h(n - k - ell, g)
    value = hall_inner(g, multiply(e(p), h(n - d)))
    return is_polynomial(value * to_rat(monomial(0, n - k - ell)))


# ===== 점화식 =====

class _RecursionTable:
    """
    메모이제이션 점화식 테이블 공통부

    의존 키를 스택으로 먼저 채우는 반복 DFS 라 재귀 깊이가 n 과 무관합니다.
    """

    name = "table"

    def __init__(self) -> None:
        self._memo: dict[Key, QTPoly] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._memo)

    def _dependencies(self, key: Key) -> list[Key]:
        n, k, p, d, ell = key
        deps: list[Key] = []
        seen: set[Key] = set()
        for j in range(p + 1):
            for s in range(k + 1):
                for u in range(n - k - ell + 1):
                    for v in range(min(s + j, ell) + 1):
                        dep = (n - k, u + v, p - j, d - k + s, ell - v)
                        if dep not in seen and closed_form(dep) is None:
                            seen.add(dep)
                            deps.append(dep)
        return deps

    def _lookup(self, key: Key) -> QTPoly:
        value = closed_form(key)
        return value if value is not None else self._memo[key]

    def _evaluate(self, key: Key) -> QTPoly:
        raise NotImplementedError

    def value(self, n: int, k: int, p: int, d: int, ell: int) -> QTPoly:
        _check_key(n, k, p, d, ell)
        key = (n, k, p, d, ell)
        closed = closed_form(key)
        if closed is not None:
            return closed
        with self._lock:
            stack = [key]
            while stack:
                top = stack[-1]
                if top in self._memo:
                    stack.pop()
                    continue
                missing = [dep for dep in self._dependencies(top) if dep not in self._memo]
                if missing:
                    stack.extend(missing)
                    continue
                self._memo[top] = self._evaluate(top)
                stack.pop()
            logger.debug(f"{self.name}{key} 계산 (메모 {len(self._memo)}개)")
            return self._memo[key]

    def entries(self) -> dict[Key, QTPoly]:
        with self._lock:
            return dict(self._memo)


class FTable(_RecursionTable):
    """
    F_{n,k;p}^{(d,ℓ)} 점화식

    Usage:
        >>> table = FTable()
        >>> table.value(3, 1, 0, 0, 0)
    """

    name = "F"

    def _evaluate(self, key: Key) -> QTPoly:
        n, k, p, d, ell = key
        total = QT_RING.zero
        for j in range(p + 1):
            for s in range(k + 1):
                outer = (
                    monomial(binom2(s), p - j)
                    * q_binomial(k, s)
                    * q_binomial(k + j - 1, j)
                )
                if not outer:
                    continue
                inner = QT_RING.zero
                for u in range(n - k - ell + 1):
                    for v in range(min(s + j, ell) + 1):
                        coeff = (
                            monomial(binom2(v), 0)
                            * q_binomial(s + j, v)
                            * q_binomial(s + j + u - 1, u)
                        )
                        if coeff:
                            inner += coeff * self._lookup(
                                (n - k, u + v, p - j, d - k + s, ell - v)
                            )
                total += outer * inner
        return monomial(0, n - k - ell) * total


class STable(_RecursionTable):
    """
    S_{n,k;p}^{(d,ℓ)} 점화식 (비동차항 F 는 FTable 에서)

    Usage:
        >>> table = STable()
        >>> table.value(2, 1, 0, 0, 0)     # (1+q)t
    """

    name = "S"

    def __init__(self, f_table: Optional[FTable] = None):
        """
        Args:
            f_table: 공유할 F 테이블 (없으면 새로 생성)
        """
        super().__init__()
        self.f_table = f_table if f_table is not None else FTable()

    def _evaluate(self, key: Key) -> QTPoly:
        n, k, p, d, ell = key
        total = QT_RING.zero
        for j in range(p + 1):
            for s in range(k + 1):
                outer = (
                    monomial(binom2(s), p - j)
                    * q_binomial(s + j, s)
                    * q_binomial(k + j - 1, s + j - 1)
                )
                if not outer:
                    continue
                inner = QT_RING.zero
                for u in range(n - k - ell + 1):
                    for v in range(min(s + j, ell) + 1):
                        coeff = (
                            monomial(binom2(v), 0)
                            * q_binomial(u + v, v)
                            * q_binomial(s + j + u - 1, s + j - v)
                        )
                        if coeff:
                            inner += coeff * self._lookup(
                                (n - k, u + v, p - j, d - k + s, ell - v)
                            )
                total += outer * inner
        return self.f_table.value(n, k, p, d, ell) + monomial(k, n - ell - k) * total


_F_TABLE = FTable()
_S_TABLE = STable(_F_TABLE)


def f_recursive(n: int, k: int, p: int, d: int, ell: int) -> QTPoly:
    return _F_TABLE.value(n, k, p, d, ell)


def s_recursive(n: int, k: int, p: int, d: int, ell: int) -> QTPoly:
    return _S_TABLE.value(n, k, p, d, ell)


def s_from_f(n: int, k: int, p: int, d: int, ell: int) -> QTPoly:
    """([n]_q/[k]_q)·F. [k]_q 가 나누지 않으면 NotPolynomialError"""
    _check_key(n, k, p, d, ell)
    closed = closed_form((n, k, p, d, ell))
    if closed is not None:
        return closed
    return exact_divide(q_int(n) * f_recursive(n, k, p, d, ell), q_int(k))


# ===== ∇E_{n,k} =====

def f_via_nabla_enk(n: int, k: int, p: int, d: int, ell: int) -> QTPoly:
    """
    Σ_{γ ⊢ n+p-d} (Π⁻¹∇E_{n-ℓ,k})[MB_γ] · Π_γ/w_γ · e_ℓ[B_γ] e_p[B_γ]

    k = 0 이거나 n+p = d (γ = ∅) 이면 초기조건/정의 값을 그대로 돌려줍니다.
    """
    _check_key(n, k, p, d, ell)
    if n == 0 or k == 0 or k + ell > n or d > n:
        return closed_form((n, k, p, d, ell)) or QT_RING.zero
    degree = n + p - d
    if degree == 0:
        return QT_RING.one if ell == 0 and k == n else QT_RING.zero

    kernel = (
        macdonald_expand(enk(n - ell, k))
        .scale(lambda mu: to_rat(t_mu(mu)) / to_rat(pi_mu(mu)))
        .reconstruct()
    )
    e_ell = e(ell)
    e_p = e(p)
    total = QT_FIELD.zero
    for gamma in enumerate_partitions(degree):
        weight = to_rat(pi_mu(gamma)) / to_rat(w_mu(gamma))
        alphabet = b_alphabet(gamma)
        factor = eval_alphabet(e_ell, alphabet) * eval_alphabet(e_p, alphabet)
        if not factor:
            continue
        total += eval_alphabet(kernel, mb_alphabet(gamma)) * weight * factor
    return is_polynomial(total)


def clear_tables() -> None:
    """모듈 전역 F/S 메모 초기화"""
    global _F_TABLE, _S_TABLE
    _F_TABLE = FTable()
    _S_TABLE = STable(_F_TABLE)
