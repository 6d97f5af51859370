"""
H̃ 기저 위의 연산자

모든 Δ/∇/Π 연산자는 DeltaExpansion(H̃ 좌표)을 거쳐 작용합니다.
    Δ_f H̃_μ  = f[B_μ] H̃_μ
    Δ'_f H̃_μ = f[B_μ - 1] H̃_μ
    ∇ H̃_μ    = T_μ H̃_μ
    Π H̃_μ    = Π_μ H̃_μ
"""

import threading
from dataclasses import dataclass, field
from typing import Callable

from loguru import logger

from ..algebra.partitions import (
    EMPTY,
    Partition,
    b_mu,
    contained,
    covers,
    enumerate_partitions,
    pi_mu,
    t_mu,
    w_mu,
)
from ..algebra.qt_algebra import QT_FIELD, QT_RING, Q, QTRat, Scalar, qt_equal, to_rat
from ..algebra.symfunc import (
    PowerSumTransform,
    SymFunc,
    VirtualAlphabet,
    e,
    eval_alphabet,
    h,
    multiply,
    pleth_transform,
    skew_h,
)
from ..core.exceptions import InvalidParameterError, InvariantError
from .basis import get_basis, star_inner


# ===== 전개 =====

@dataclass
class DeltaExpansion:
    """
    H̃ 기저 좌표

    Usage:
        >>> expansion = macdonald_expand(e(3))
        >>> expansion.scale(lambda mu: t_mu(mu)).reconstruct()   # ∇e_3
    """

    degree: int
    coefficients: dict[Partition, QTRat] = field(default_factory=dict)

    def coefficient(self, mu: Partition) -> QTRat:
        return self.coefficients.get(mu, QT_FIELD.zero)

    def scale(self, eigenvalue: Callable[[Partition], Scalar]) -> "DeltaExpansion":
        """각 H̃_μ 계수에 eigenvalue(μ) 를 곱함"""
        scaled = {}
        for mu, c in self.coefficients.items():
            value = c * to_rat(eigenvalue(mu))
            if value:
                scaled[mu] = value
        return DeltaExpansion(self.degree, scaled)

    def reconstruct(self) -> SymFunc:
        """Σ c_μ H̃_μ 의 단항식 전개"""
        basis = get_basis(self.degree)
        result = SymFunc.zero(self.degree)
        for mu in basis.partitions:
            c = self.coefficients.get(mu)
            if c:
                result = result + basis[mu].scale(c)
        return result


def macdonald_expand(f: SymFunc) -> DeltaExpansion:
    """c_μ = ⟨f, H̃_μ⟩_* / w_μ"""
    basis = get_basis(f.degree)
    if f.degree == 0:
        return DeltaExpansion(0, {EMPTY: f.coeff(EMPTY)} if not f.is_zero() else {})
    coefficients = {}
    for mu in basis.partitions:
        value = star_inner(f, basis[mu])
        if value:
            coefficients[mu] = value / to_rat(w_mu(mu))
    return DeltaExpansion(f.degree, coefficients)


# ===== 고유값 =====

def b_alphabet(mu: Partition) -> VirtualAlphabet:
    return VirtualAlphabet.from_poly(b_mu(mu))


def b_minus_one_alphabet(mu: Partition) -> VirtualAlphabet:
    return VirtualAlphabet.from_poly(b_mu(mu) - 1)


def mb_alphabet(mu: Partition) -> VirtualAlphabet:
    """M·B_μ, M = (1-q)(1-t)"""
    q, t = QT_RING.gens
    return VirtualAlphabet.from_poly((1 - q) * (1 - t) * b_mu(mu))


_EIGEN_CACHE: dict[tuple[str, Partition, bool], QTRat] = {}
_EIGEN_LOCK = threading.Lock()


def eigen_evaluate(f_index: SymFunc, mu: Partition, primed: bool = False) -> QTRat:
    """f[B_μ] (primed 이면 f[B_μ - 1])"""
    key = (f_index.text(), mu, primed)
    with _EIGEN_LOCK:
        cached = _EIGEN_CACHE.get(key)
    if cached is not None:
        return cached
    alphabet = b_minus_one_alphabet(mu) if primed else b_alphabet(mu)
    value = eval_alphabet(f_index, alphabet)
    with _EIGEN_LOCK:
        _EIGEN_CACHE[key] = value
    return value


def delta(f_index: SymFunc, g: SymFunc, primed: bool = False) -> SymFunc:
    """Δ_f g (primed 이면 Δ'_f g)"""
    expansion = macdonald_expand(g)
    return expansion.scale(lambda mu: eigen_evaluate(f_index, mu, primed)).reconstruct()


def delta_e(k: int, g: SymFunc, primed: bool = False) -> SymFunc:
    """Δ_{e_k} g. k < 0 이면 0"""
    if k < 0:
        return SymFunc.zero(g.degree)
    return delta(e(k), g, primed)


def delta_h(k: int, g: SymFunc) -> SymFunc:
    """Δ_{h_k} g. k < 0 이면 0"""
    if k < 0:
        return SymFunc.zero(g.degree)
    return delta(h(k), g)


def nabla(g: SymFunc) -> SymFunc:
    return macdonald_expand(g).scale(t_mu).reconstruct()


def pi_operator(g: SymFunc, inverse: bool = False) -> SymFunc:
    """Π g (inverse 이면 Π⁻¹ g)"""
    if inverse:
        return macdonald_expand(g).scale(lambda mu: 1 / to_rat(pi_mu(mu))).reconstruct()
    return macdonald_expand(g).scale(pi_mu).reconstruct()


# ===== Pieri 계수 =====

def pieri_c_all(k: int, mu: Partition) -> dict[Partition, QTRat]:
    """h_k^⊥ H̃_μ = Σ_{ν ⊂_k μ} c^{(k)}_{μν} H̃_ν"""
    if k < 1 or k > mu.size:
        raise InvalidParameterError(f"pieri c: invalid k={k} for {mu}")
    skewed = skew_h(k, get_basis(mu.size)[mu])
    expansion = macdonald_expand(skewed)
    allowed = set(contained(mu, k))
    stray = [nu for nu in expansion.coefficients if nu not in allowed]
    if stray:
        raise InvariantError(f"c-coefficient outside ν ⊂_k μ: {stray[0]}")
    return {nu: expansion.coefficient(nu) for nu in contained(mu, k)}


def pieri_d_all(k: int, nu: Partition) -> dict[Partition, QTRat]:
    """e_k[X/M] H̃_ν = Σ_{μ ⊃_k ν} d^{(k)}_{μν} H̃_μ"""
    if k < 1:
        raise InvalidParameterError(f"pieri d: invalid k={k}")
    ek_over_m = pleth_transform(e(k), PowerSumTransform.divide_by_m())
    product = multiply(ek_over_m, get_basis(nu.size)[nu])
    expansion = macdonald_expand(product)
    return {mu: expansion.coefficient(mu) for mu in covers(nu, k)}


def pieri(direction: str, k: int, mu: Partition, nu: Partition) -> QTRat:
    """c^{(k)}_{μν} 또는 d^{(k)}_{μν} (ν ⊂_k μ 필요)"""
    if mu.size - nu.size != k or not mu.contains(nu):
        raise InvalidParameterError(f"{nu} is not contained in {mu} with {k} cells removed")
    if direction == "c":
        return pieri_c_all(k, mu)[nu]
    if direction == "d":
        return pieri_d_all(k, nu)[mu]
    raise InvalidParameterError(f"unknown pieri direction: {direction}")


# ===== E_{n,k} =====

_ENK_CACHE: dict[int, dict[int, SymFunc]] = {}
_ENK_LOCK = threading.Lock()


def _z_rising_coefficients(k: int) -> list[QTRat]:
    """(z;q)_k 의 z 차수별 계수"""
    coeffs = [QT_FIELD.one]
    for i in range(k):
        shifted = [QT_FIELD.zero] + coeffs
        coeffs = coeffs + [QT_FIELD.zero]
        coeffs = [a - Q ** i * b for a, b in zip(coeffs, shifted)]
    return coeffs


def _q_pochhammer(k: int) -> QTRat:
    """(q;q)_k"""
    result = QT_FIELD.one
    for i in range(1, k + 1):
        result *= 1 - Q ** i
    return result


def _solve_enk(n: int) -> dict[int, SymFunc]:
    """
    e_n[X(1-z)/(1-q)] = Σ_k (z;q)_k/(q;q)_k E_{n,k} 를 z 의 각 차수에서 비교해
    k = n, n-1, ..., 1 순서로 풉니다.
    """
    target = e(n)
    # G_d: z^d 계수 (멱합 좌표)
    g_coeffs: list[dict[Partition, QTRat]] = [dict() for _ in range(n + 1)]
    for lam, value in target.p_coeffs.items():
        z_poly = [QT_FIELD.one]
        denom = QT_FIELD.one
        for part in lam.parts:
            nxt = [QT_FIELD.zero] * (len(z_poly) + part)
            for d, c in enumerate(z_poly):
                nxt[d] += c
                nxt[d + part] -= c
            z_poly = nxt
            denom *= 1 - Q ** part
        for d, c in enumerate(z_poly):
            if c:
                g_coeffs[d][lam] = g_coeffs[d].get(lam, QT_FIELD.zero) + value * c / denom

    g_funcs = [SymFunc.from_p(n, coeffs) for coeffs in g_coeffs]
    rising = {k: _z_rising_coefficients(k) for k in range(1, n + 1)}
    solved: dict[int, SymFunc] = {}
    for d in range(n, 0, -1):
        remainder = g_funcs[d]
        for k in range(d + 1, n + 1):
            remainder = remainder - solved[k].scale(rising[k][d] / _q_pochhammer(k))
        solved[d] = remainder.scale(_q_pochhammer(d) / rising[d][d])
    return solved


def enk(n: int, k: int) -> SymFunc:
    """E_{n,k}. E_{0,0} = 1, 그 외 범위 밖은 0"""
    if n == 0:
        return SymFunc.one() if k == 0 else SymFunc.zero(0)
    if n < 0 or k < 0:
        raise InvalidParameterError(f"enk: invalid n={n}, k={k}")
    if k == 0 or k > n:
        return SymFunc.zero(n)
    with _ENK_LOCK:
        table = _ENK_CACHE.get(n)
        if table is None:
            table = _solve_enk(n)
            _ENK_CACHE[n] = table
            logger.debug(f"E_(n,k) 계산 완료: n={n}")
    return table[k]


# ===== 항등식 검사 =====

def reciprocity_check(alpha: Partition, beta: Partition) -> bool:
    """H̃_α[MB_β]/Π_α = H̃_β[MB_α]/Π_β"""
    lhs = eval_alphabet(get_basis(alpha.size)[alpha], mb_alphabet(beta)) / to_rat(pi_mu(alpha))
    rhs = eval_alphabet(get_basis(beta.size)[beta], mb_alphabet(alpha)) / to_rat(pi_mu(beta))
    return qt_equal(lhs, rhs)


def cauchy_check(n: int) -> bool:
    """모든 ν ⊢ n 에 대해 e_n[X B_ν] = Σ_μ H̃_μ H̃_μ[MB_ν] / w_μ"""
    basis = get_basis(n)
    for nu in enumerate_partitions(n):
        lhs = pleth_transform(e(n), PowerSumTransform.scale_by(b_alphabet(nu)))
        rhs = SymFunc.zero(n)
        for mu in basis.partitions:
            weight = eval_alphabet(basis[mu], mb_alphabet(nu)) / to_rat(w_mu(mu))
            rhs = rhs + basis[mu].scale(weight)
        if lhs != rhs:
            logger.warning(f"Cauchy 항등식 실패: n={n}, ν={nu}")
            return False
    return True


def e_h_coefficients(n: int, k: int) -> DeltaExpansion:
    """h_k[X/M] e_{n-k}[X/M] 의 H̃ 전개 (기대값: e_k[B_μ]/w_μ)"""
    transform = PowerSumTransform.divide_by_m()
    product = multiply(pleth_transform(h(k), transform), pleth_transform(e(n - k), transform))
    return macdonald_expand(product)


def generalized_pieri_sum(
    j: int, func: SymFunc, nu: Partition
) -> tuple[QTRat, QTRat]:
    """
    A = e_j[X/M] 인 일반화 Pieri 합의 양변
        Σ_{μ ⊃_j ν} Π_μ F[MB_μ] d^{(j)}_{μν}  vs  Π_ν (Δ_{e_j} F)[MB_ν]
    """
    d_coeffs = pieri_d_all(j, nu)
    lhs = QT_FIELD.zero
    for mu, d in d_coeffs.items():
        if d:
            lhs += to_rat(pi_mu(mu)) * eval_alphabet(func, mb_alphabet(mu)) * d
    rhs = to_rat(pi_mu(nu)) * eval_alphabet(delta_e(j, func), mb_alphabet(nu))
    return lhs, rhs


def pieri_relation_holds(k: int, mu: Partition, nu: Partition) -> bool:
    """c^{(k)}_{μν} = (w_μ/w_ν) d^{(k)}_{μν}"""
    c = pieri("c", k, mu, nu)
    d = pieri("d", k, mu, nu)
    return qt_equal(c, d * to_rat(w_mu(mu)) / to_rat(w_mu(nu)))
