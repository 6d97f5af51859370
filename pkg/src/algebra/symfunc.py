"""
대칭함수

차수 n 의 동차 대칭함수를 단항식 기저 {m_λ} 좌표 (계수 ∈ ℚ(q,t))로 저장합니다.
곱, Hall 내적, ω, 플레티즘은 멱합 기저 {p_λ} 좌표에서 계산합니다.

- 전이행렬 P[λ][μ] = [m_μ] p_λ 는 차수별로 한 번만 만들어 공유합니다.
- 가상 알파벳 A (정수 계수 q,t 다항식)에서의 값: p_k[A] = A(q^k, t^k)
"""

import threading
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product as iter_product
from math import comb
from typing import Any, Callable, Iterable, Mapping

from loguru import logger
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement, ring
from sympy.utilities.iterables import multiset_permutations

from ..core.exceptions import DegreeMismatchError, InvalidParameterError
from .partitions import EMPTY, Partition, enumerate_partitions, epsilon, z_lambda
from .qt_algebra import (
    QT_FIELD,
    QT_RING,
    QTPoly,
    QTRat,
    Q,
    T,
    Scalar,
    is_polynomial,
    rat_from_json,
    rat_text,
    rat_to_json,
    specialize,
    swap_qt,
    to_rat,
)

BASES = ("m", "e", "h", "p", "s")


# ===== 전이 테이블 =====

def _count_distributions(parts: tuple[int, ...], target: tuple[int, ...]) -> int:
    """parts 의 각 부분을 target 의 칸에 배정해 칸 합이 target 이 되는 방법 수"""

    @lru_cache(maxsize=None)
    def count(idx: int, remaining: tuple[int, ...]) -> int:
        if idx == len(parts):
            return 1 if not any(remaining) else 0
        total = 0
        for j, room in enumerate(remaining):
            if room >= parts[idx]:
                nxt = remaining[:j] + (room - parts[idx],) + remaining[j + 1:]
                total += count(idx + 1, nxt)
        return total

    return count(0, target)


@dataclass
class _Transition:
    degree: int
    partitions: list[Partition]
    index: dict[Partition, int]
    p_to_m: list[list[int]]          # [λ][μ] = [m_μ] p_λ
    m_to_p: list[list[Any]]          # [μ][λ] = [p_λ] m_μ (QQ)


_TRANSITIONS: dict[int, _Transition] = {}
_TRANSITION_LOCK = threading.Lock()


def _transition(degree: int) -> _Transition:
    """차수별 전이 테이블 (한 번만 계산)"""
    cached = _TRANSITIONS.get(degree)
    if cached is not None:
        return cached
    with _TRANSITION_LOCK:
        cached = _TRANSITIONS.get(degree)
        if cached is not None:
            return cached
        parts = enumerate_partitions(degree)
        index = {lam: i for i, lam in enumerate(parts)}
        p_to_m = [[_count_distributions(lam.parts, mu.parts) for mu in parts] for lam in parts]
        size = len(parts)
        matrix = DomainMatrix([[QQ(x) for x in row] for row in p_to_m], (size, size), QQ)
        m_to_p = matrix.inv().to_list()
        table = _Transition(degree, parts, index, p_to_m, m_to_p)
        _TRANSITIONS[degree] = table
        logger.debug(f"transition table built: degree={degree}, size={size}")
        return table


# ===== SymFunc =====

@dataclass(frozen=True, eq=False)
class SymFunc:
    """
    차수 n 동차 대칭함수 (단항식 기저 좌표)

    Usage:
        >>> h2 = basis_element("h", Partition((2,)))
        >>> e2 = basis_element("e", Partition((2,)))
        >>> hall_inner(h2, e2)
    """

    degree: int
    coeffs: Mapping[Partition, QTRat] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise InvalidParameterError(f"degree must be non-negative: {self.degree}")
        cleaned: dict[Partition, QTRat] = {}
        for lam, value in self.coeffs.items():
            if lam.size != self.degree:
                raise DegreeMismatchError(
                    f"partition {lam} does not have size {self.degree}"
                )
            value = to_rat(value)
            if value:
                cleaned[lam] = value
        object.__setattr__(self, "coeffs", cleaned)

    __hash__ = None  # type: ignore[assignment]

    # ----- 생성 -----

    @classmethod
    def zero(cls, degree: int) -> "SymFunc":
        return cls(degree, {})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls(0, {EMPTY: QT_FIELD.one})

    @classmethod
    def from_p(cls, degree: int, p_coeffs: Mapping[Partition, Scalar]) -> "SymFunc":
        """멱합 기저 좌표에서 단항식 좌표로"""
        table = _transition(degree)
        result = [QT_FIELD.zero] * len(table.partitions)
        for lam, value in p_coeffs.items():
            value = to_rat(value)
            if not value:
                continue
            row = table.p_to_m[table.index[lam]]
            for j, count in enumerate(row):
                if count:
                    result[j] += value * count
        return cls(degree, dict(zip(table.partitions, result)))

    # ----- 좌표 -----

    def coeff(self, lam: Partition) -> QTRat:
        return self.coeffs.get(lam, QT_FIELD.zero)

    @cached_property
    def p_coeffs(self) -> dict[Partition, QTRat]:
        """멱합 기저 좌표"""
        table = _transition(self.degree)
        result = [QT_FIELD.zero] * len(table.partitions)
        for mu, value in self.coeffs.items():
            row = table.m_to_p[table.index[mu]]
            for j, c in enumerate(row):
                if c:
                    result[j] += value * c
        return {lam: v for lam, v in zip(table.partitions, result) if v}

    def is_zero(self) -> bool:
        return not self.coeffs

    def polynomial_coeffs(self) -> dict[Partition, QTPoly]:
        """계수를 QTPoly 로. 다항식이 아니면 NotPolynomialError"""
        return {lam: is_polynomial(v) for lam, v in self.coeffs.items()}

    # ----- 산술 -----

    def _check_degree(self, other: "SymFunc") -> None:
        if self.degree != other.degree:
            raise DegreeMismatchError(f"degree {self.degree} vs {other.degree}")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check_degree(other)
        merged = dict(self.coeffs)
        for lam, value in other.coeffs.items():
            merged[lam] = merged.get(lam, QT_FIELD.zero) + value
        return SymFunc(self.degree, merged)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.degree, {lam: -v for lam, v in self.coeffs.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, factor: Scalar) -> "SymFunc":
        factor = to_rat(factor)
        return SymFunc(self.degree, {lam: v * factor for lam, v in self.coeffs.items()})

    def __mul__(self, other: Any) -> "SymFunc":
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "SymFunc":
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.degree == other.degree and (self - other).is_zero()

    def map_coeffs(self, fn: Callable[[QTRat], Scalar]) -> "SymFunc":
        return SymFunc(self.degree, {lam: to_rat(fn(v)) for lam, v in self.coeffs.items()})

    def specialize(self, q_value: Scalar | None = None, t_value: Scalar | None = None) -> "SymFunc":
        return self.map_coeffs(lambda v: specialize(v, q_value, t_value))

    def swap_qt(self) -> "SymFunc":
        return self.map_coeffs(swap_qt)

    # ----- 직렬화 -----

    def to_dict(self) -> dict[str, Any]:
        """{"degree": n, "basis": "m", "terms": [...]} (분할 역사전순)"""
        terms = [
            {"partition": lam.to_list(), "coeff": rat_to_json(self.coeffs[lam])}
            for lam in enumerate_partitions(self.degree)
            if lam in self.coeffs
        ]
        return {"degree": self.degree, "basis": "m", "terms": terms}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "SymFunc":
        if data.get("basis", "m") != "m":
            raise ValueError("only monomial-basis JSON is supported")
        degree = int(data["degree"])
        coeffs = {
            Partition(tuple(term["partition"])): rat_from_json(term["coeff"])
            for term in data["terms"]
        }
        return cls(degree, coeffs)

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = [
            f"({rat_text(self.coeffs[lam])})*m{lam}"
            for lam in enumerate_partitions(self.degree)
            if lam in self.coeffs
        ]
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"SymFunc(degree={self.degree}, {self.text()})"


# ===== 기저 =====

@lru_cache(maxsize=None)
def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """SSYT(shape, content) 의 개수. 가장 큰 값을 가로 띠로 제거하며 재귀"""
    if not content:
        return 1 if not shape else 0
    last = content[-1]
    rest = content[:-1]
    total = 0
    # shape/ν 가 크기 last 인 가로 띠인 ν 를 나열
    ranges = []
    for idx, part in enumerate(shape):
        lower = shape[idx + 1] if idx + 1 < len(shape) else 0
        ranges.append(range(lower, part + 1))
    for nu in iter_product(*ranges):
        if sum(shape) - sum(nu) != last:
            continue
        total += _kostka(tuple(p for p in nu if p > 0), rest)
    return total


def kostka(shape: Partition, content: Partition) -> int:
    return _kostka(shape.parts, content.parts)


def _elementary_single(k: int) -> SymFunc:
    if k == 0:
        return SymFunc.one()
    return SymFunc(k, {Partition((1,) * k): QT_FIELD.one})


def _complete_single(k: int) -> SymFunc:
    return SymFunc(k, {lam: QT_FIELD.one for lam in enumerate_partitions(k)})


@lru_cache(maxsize=None)
def basis_element(basis: str, lam: Partition) -> SymFunc:
    """e/h/p/s/m 기저 원소의 단항식 전개"""
    if basis not in BASES:
        raise InvalidParameterError(f"unknown basis: {basis}")
    n = lam.size
    if basis == "m":
        return SymFunc(n, {lam: QT_FIELD.one})
    if basis == "p":
        return SymFunc.from_p(n, {lam: QT_FIELD.one})
    if basis == "s":
        return SymFunc(n, {mu: QT_FIELD(kostka(lam, mu)) for mu in enumerate_partitions(n)})
    single = _elementary_single if basis == "e" else _complete_single
    result = SymFunc.one()
    for part in lam.parts:
        result = multiply(result, single(part))
    return result


def e(k: int) -> SymFunc:
    return basis_element("e", Partition((k,)) if k else EMPTY)


def h(k: int) -> SymFunc:
    return basis_element("h", Partition((k,)) if k else EMPTY)


def p(k: int) -> SymFunc:
    return basis_element("p", Partition((k,)) if k else EMPTY)


def s(lam: Partition) -> SymFunc:
    return basis_element("s", lam)


_INVERSES: dict[tuple[str, int], list[list[Any]]] = {}
_INVERSE_LOCK = threading.Lock()


def _basis_inverse(basis: str, degree: int) -> list[list[Any]]:
    key = (basis, degree)
    with _INVERSE_LOCK:
        if key not in _INVERSES:
            parts = enumerate_partitions(degree)
            rows = [
                [_rational_constant(basis_element(basis, lam).coeff(mu)) for mu in parts]
                for lam in parts
            ]
            size = len(parts)
            matrix = DomainMatrix(rows, (size, size), QQ)
            _INVERSES[key] = matrix.inv().to_list()
        return _INVERSES[key]


def to_basis(f: SymFunc, basis: str) -> dict[Partition, QTRat]:
    """f 의 e/h/p/s/m 좌표"""
    if basis == "m":
        return dict(f.coeffs)
    if basis == "p":
        return dict(f.p_coeffs)
    if basis not in BASES:
        raise InvalidParameterError(f"unknown basis: {basis}")
    parts = enumerate_partitions(f.degree)
    inverse = _basis_inverse(basis, f.degree)
    result: dict[Partition, QTRat] = {}
    for j, lam in enumerate(parts):
        total = QT_FIELD.zero
        for i, mu in enumerate(parts):
            c = inverse[i][j]
            value = f.coeffs.get(mu)
            if c and value:
                total += value * c
        if total:
            result[lam] = total
    return result


def from_basis(basis: str, degree: int, coords: Mapping[Partition, Scalar]) -> SymFunc:
    result = SymFunc.zero(degree)
    for lam, value in coords.items():
        result = result + basis_element(basis, lam).scale(value)
    return result


def schur_expand(f: SymFunc) -> dict[Partition, QTRat]:
    return to_basis(f, "s")


# ===== 연산 =====

def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """p_λ p_μ = p_{λ∪μ}"""
    if f.degree == 0:
        return g.scale(f.coeff(EMPTY))
    if g.degree == 0:
        return f.scale(g.coeff(EMPTY))
    product: dict[Partition, QTRat] = {}
    for lam, a in f.p_coeffs.items():
        for mu, b in g.p_coeffs.items():
            nu = Partition.of(*lam.parts, *mu.parts)
            product[nu] = product.get(nu, QT_FIELD.zero) + a * b
    return SymFunc.from_p(f.degree + g.degree, product)


def hall_inner(f: SymFunc, g: SymFunc) -> QTRat:
    """⟨p_λ, p_μ⟩ = z_λ δ_{λμ}"""
    if f.degree != g.degree:
        raise DegreeMismatchError(f"degree {f.degree} vs {g.degree}")
    gp = g.p_coeffs
    total = QT_FIELD.zero
    for lam, a in f.p_coeffs.items():
        b = gp.get(lam)
        if b:
            total += a * b * z_lambda(lam)
    return total


def omega(f: SymFunc) -> SymFunc:
    return SymFunc.from_p(f.degree, {lam: v * epsilon(lam) for lam, v in f.p_coeffs.items()})


def skew_h(j: int, f: SymFunc) -> SymFunc:
    """h_j^⊥ f = f[X + y] 의 y^j 계수"""
    if j < 1:
        raise InvalidParameterError("skew_h requires j >= 1")
    if j > f.degree:
        raise InvalidParameterError(f"skew_h: j={j} exceeds degree {f.degree}")
    result: dict[Partition, QTRat] = {}
    for lam, value in f.p_coeffs.items():
        mult = sorted(lam.multiplicities().items())
        choices = [range(m + 1) for _, m in mult]
        for picks in iter_product(*choices):
            if sum(part * c for (part, _), c in zip(mult, picks)) != j:
                continue
            weight = 1
            rest: list[int] = []
            for (part, m), c in zip(mult, picks):
                weight *= comb(m, c)
                rest.extend([part] * (m - c))
            nu = Partition.of(*rest)
            result[nu] = result.get(nu, QT_FIELD.zero) + value * weight
    return SymFunc.from_p(f.degree - j, result)


def skew_h_adjoint(j: int, f: SymFunc) -> SymFunc:
    """수반성으로 계산한 h_j^⊥ f: [m_μ] = ⟨f, h_j h_μ⟩ (검증용)"""
    if j < 1 or j > f.degree:
        raise InvalidParameterError(f"skew_h_adjoint: invalid j={j} for degree {f.degree}")
    return SymFunc(
        f.degree - j,
        {mu: f.coeff(Partition.of(j, *mu.parts)) for mu in enumerate_partitions(f.degree - j)},
    )


# ===== 가상 알파벳 =====

@dataclass(frozen=True)
class VirtualAlphabet:
    """
    부호 있는 q,t 단항식의 형식적 합

    Usage:
        >>> A = VirtualAlphabet.from_poly(b_mu(Partition((2, 1))))   # 1 + q + t
        >>> eval_alphabet(e(2), A)
    """

    monomials: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        counts: Counter[tuple[int, int]] = Counter()
        for sign, a, b in self.monomials:
            if sign not in (1, -1) or a < 0 or b < 0:
                raise ValueError(f"invalid alphabet monomial: {(sign, a, b)}")
            counts[(a, b)] += sign
        canonical: list[tuple[int, int, int]] = []
        for (a, b), c in sorted(counts.items()):
            sign = 1 if c > 0 else -1
            canonical.extend([(sign, a, b)] * abs(c))
        object.__setattr__(self, "monomials", tuple(canonical))

    @classmethod
    def from_poly(cls, poly: PolyElement) -> "VirtualAlphabet":
        """정수 계수 다항식 → 알파벳 (계수 c 는 |c| 개의 부호 있는 원소)"""
        monomials = []
        for (a, b), c in poly.items():
            if QQ(c).denominator != 1:
                raise ValueError("alphabet polynomial must have integer coefficients")
            count = int(QQ(c).numerator)
            sign = 1 if count > 0 else -1
            monomials.extend([(sign, a, b)] * abs(count))
        return cls(tuple(monomials))

    def __add__(self, other: "VirtualAlphabet") -> "VirtualAlphabet":
        return VirtualAlphabet(self.monomials + other.monomials)

    def __sub__(self, other: "VirtualAlphabet") -> "VirtualAlphabet":
        return VirtualAlphabet(self.monomials + tuple((-s, a, b) for s, a, b in other.monomials))

    def power_sum(self, k: int) -> QTRat:
        """p_k[A] = Σ sign·q^{ka}t^{kb}"""
        return sum((sign * Q ** (k * a) * T ** (k * b) for sign, a, b in self.monomials),
                   QT_FIELD.zero)


def eval_alphabet(f: SymFunc, alphabet: VirtualAlphabet) -> QTRat:
    """f[A]"""
    if f.degree == 0:
        return f.coeff(EMPTY)
    cache: dict[int, QTRat] = {}
    total = QT_FIELD.zero
    for lam, value in f.p_coeffs.items():
        term = value
        for part in lam.parts:
            if part not in cache:
                cache[part] = alphabet.power_sum(part)
            term *= cache[part]
        total += term
    return total


# ===== 멱합 변환 =====

@dataclass(frozen=True)
class PowerSumTransform:
    """
    p_k ↦ r_k p_k 형태의 플레티즘 치환

    Usage:
        >>> T = PowerSumTransform.scale_by(VirtualAlphabet.from_poly(q_int(2)))  # X(1+q)
        >>> pleth_transform(e(2), T)
    """

    multiplier: Callable[[int], Scalar]
    name: str = "custom"

    def r(self, k: int) -> QTRat:
        value = self.multiplier(k)
        if value is None:
            raise InvalidParameterError(f"transform {self.name} undefined at k={k}")
        return to_rat(value)

    def __mul__(self, other: "PowerSumTransform") -> "PowerSumTransform":
        return PowerSumTransform(
            lambda k: self.r(k) * other.r(k), f"{self.name}*{other.name}"
        )

    @classmethod
    def identity(cls) -> "PowerSumTransform":
        return cls(lambda k: 1, "identity")

    @classmethod
    def scale_by(cls, alphabet: VirtualAlphabet) -> "PowerSumTransform":
        """f ↦ f[X·A]"""
        return cls(alphabet.power_sum, f"scale{alphabet.monomials}")

    @classmethod
    def times_m(cls) -> "PowerSumTransform":
        """f ↦ f[MX], M = (1-q)(1-t)"""
        return cls(lambda k: (1 - Q ** k) * (1 - T ** k), "times_M")

    @classmethod
    def divide_by_m(cls) -> "PowerSumTransform":
        """f ↦ f[X/M]"""
        return cls(lambda k: 1 / ((1 - Q ** k) * (1 - T ** k)), "divide_by_M")

    @classmethod
    def divide_by_one_minus_q(cls) -> "PowerSumTransform":
        """f ↦ f[X/(1-q)]"""
        return cls(lambda k: 1 / (1 - Q ** k), "divide_by_1-q")

    @classmethod
    def minus_epsilon(cls) -> "PowerSumTransform":
        """f ↦ f[-εX] = ωf"""
        return cls(lambda k: (-1) ** (k - 1), "minus_epsilon")

    @classmethod
    def epsilon(cls) -> "PowerSumTransform":
        """f ↦ f[εX]"""
        return cls(lambda k: (-1) ** k, "epsilon")


def pleth_transform(f: SymFunc, transform: PowerSumTransform) -> SymFunc:
    cache: dict[int, QTRat] = {}
    result: dict[Partition, QTRat] = {}
    for lam, value in f.p_coeffs.items():
        term = value
        for part in lam.parts:
            if part not in cache:
                cache[part] = transform.r(part)
            term *= cache[part]
        result[lam] = term
    return SymFunc.from_p(f.degree, result)


# ===== 유한 변수 검증 =====

def _rational_constant(value: QTRat) -> Any:
    poly = is_polynomial(value)
    if any(exps != (0, 0) for exps in poly.keys()):
        raise ValueError("expected a q,t-free coefficient")
    return poly.coeff(1) if poly else QQ(0)


def _monomial_in(variables: list[PolyElement], lam: Partition) -> PolyElement:
    """m_λ(x_1..x_r)"""
    r = len(variables)
    zero = variables[0] - variables[0]
    if lam.length > r:
        return zero
    exponents = list(lam.parts) + [0] * (r - lam.length)
    total = zero
    for perm in multiset_permutations(exponents):
        term = zero + 1
        for var, exp in zip(variables, perm):
            term *= var ** exp
        total += term
    return total


def evaluate_in_variables(f: SymFunc, variables: list[PolyElement]) -> PolyElement:
    """q,t 가 없는 대칭함수를 유한 변수 다항식으로"""
    zero = variables[0] - variables[0]
    if f.degree == 0:
        return zero + _rational_constant(f.coeff(EMPTY))
    total = zero
    for lam, value in f.coeffs.items():
        total += _monomial_in(variables, lam) * _rational_constant(value)
    return total


def addition_formula_check(n: int) -> bool:
    """
    e_n[X+Y] = Σ e_{n-i}[X] e_i[Y] 와 Cauchy 항등식
    h_n[XY] = Σ s_λ[X] s_λ[Y] = Σ h_λ[X] m_λ[Y] 를 n+n 변수에서 확인
    """
    if n < 1:
        raise InvalidParameterError("addition_formula_check requires n >= 1")
    names = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
    _, *gens = ring(",".join(names), QQ)
    xs, ys = gens[:n], gens[n:]

    lhs_add = evaluate_in_variables(e(n), xs + ys)
    rhs_add = sum(
        (evaluate_in_variables(e(n - i), xs) * evaluate_in_variables(e(i), ys)
         for i in range(n + 1)),
        xs[0] - xs[0],
    )
    if lhs_add != rhs_add:
        return False

    # h_n[XY] = Σ_λ p_λ[X] p_λ[Y] / z_λ
    def power(vars_: list[PolyElement], k: int) -> PolyElement:
        return sum((v ** k for v in vars_), vars_[0] - vars_[0])

    lhs_cauchy = xs[0] - xs[0]
    for lam in enumerate_partitions(n):
        term = xs[0] - xs[0] + QQ(1, z_lambda(lam))
        for part in lam.parts:
            term *= power(xs, part) * power(ys, part)
        lhs_cauchy += term
    schur_side = xs[0] - xs[0]
    mixed_side = xs[0] - xs[0]
    for lam in enumerate_partitions(n):
        schur_side += evaluate_in_variables(s(lam), xs) * evaluate_in_variables(s(lam), ys)
        mixed_side += (evaluate_in_variables(basis_element("h", lam), xs)
                       * evaluate_in_variables(basis_element("m", lam), ys))
    return lhs_cauchy == schur_side and lhs_cauchy == mixed_side


def coefficient_items(f: SymFunc) -> Iterable[tuple[Partition, QTRat]]:
    """분할 역사전순으로 (λ, 계수)"""
    for lam in enumerate_partitions(f.degree):
        if lam in f.coeffs:
            yield lam, f.coeffs[lam]
