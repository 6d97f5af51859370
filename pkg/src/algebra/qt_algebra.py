"""
q,t 정확 산술

계수체 ℚ, 다항식환 ℚ[q,t], 유리함수체 ℚ(q,t)와 q-아날로그를 제공합니다.

- QTPoly: ``sympy.polys.rings`` 의 ℚ[q,t] 원소 (희소, 지수쌍 → 유리수)
- QTRat:  ``sympy.polys.fields`` 의 ℤ(q,t) 원소 (분자/분모가 서로소로 약분됨)

다변수 GCD는 sympy가 담당하고, 이 모듈은 정규형 출력과 q-아날로그만 다룹니다.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterable, Union

from sympy import QQ, ZZ
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement, ring

from ..core.exceptions import NotPolynomialError

QT_RING, q, t = ring("q,t", QQ)
QT_FIELD, Q, T = field("q,t", ZZ)

QTPoly = PolyElement
QTRat = FracElement
Rational = Any  # sympy QQ dtype

Scalar = Union[int, Fraction, PolyElement, FracElement]

_VARIABLES = ("q", "t")


# ===== Rational =====

def rational(numerator: int, denominator: int = 1) -> Rational:
    """기약 유리수 (분모 양수)"""
    if denominator == 0:
        raise ZeroDivisionError("denominator must be nonzero")
    return QQ(numerator, denominator)


def rational_text(c: Any) -> str:
    """유리수를 'p/r' (정수면 'p') 문자열로"""
    frac = Fraction(int(QQ(c).numerator), int(QQ(c).denominator))
    return str(frac)


def parse_rational(text: str) -> Rational:
    frac = Fraction(text)
    return QQ(frac.numerator, frac.denominator)


# ===== 변환 =====

def to_rat(value: Scalar) -> QTRat:
    """정수, 유리수, QTPoly, QTRat 를 QTRat 로 변환"""
    if isinstance(value, FracElement):
        if value.field == QT_FIELD:
            return value
        ring = QT_FIELD.ring
        return QT_FIELD.new(value.numer.set_ring(ring), value.denom.set_ring(ring))
    if isinstance(value, PolyElement):
        denom, numer = value.clear_denoms()
        return QT_FIELD.new(numer.set_ring(QT_FIELD.ring), QT_FIELD.ring(denom))
    if isinstance(value, Fraction):
        return QT_FIELD(QQ(value.numerator, value.denominator))
    return QT_FIELD(value)


def to_poly(value: Scalar) -> QTPoly:
    """다항식 값을 QTPoly 로 변환. 다항식이 아니면 NotPolynomialError"""
    if isinstance(value, PolyElement):
        return value if value.ring == QT_RING else value.set_ring(QT_RING)
    return is_polynomial(to_rat(value))


def is_polynomial(value: QTRat) -> QTPoly:
    """분모가 분자를 나누면 몫 다항식을 반환하고, 아니면 예외를 던집니다."""
    value = to_rat(value)
    denom = value.denom
    if not denom.is_ground:
        raise NotPolynomialError(f"not a polynomial: {rat_text(value)}")
    scale = QQ(1, int(denom.LC))
    numer = value.numer.set_ring(QT_RING)
    return numer * scale


def is_polynomial_value(value: Scalar) -> bool:
    try:
        to_poly(value)
    except NotPolynomialError:
        return False
    return True


def qt_equal(a: Scalar, b: Scalar) -> bool:
    """교차곱으로 판정하는 QTRat 동치"""
    a, b = to_rat(a), to_rat(b)
    return a.numer * b.denom == b.numer * a.denom


def is_zero(value: Scalar) -> bool:
    return not to_rat(value)


def qt_div(a: Scalar, b: Scalar) -> QTRat:
    b = to_rat(b)
    if not b:
        raise ZeroDivisionError("division by zero in Q(q,t)")
    return to_rat(a) / b


def monomial(qexp: int, texp: int, coeff: int = 1) -> QTPoly:
    return QT_RING({(qexp, texp): QQ(coeff)})


# ===== 특수화 =====

def specialize(
    value: Scalar, q_value: Scalar | None = None, t_value: Scalar | None = None
) -> QTRat:
    """q 또는 t 에 값을 대입 (정수/유리수/다항식)"""
    value = to_rat(value)
    subs = []
    if q_value is not None:
        subs.append((Q, to_rat(q_value)))
    if t_value is not None:
        subs.append((T, to_rat(t_value)))
    if not subs:
        return value
    numer = _subs_poly(value.numer, subs)
    denom = _subs_poly(value.denom, subs)
    if not denom:
        raise ZeroDivisionError("specialization hits a pole")
    return numer / denom


def _subs_poly(poly: PolyElement, subs: list[tuple[FracElement, FracElement]]) -> FracElement:
    # 분모가 있는 값을 대입할 수 있도록 체에서 Horner 없이 직접 합산
    values = {0: None, 1: None}
    for gen, val in subs:
        values[0 if gen == Q else 1] = val
    total = QT_FIELD.zero
    for (a, b), c in poly.items():
        term = QT_FIELD(c)
        # 0**0 은 sympy 체에서 ValueError
        if a:
            term *= values[0] ** a if values[0] is not None else Q ** a
        if b:
            term *= values[1] ** b if values[1] is not None else T ** b
        total += term
    return total


def swap_qt(value: Scalar) -> Any:
    """q ↔ t 교환. QTPoly 는 QTPoly 로, 그 외는 QTRat 로"""
    if isinstance(value, PolyElement) and value.ring == QT_RING:
        return QT_RING({(b, a): c for (a, b), c in value.items()})
    value = to_rat(value)
    numer = QT_FIELD.ring({(b, a): c for (a, b), c in value.numer.items()})
    denom = QT_FIELD.ring({(b, a): c for (a, b), c in value.denom.items()})
    return QT_FIELD.new(numer, denom)


def evaluate_at_one(value: Scalar) -> Fraction:
    """q = t = 1 에서의 값"""
    result = specialize(value, 1, 1)
    poly = is_polynomial(result)
    const = poly.coeff(1) if poly else QQ(0)
    return Fraction(int(QQ(const).numerator), int(QQ(const).denominator))


# ===== 정규형 출력 =====

def _sorted_terms(poly: PolyElement) -> list[tuple[tuple[int, int], Any]]:
    return sorted(poly.items(), key=lambda item: item[0])


def _term_text(exps: tuple[int, int], coeff: Any) -> tuple[bool, str]:
    negative = coeff < 0
    magnitude = -coeff if negative else coeff
    factors = []
    for name, e in zip(_VARIABLES, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    c_text = rational_text(magnitude)
    if not factors:
        return negative, c_text
    if c_text == "1":
        return negative, "*".join(factors)
    return negative, "*".join([c_text, *factors])


def poly_text(poly: PolyElement) -> str:
    """항을 (q지수, t지수) 사전순으로 정렬한 정규 문자열. 예: '1 + q + q*t^2'"""
    if not poly:
        return "0"
    pieces: list[str] = []
    for idx, (exps, coeff) in enumerate(_sorted_terms(poly)):
        negative, body = _term_text(exps, coeff)
        if idx == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def _normalized(value: QTRat) -> tuple[PolyElement, PolyElement]:
    """분모의 사전순 최소항 계수가 양수가 되도록 부호 조정"""
    numer, denom = value.numer, value.denom
    lowest = _sorted_terms(denom)[0][1]
    if lowest < 0:
        numer, denom = -numer, -denom
    return numer, denom


def rat_text(value: Scalar) -> str:
    """QTRat 정규 문자열: 다항식이면 그대로, 아니면 '(num)/(den)'"""
    value = to_rat(value)
    numer, denom = _normalized(value)
    if denom == 1:
        return poly_text(numer)
    return f"({poly_text(numer)})/({poly_text(denom)})"


def qt_text(value: Scalar) -> str:
    if isinstance(value, PolyElement) and value.ring == QT_RING:
        return poly_text(value)
    return rat_text(value)


def poly_to_json(poly: PolyElement) -> list[list[Any]]:
    return [[a, b, rational_text(c)] for (a, b), c in _sorted_terms(poly)]


def poly_from_json(terms: Iterable[list[Any]]) -> QTPoly:
    return QT_RING({(int(a), int(b)): parse_rational(str(c)) for a, b, c in terms})


def rat_to_json(value: Scalar) -> dict[str, list[list[Any]]]:
    """{"num": [[a,b,"p/r"],...], "den": [[a,b,"p/r"],...]}"""
    numer, denom = _normalized(to_rat(value))
    return {"num": poly_to_json(numer), "den": poly_to_json(denom)}


def rat_from_json(data: dict[str, list[list[Any]]]) -> QTRat:
    numer = to_rat(poly_from_json(data["num"]))
    denom = to_rat(poly_from_json(data["den"]))
    return qt_div(numer, denom)


# ===== q-아날로그 =====

def _gen(var: str) -> PolyElement:
    if var == "q":
        return q
    if var == "t":
        return t
    raise ValueError(f"unknown variable: {var}")


def q_int(n: int, var: str = "q") -> QTPoly:
    """[n]_q = 1 + q + ... + q^{n-1}, [0]_q = 0"""
    if n < 0:
        raise ValueError("q_int requires n >= 0")
    x = _gen(var)
    return sum((x ** i for i in range(n)), QT_RING.zero)


def t_int(n: int) -> QTPoly:
    return q_int(n, "t")


@lru_cache(maxsize=None)
def q_factorial(n: int, var: str = "q") -> QTPoly:
    """[n]_q!"""
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    result = QT_RING.one
    for i in range(1, n + 1):
        result *= q_int(i, var)
    return result


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int, var: str = "q") -> QTPoly:
    """가우스 이항계수. n < k 또는 k < 0 이면 0"""
    if k < 0 or n < k:
        return QT_RING.zero
    if k == 0 or k == n:
        return QT_RING.one
    x = _gen(var)
    # q^k [n-1, k] + [n-1, k-1]
    return x ** k * q_binomial(n - 1, k, var) + q_binomial(n - 1, k - 1, var)


def t_binomial(n: int, k: int) -> QTPoly:
    return q_binomial(n, k, "t")


def q_multinomial(n: int, parts: Iterable[int], var: str = "q") -> QTPoly:
    """[n]_q! / Π [λ_i]_q!"""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be non-negative")
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    result = QT_RING.one
    remaining = n
    for part in parts:
        result *= q_binomial(remaining, part, var)
        remaining -= part
    return result


def q_rising(s: int) -> Callable[[Scalar], Any]:
    """a ↦ (a;q)_s = (1-a)(1-qa)...(1-q^{s-1}a)"""
    if s < 0:
        raise ValueError("q_rising requires s >= 0")

    def apply(a: Scalar) -> Any:
        if isinstance(a, PolyElement) and a.ring == QT_RING:
            result = QT_RING.one
            for i in range(s):
                result *= QT_RING.one - q ** i * a
            return result
        a_rat = to_rat(a)
        result_rat = QT_FIELD.one
        for i in range(s):
            result_rat *= QT_FIELD.one - Q ** i * a_rat
        return result_rat

    return apply


def binom2(x: int) -> int:
    """C(x, 2) = x(x-1)/2 (모든 정수에서 정의)"""
    return x * (x - 1) // 2


def exact_divide(numerator: Scalar, divisor: Scalar) -> QTPoly:
    """ℚ[q,t] 에서의 정확한 나눗셈. 나머지가 있으면 NotPolynomialError"""
    num = to_poly(numerator)
    den = to_poly(divisor)
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    quotient, remainder = num.div(den)
    if remainder:
        raise NotPolynomialError(
            f"{poly_text(den)} does not divide {poly_text(num)}"
        )
    return quotient
