"""
항등식 검증

각 verify_* 함수는 한 파라미터 조합에서 조합론 측과 대칭함수 측을 모두 계산해
VerificationReport 로 돌려줍니다. STATEMENTS 레지스트리가 id → 검증 함수를 연결합니다.

비교는 항상 단항식 기저 좌표 또는 정규형 q,t 다항식으로 합니다 (무작위 평가점 없음).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from loguru import logger

from ..algebra.partitions import (
    Partition,
    b_mu,
    e_spec_q0,
    enumerate_partitions,
    g_stat,
    is_hook,
    pi_mu,
    t_mu,
    t_multinomial_of_multiplicities,
)
from ..algebra.qt_algebra import (
    QT_FIELD,
    QT_RING,
    T,
    QTPoly,
    QTRat,
    binom2,
    is_polynomial,
    monomial,
    q,
    q_binomial,
    q_int,
    q_multinomial,
    specialize,
    t,
    t_binomial,
    t_int,
    to_rat,
)
from ..algebra.symfunc import (
    PowerSumTransform,
    SymFunc,
    e,
    eval_alphabet,
    h,
    hall_inner,
    multiply,
    omega,
    p,
    pleth_transform,
    s,
    schur_expand,
    skew_h,
)
from ..core.config import STATEMENT_IDS, settings
from ..core.exceptions import (
    BoundExceededError,
    InvalidParameterError,
    NotPolynomialError,
    SymmetryError,
)
from ..macdonald.basis import get_basis
from ..macdonald.operators import (
    b_minus_one_alphabet,
    delta_e,
    delta_h,
    eigen_evaluate,
    generalized_pieri_sum,
    macdonald_expand,
    nabla,
    pieri_c_all,
    pieri_d_all,
)
from ..paths.enumeration import PathFamily, gen_function, qt_polynomial
from ..paths.involution import (
    alternating_gen_function,
    fixed_point_gen_function,
    involution_violations,
)
from ..paths.removal import hperp_combinatorial, removal_violations
from .families import f_direct, f_recursive, f_via_nabla_enk, s_from_f, s_recursive
from .report import ReportBuilder, VerificationReport, run_campaign

DEFAULT_MAX_N = 3


# ===== 파라미터 검사 =====

def _check_bounds(n: int, extra: int = 0) -> None:
    if n > settings.max_n:
        raise BoundExceededError(f"n={n} exceeds max_n={settings.max_n}")
    if extra > settings.max_m:
        raise BoundExceededError(f"m/p={extra} exceeds max_m={settings.max_m}")


def check_n(n: int) -> None:
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    _check_bounds(n)


def check_mn(m: int, n: int) -> None:
    if m < 0:
        raise InvalidParameterError(f"m must be >= 0, got {m}")
    check_n(n)
    _check_bounds(n, m)


def check_mnk(m: int, n: int, k: int) -> None:
    check_mn(m, n)
    if not 0 <= k < n:
        raise InvalidParameterError(f"need 0 <= k < n, got k={k}, n={n}")


def check_schroeder(p: int, n: int, ell: int, d: int) -> None:
    """n > ℓ ≥ 0, 0 ≤ d ≤ n, p ≥ 0 (합 정리와 S 점화식의 공통 범위)"""
    check_n(n)
    if min(p, ell, d) < 0:
        raise InvalidParameterError(f"p, l, d must be non-negative: p={p}, l={ell}, d={d}")
    if ell >= n:
        raise InvalidParameterError(f"need l < n, got l={ell}, n={n}")
    if d > n:
        raise InvalidParameterError(f"need d <= n, got d={d}, n={n}")
    _check_bounds(n, p)


def check_f_domain(p: int, n: int, ell: int, d: int) -> None:
    """F 점화식 범위: n > ℓ, n + p ≥ d"""
    check_n(n)
    if min(p, ell, d) < 0:
        raise InvalidParameterError(f"p, l, d must be non-negative: p={p}, l={ell}, d={d}")
    if ell >= n:
        raise InvalidParameterError(f"need l < n, got l={ell}, n={n}")
    if d > n + p:
        raise InvalidParameterError(f"need d <= n + p, got d={d}, n={n}, p={p}")
    _check_bounds(n, p)


def check_njk(n: int, j: int, k: int) -> None:
    check_n(n)
    if not 1 <= j <= n:
        raise InvalidParameterError(f"need 1 <= j <= n, got j={j}, n={n}")
    if not 0 <= k < n:
        raise InvalidParameterError(f"need 0 <= k < n, got k={k}, n={n}")


def check_nk(n: int, k: int) -> None:
    check_n(n)
    if not 0 <= k < n:
        raise InvalidParameterError(f"need 0 <= k < n, got k={k}, n={n}")


# ===== 대칭함수 측 =====

@lru_cache(maxsize=None)
def sf_gen_delta(m: int, n: int, k: int) -> SymFunc:
    """Δ_{h_m} Δ'_{e_{n-k-1}} e_n (계수가 다항식인지 확인)"""
    check_mnk(m, n, k)
    f = delta_e(n - k - 1, e(n), primed=True)
    if m:
        f = delta_h(m, f)
    f.polynomial_coeffs()
    return f


@lru_cache(maxsize=None)
def sf_gen_delta_square(m: int, n: int, k: int) -> SymFunc:
    """
    ([n-k]_t/[n]_t) Δ_{h_m} Δ_{e_{n-k}} ω(p_n)

    나눗셈 뒤에도 모든 계수가 다항식이어야 하며, 아니면 NotPolynomialError.
    계수의 양수성은 확인하지 않습니다 (positivity_scan 참고).
    """
    check_mnk(m, n, k)
    f = delta_e(n - k, omega(p(n)))
    if m:
        f = delta_h(m, f)
    f = f.scale(to_rat(t_int(n - k)) / to_rat(t_int(n)))
    f.polynomial_coeffs()
    return f


@lru_cache(maxsize=None)
def sf_f_sum(p_: int, n: int, ell: int, d: int) -> QTPoly:
    """⟨Δ_{h_p} Δ'_{e_{n-ℓ-1}} e_n, e_{n-d} h_d⟩"""
    g = delta_e(n - ell - 1, e(n), primed=True)
    if p_:
        g = delta_h(p_, g)
    return is_polynomial(hall_inner(g, multiply(e(n - d), h(d))))


@lru_cache(maxsize=None)
def sf_schroeder(p_: int, n: int, ell: int, d: int) -> QTPoly:
    """([n-ℓ]_t/[n]_t) ⟨Δ_{h_p} Δ_{e_{n-ℓ}} ω(p_n), e_{n-d} h_d⟩"""
    g = delta_e(n - ell, omega(p(n)))
    if p_:
        g = delta_h(p_, g)
    value = hall_inner(g, multiply(e(n - d), h(d)))
    return is_polynomial(value * to_rat(t_int(n - ell)) / to_rat(t_int(n)))


@lru_cache(maxsize=None)
def nabla_en_t0(n: int) -> SymFunc:
    """∇e_n|_{t=0}"""
    return nabla(e(n)).specialize(t_value=0)


def _eigen_combination(f: SymFunc, eigen: Callable[[Partition], QTRat]) -> SymFunc:
    """Σ_μ c_μ · eigen(μ) · H̃_μ (f = Σ c_μ H̃_μ)"""
    return macdonald_expand(f).scale(eigen).reconstruct()


def alternating_delta_sum(f: SymFunc, m: int = 0) -> SymFunc:
    """Σ_{s=0}^{n-1} (-t)^s Δ_{h_m} Δ'_{e_{n-s-1}} f"""
    n = f.degree
    h_m = h(m)

    def eigen(mu: Partition) -> QTRat:
        total = QT_FIELD.zero
        for step in range(n):
            total += (-T) ** step * eigen_evaluate(e(n - step - 1), mu, primed=True)
        return total * eigen_evaluate(h_m, mu)

    return _eigen_combination(f, eigen)


def alternating_square_sum(m: int, n: int) -> SymFunc:
    """Σ_{s=0}^{n-1} (-t)^s ([n-s]_t/[n]_t) Δ_{h_m} Δ_{e_{n-s}} ω(p_n)"""
    h_m = h(m)
    denom = to_rat(t_int(n))

    def eigen(mu: Partition) -> QTRat:
        total = QT_FIELD.zero
        for step in range(n):
            weight = (-T) ** step * to_rat(t_int(n - step)) / denom
            total += weight * eigen_evaluate(e(n - step), mu)
        return total * eigen_evaluate(h_m, mu)

    return _eigen_combination(omega(p(n)), eigen)


def observ_check(f: SymFunc) -> SymFunc:
    """Σ_{s=0}^{n} (-1)^s Δ_{e_{n-s}} f (항상 0 이어야 함)"""
    n = f.degree

    def eigen(mu: Partition) -> QTRat:
        total = QT_FIELD.zero
        for step in range(n + 1):
            total += (-1) ** step * eigen_evaluate(e(n - step), mu)
        return total

    return _eigen_combination(f, eigen)


def lemma_hook_sum(n: int, mu: Partition) -> QTRat:
    """Σ_{s=0}^{n} (-t)^s e_{n-s}[B_μ]"""
    if mu.size != n:
        raise InvalidParameterError(f"{mu} is not a partition of {n}")
    total = QT_FIELD.zero
    for step in range(n + 1):
        total += (-T) ** step * eigen_evaluate(e(n - step), mu)
    return total


def hook_lemma_expected(n: int, mu: Partition) -> QTPoly:
    """μ = (n) 이면 Π_{i<n} (q^i - t), 아니면 0"""
    if mu != Partition((n,)):
        return QT_RING.zero
    result = QT_RING.one
    for i in range(n):
        result *= q ** i - t
    return result


def t0_macmahon(m: int, n: int) -> SymFunc:
    """[n+m-1, m]_q Σ_λ [n; λ]_q m_λ"""
    factor = q_binomial(n + m - 1, m)
    return SymFunc(
        n,
        {lam: factor * q_multinomial(n, lam.parts) for lam in enumerate_partitions(n)},
    )


def delta_q0(n: int, k: int) -> SymFunc:
    """
    Δ'_{e_{n-k-1}} e_n |_{q=0}

    빈 경로에 맞춰 (n, k) = (0, 0) 은 1, k < 0 또는 k ≥ n 은 0 입니다.
    """
    if n == 0:
        return SymFunc.one() if k == 0 else SymFunc.zero(0)
    if not 0 <= k < n:
        return SymFunc.zero(n)
    return sf_gen_delta(0, n, k).specialize(q_value=0)


def pld_q0(n: int, k: int, swap: bool = False) -> SymFunc:
    """PLD_{x,0,t}(0,n)^{*k} (swap 이면 PLD_{x,q,0})"""
    if n == 0:
        return SymFunc.one() if k == 0 else SymFunc.zero(0)
    if not 0 <= k < n:
        return SymFunc.zero(n)
    gf = gen_function(PathFamily.PLD, 0, n, k)
    return gf.specialize(t_value=0) if swap else gf.specialize(q_value=0)


def hperp_recursion_rhs(
    n: int, k: int, j: int, terms: Callable[[int, int], SymFunc], var: str = "t"
) -> SymFunc:
    """Σ_{r=0}^{j} x^{C(j-r,2)} [n-k, r]_x [n-k-r, j-r]_x · terms(n-j, k-j+r)"""
    x = t if var == "t" else q
    total = SymFunc.zero(n - j)
    for r in range(j + 1):
        coeff = (
            x ** binom2(j - r)
            * q_binomial(n - k, r, var)
            * q_binomial(n - k - r, j - r, var)
        )
        if coeff:
            total = total + terms(n - j, k - j + r).scale(coeff)
    return total


def macdonald_q0_expansion(n: int, k: int) -> SymFunc:
    """Σ_μ t^{C(n-k,2)} [ℓ-1, n-k-1]_t [ℓ; m(μ)]_t H̃_μ[X;0,t] (-1)^{n-ℓ} t^{g(μ)}"""
    basis = get_basis(n)
    total = SymFunc.zero(n)
    for mu in enumerate_partitions(n):
        length = mu.length
        coeff = (
            to_rat(monomial(0, binom2(n - k)))
            * to_rat(t_binomial(length - 1, n - k - 1))
            * to_rat(t_multinomial_of_multiplicities(mu))
            * (-1) ** (n - length)
            * T ** g_stat(mu)
        )
        if coeff:
            total = total + basis[mu].specialize(q_value=0).scale(coeff)
    return total


def d_coefficient_sides(n: int, k: int, j: int, nu: Partition) -> tuple[QTRat, QTRat]:
    """
    Σ_{μ ⊃_j ν} e_{n-k-1}[B_μ-1] B_μ Π_μ d^{(j)}_{μν} |_{q=0}  vs
    Π_ν(0,t) t^{C(n-k-j,2)} [ℓ(ν)+j-1, n-k-1]_t [n-k, j]_t [ℓ(ν)]_t
    """
    total = QT_FIELD.zero
    for mu, d in pieri_d_all(j, nu).items():
        if d:
            weight = to_rat(b_mu(mu)) * to_rat(pi_mu(mu))
            total += eigen_evaluate(e(n - k - 1), mu, primed=True) * weight * d
    lhs = specialize(total, q_value=0)
    rhs = (
        specialize(pi_mu(nu), q_value=0)
        * to_rat(monomial(0, binom2(n - k - j)))
        * to_rat(t_binomial(nu.length + j - 1, n - k - 1))
        * to_rat(t_binomial(n - k, j))
        * to_rat(t_int(nu.length))
    )
    return lhs, rhs


def c_coefficient_sides(n: int, k: int, beta: Partition) -> tuple[QTRat, QTRat]:
    """e_{n-k-1}[B_β-1] B_β  vs  Σ_{γ ⊂_k β} c^{(k)}_{βγ} B_γ T_γ"""
    lhs = eigen_evaluate(e(n - k - 1), beta, primed=True) * to_rat(b_mu(beta))
    rhs = QT_FIELD.zero
    for gamma, c in pieri_c_all(k, beta).items():
        rhs += c * to_rat(b_mu(gamma)) * to_rat(t_mu(gamma))
    return lhs, rhs


def q_vandermonde_sides(n: int, k: int, j: int, length: int) -> tuple[QTPoly, QTPoly]:
    """[ℓ+j-1, n-k-1]_t = Σ_{m≥1} t^{(m-n+k+j)(m-1)} [j, n-k-m]_t [ℓ-1, m-1]_t"""
    lhs = t_binomial(length + j - 1, n - k - 1)
    rhs = QT_RING.zero
    for m in range(1, n - k + 1):
        if n - k - m > j:
            continue
        rhs += (
            monomial(0, (m - n + k + j) * (m - 1))
            * t_binomial(j, n - k - m)
            * t_binomial(length - 1, m - 1)
        )
    return lhs, rhs


def pieri_sum_component(i: int) -> SymFunc:
    """e_i[X/M] e_1[X/M]"""
    transform = PowerSumTransform.divide_by_m()
    return multiply(pleth_transform(e(i), transform), pleth_transform(e(1), transform))


def positivity_scan(f: SymFunc) -> list[str]:
    """
    단항식/Schur 계수 중 음의 항이 있는 좌표 목록 (보고용, 실패로 취급하지 않음)
    """
    negative: list[str] = []
    for basis, coords in (("m", f.coeffs), ("s", schur_expand(f))):
        for lam in enumerate_partitions(f.degree):
            value = coords.get(lam)
            if value is None:
                continue
            try:
                poly = is_polynomial(value)
            except NotPolynomialError:
                negative.append(f"{basis}{lam}: not a polynomial")
                continue
            if any(c < 0 for c in poly.coeffs()):
                negative.append(f"{basis}{lam}")
    if negative:
        logger.warning(f"음의 계수 발견: {', '.join(negative[:5])}")
    return negative


# ===== 검증 =====

def verify_gen_delta(m: int, n: int, k: int) -> VerificationReport:
    """PLD(m,n)^{*k} = Δ_{h_m} Δ'_{e_{n-k-1}} e_n"""
    check_mnk(m, n, k)
    builder = ReportBuilder("gen-delta", {"m": m, "n": n, "k": k})
    try:
        comb = gen_function(PathFamily.PLD, m, n, k)
        sf = sf_gen_delta(m, n, k)
    except (NotPolynomialError, SymmetryError) as error:
        builder.fail("computation", error)
        return builder.finish()
    builder.compare_sym("PLD vs Delta", comb, sf)
    if m == 0 and k == 0:
        builder.compare_sym("Delta'_{e_(n-1)} e_n = nabla e_n", sf, nabla(e(n)))
    if k == 0:
        builder.compare_sym("t=0 MacMahon", sf.specialize(t_value=0), t0_macmahon(m, n))
    return builder.finish()


def verify_gen_delta_square(m: int, n: int, k: int) -> VerificationReport:
    """PLSQE(m,n)^{*k} = ([n-k]_t/[n]_t) Δ_{h_m} Δ_{e_{n-k}} ω(p_n)"""
    check_mnk(m, n, k)
    builder = ReportBuilder("gen-delta-square", {"m": m, "n": n, "k": k})
    try:
        comb = gen_function(PathFamily.PLSQE, m, n, k)
        sf = sf_gen_delta_square(m, n, k)
    except (NotPolynomialError, SymmetryError) as error:
        builder.fail("computation", error)
        return builder.finish()
    builder.compare_sym("PLSQE vs Delta square", comb, sf)
    if m == 0 and k == n - 1:
        builder.compare_sym("[n]_q e_n", sf, e(n).scale(q_int(n)))
    negative = positivity_scan(sf)
    if negative:
        builder.note(f"negative coefficients: {', '.join(negative)}")
    return builder.finish()


def verify_schroeder_square(p: int, n: int, ell: int, d: int) -> VerificationReport:
    """
    SQE(p,n\\k)^{*ℓ,∘d} = S_{n,k;p}^{(d,ℓ)}, DDd(p,n\\k)^{*ℓ,∘d} = F_{n,k;p}^{(d,ℓ)},
    Σ_k = ([n-ℓ]_t/[n]_t) ⟨Δ_{h_p} Δ_{e_{n-ℓ}} ω(p_n), e_{n-d} h_d⟩
    """
    check_schroeder(p, n, ell, d)
    builder = ReportBuilder("schroeder", {"p": p, "n": n, "l": ell, "d": d})
    total = QT_RING.zero
    for k in range(1, n - ell + 1):
        refined = qt_polynomial(PathFamily.SQE_REFINED, p, n, ell, d, k)
        builder.compare_qt(f"SQE(p,n\\{k}) vs S", refined, s_recursive(n, k, p, d, ell))
        builder.compare_qt(
            f"DDd(p,n\\{k}) vs F",
            qt_polynomial(PathFamily.DDD, p, n, ell, d, k),
            f_recursive(n, k, p, d, ell),
        )
        total += refined
    sf = sf_schroeder(p, n, ell, d)
    builder.compare_qt("sum_k S vs inner product", total, sf)
    builder.compare_qt("SQE total vs inner product", qt_polynomial(PathFamily.SQE, p, n, ell, d), sf)
    if p == ell == d == 0:
        builder.note("q,t-square case")
    return builder.finish()


def verify_f_triple(p: int, n: int, ell: int, d: int) -> VerificationReport:
    """정의 = 점화식 = Π⁻¹∇E 형태, 그리고 Σ_k F = ⟨Δ_{h_p} Δ'_{e_{n-ℓ-1}} e_n, e_{n-d} h_d⟩"""
    check_f_domain(p, n, ell, d)
    builder = ReportBuilder("f-triple", {"p": p, "n": n, "l": ell, "d": d})
    total = QT_RING.zero
    for k in range(1, n - ell + 1):
        recursive = f_recursive(n, k, p, d, ell)
        builder.compare_qt(f"F definition vs recursion k={k}", f_direct(n, k, p, d, ell), recursive)
        if n + p > d:
            builder.compare_qt(
                f"F nabla E_(n-l,k) vs recursion k={k}",
                f_via_nabla_enk(n, k, p, d, ell),
                recursive,
            )
        total += recursive
    if d <= n:
        builder.compare_qt("sum_k F vs inner product", total, sf_f_sum(p, n, ell, d))
    else:
        builder.note("d > n: only the F recursion domain applies")
    return builder.finish()


def verify_s_sum(p: int, n: int, ell: int, d: int) -> VerificationReport:
    """S 점화식 = ([n]_q/[k]_q) F 와 Σ_k S 정리"""
    check_schroeder(p, n, ell, d)
    builder = ReportBuilder("s-sum", {"p": p, "n": n, "l": ell, "d": d})
    total = QT_RING.zero
    for k in range(1, n - ell + 1):
        recursive = s_recursive(n, k, p, d, ell)
        try:
            divided = s_from_f(n, k, p, d, ell)
        except NotPolynomialError as error:
            builder.fail(f"[k]_q does not divide [n]_q F, k={k}", error)
            continue
        builder.compare_qt(f"S recursion vs [n]_q/[k]_q F k={k}", recursive, divided)
        total += recursive
    builder.compare_qt("sum_k S vs inner product", total, sf_schroeder(p, n, ell, d))
    return builder.finish()


def _hook_dichotomy(builder: ReportBuilder, m: int, n: int) -> None:
    base = nabla_en_t0(n).scale(q_binomial(m + n - 1, m))
    for lam in enumerate_partitions(n):
        lhs = alternating_delta_sum(s(lam), m)
        if is_hook(lam):
            rhs = base.scale((-t) ** (lam.parts[0] - 1))
        else:
            rhs = SymFunc.zero(n)
        builder.compare_sym(f"s{lam}", lhs, rhs)


def verify_main_theorem(m: int, n: int) -> VerificationReport:
    """Σ_s (-t)^s Δ_{h_m} Δ'_{e_{n-s-1}} s_λ: 훅이면 [m+n-1,m]_q ∇e_n|_{t=0} (-t)^{k-1}, 아니면 0"""
    check_mn(m, n)
    builder = ReportBuilder("main-thm", {"m": m, "n": n})
    _hook_dichotomy(builder, m, n)
    return builder.finish()


def verify_alternating_sums(m: int, n: int) -> VerificationReport:
    """
    교대합 항등식 전체

    - 훅/비훅 이분법
    - 대칭함수 교대합 두 가지 (Δ' e_n, Δ ω(p_n))
    - 조합론 교대합 두 가지와 고정점 생성함수
    - involution φ 성질 (PLSQE, PLD)
    - k 별 차이의 교대합이 0
    """
    check_mn(m, n)
    builder = ReportBuilder("invo-sums", {"m": m, "n": n})
    _hook_dichotomy(builder, m, n)

    target = nabla_en_t0(n).scale(q_binomial(m + n - 1, m))
    builder.compare_sym("alternating Delta' e_n", alternating_delta_sum(e(n), m), target)
    builder.compare_sym("alternating Delta omega(p_n)", alternating_square_sum(m, n), target)

    builder.compare_sym("fixed points", fixed_point_gen_function(m, n), target)
    builder.compare_sym(
        "alternating PLD", alternating_gen_function(PathFamily.PLD, m, n), target
    )
    builder.compare_sym(
        "alternating PLSQE", alternating_gen_function(PathFamily.PLSQE, m, n), target
    )
    builder.expect_empty("phi on PLSQE", involution_violations(m, n))
    builder.expect_empty("phi on PLD", involution_violations(m, n, dyck_only=True))

    for family, sf_side in ((PathFamily.PLD, sf_gen_delta), (PathFamily.PLSQE, sf_gen_delta_square)):
        combination = SymFunc.zero(n)
        for k in range(n):
            diff = gen_function(family, m, n, k) - sf_side(m, n, k)
            combination = combination + diff.scale((-t) ** k)
        builder.compare_sym(f"alternating {family.value} differences", combination, SymFunc.zero(n))
    return builder.finish()


def verify_appendix_q0(n: int, j: int, k: int) -> VerificationReport:
    """h_j^⊥ 점화식 (대칭함수/조합론/제거 알고리즘)과 보조 항등식"""
    check_njk(n, j, k)
    builder = ReportBuilder("appendix-q0", {"n": n, "j": j, "k": k})

    sf = delta_q0(n, k)
    builder.compare_sym("h_j^perp recursion (SF)", skew_h(j, sf), hperp_recursion_rhs(n, k, j, delta_q0))

    comb = pld_q0(n, k)
    builder.compare_sym("h_j^perp recursion (paths)", skew_h(j, comb), hperp_recursion_rhs(n, k, j, pld_q0))
    builder.compare_sym("h_j^perp via removal", hperp_combinatorial(j, n, k), skew_h(j, comb))
    builder.expect_empty("removal algorithm", removal_violations(n, k, j))

    def swapped(size: int, kk: int) -> SymFunc:
        return pld_q0(size, kk, swap=True)

    builder.compare_sym(
        "h_j^perp recursion (paths, q<->t)",
        skew_h(j, swapped(n, k)),
        hperp_recursion_rhs(n, k, j, swapped, var="q"),
    )

    builder.compare_sym("q=0 specialization formula", sf, macdonald_q0_expansion(n, k))

    if k >= 1:
        for beta in enumerate_partitions(n):
            lhs, rhs = c_coefficient_sides(n, k, beta)
            builder.compare_qt(f"c-coefficient sum beta={beta}", lhs, rhs)

    if n - j >= 1:
        lengths: set[int] = set()
        for nu in enumerate_partitions(n - j):
            lhs, rhs = d_coefficient_sides(n, k, j, nu)
            builder.compare_qt(f"d-coefficient sum nu={nu}", lhs, rhs)

            lhs_total = QT_FIELD.zero
            rhs_total = QT_FIELD.zero
            for i in range(n - k):
                sign = (-1) ** (n - k - 1 - i)
                left, right = generalized_pieri_sum(j, pieri_sum_component(i), nu)
                builder.compare_qt(f"generalized Pieri nu={nu} i={i}", left, right)
                rhs_total += sign * right
            for mu, d in pieri_d_all(j, nu).items():
                lhs_total += (
                    eigen_evaluate(e(n - k - 1), mu, primed=True)
                    * to_rat(b_mu(mu))
                    * to_rat(pi_mu(mu))
                    * d
                )
            builder.compare_qt(f"generalized Pieri total nu={nu}", lhs_total, rhs_total)
            lengths.add(nu.length)
        for length in sorted(lengths):
            lhs, rhs = q_vandermonde_sides(n, k, j, length)
            builder.compare_qt(f"q-Vandermonde length={length}", lhs, rhs)
    else:
        builder.note("j = n: lemma checks need a non-empty nu")
    return builder.finish()


def q0_delta_square(n: int, k: int) -> dict[str, SymFunc]:
    """q=0 에서 같아야 하는 네 대칭함수"""
    check_nk(n, k)
    return {
        "PLSQE": gen_function(PathFamily.PLSQE, 0, n, k).specialize(q_value=0),
        "PLD": gen_function(PathFamily.PLD, 0, n, k).specialize(q_value=0),
        "delta-square": sf_gen_delta_square(0, n, k).specialize(q_value=0),
        "delta": sf_gen_delta(0, n, k).specialize(q_value=0),
    }


def verify_q0_delta_square(n: int, k: int) -> VerificationReport:
    check_nk(n, k)
    builder = ReportBuilder("q0-delta-square", {"n": n, "k": k})
    sides = q0_delta_square(n, k)
    reference = sides["delta"]
    for name in ("PLSQE", "PLD", "delta-square"):
        builder.compare_sym(f"{name} vs Delta at q=0", sides[name], reference)
    for mu in enumerate_partitions(n):
        value = eval_alphabet(e(n - k - 1), b_minus_one_alphabet(mu))
        builder.compare_qt(f"e_(n-k-1)[B-1] at q=0, mu={mu}", specialize(value, q_value=0), e_spec_q0(n, k, mu))
        lhs = specialize(to_rat(value) * to_rat(b_mu(mu)), q_value=0)
        rhs = to_rat(t_int(n - k)) * specialize(eigen_evaluate(e(n - k), mu), q_value=0)
        builder.compare_qt(f"e_(n-k-1)[B-1] B = [n-k]_t e_(n-k)[B] at q=0, mu={mu}", lhs, rhs)
    return builder.finish()


def verify_t0_k0(m: int, n: int) -> VerificationReport:
    """Δ_{h_m} ∇e_n|_{t=0} = [n+m-1,m]_q Σ_λ [n;λ]_q m_λ = PLD(m,n)^{*0}|_{t=0}"""
    check_mn(m, n)
    builder = ReportBuilder("t0-k0", {"m": m, "n": n})
    nabla_en = nabla(e(n))
    sf = (delta_h(m, nabla_en) if m else nabla_en).specialize(t_value=0)
    macmahon = t0_macmahon(m, n)
    builder.compare_sym("Delta_h nabla e_n vs MacMahon", sf, macmahon)
    builder.compare_sym("generalized Delta k=0", sf_gen_delta(m, n, 0).specialize(t_value=0), macmahon)
    builder.compare_sym(
        "PLD(m,n)^*0 at t=0",
        gen_function(PathFamily.PLD, m, n, 0).specialize(t_value=0),
        macmahon,
    )
    builder.compare_sym(
        "nabla e_n at t=0 = H(n)[X;q,0]",
        nabla_en_t0(n),
        get_basis(n)[Partition((n,))].specialize(t_value=0),
    )
    return builder.finish()


def verify_observ(n: int) -> VerificationReport:
    """모든 s_λ 와 ω(p_n) 에 대해 Σ_s (-1)^s Δ_{e_{n-s}} f = 0"""
    check_n(n)
    builder = ReportBuilder("observ", {"n": n})
    zero = SymFunc.zero(n)
    for lam in enumerate_partitions(n):
        builder.compare_sym(f"s{lam}", observ_check(s(lam)), zero)
    builder.compare_sym("omega(p_n)", observ_check(omega(p(n))), zero)
    return builder.finish()


def verify_hook_lemma(n: int) -> VerificationReport:
    check_n(n)
    builder = ReportBuilder("hook-lemma", {"n": n})
    for mu in enumerate_partitions(n):
        builder.compare_qt(f"mu={mu}", lemma_hook_sum(n, mu), hook_lemma_expected(n, mu))
    return builder.finish()


# ===== 레지스트리 =====

@dataclass(frozen=True)
class Statement:
    """
    검증 가능한 항등식

    params 의 "l" 은 함수 인자 ell 로 전달됩니다.
    """
    id: str
    title: str
    params: tuple[str, ...]
    verify: Callable[..., VerificationReport]
    check: Callable[..., None]

    @staticmethod
    def _kwargs(params: dict[str, int]) -> dict[str, int]:
        return {("ell" if key == "l" else key): value for key, value in params.items()}

    def validate(self, params: dict[str, int]) -> None:
        self.check(**self._kwargs(params))

    def run(self, params: dict[str, int]) -> VerificationReport:
        return self.verify(**self._kwargs(params))


STATEMENTS: dict[str, Statement] = {
    stmt.id: stmt
    for stmt in (
        Statement("gen-delta", "generalized Delta (PLD)", ("n", "m", "k"),
                  verify_gen_delta, check_mnk),
        Statement("gen-delta-square", "generalized Delta square (PLSQE)", ("n", "m", "k"),
                  verify_gen_delta_square, check_mnk),
        Statement("schroeder", "Schröder square paths", ("n", "p", "l", "d"),
                  verify_schroeder_square, check_schroeder),
        Statement("f-triple", "F family: definition, recursion, nabla E", ("n", "p", "l", "d"),
                  verify_f_triple, check_f_domain),
        Statement("s-sum", "S family: recursion and sum", ("n", "p", "l", "d"),
                  verify_s_sum, check_schroeder),
        Statement("main-thm", "hook dichotomy of the alternating sum", ("n", "m"),
                  verify_main_theorem, check_mn),
        Statement("invo-sums", "alternating sums and the involution", ("n", "m"),
                  verify_alternating_sums, check_mn),
        Statement("appendix-q0", "h_j^perp recursion at q=0", ("n", "j", "k"),
                  verify_appendix_q0, check_njk),
        Statement("q0-delta-square", "Delta square at q=0", ("n", "k"),
                  verify_q0_delta_square, check_nk),
        Statement("t0-k0", "generalized Delta at k=0, t=0", ("n", "m"),
                  verify_t0_k0, check_mn),
        Statement("observ", "alternating Delta_e sum vanishes", ("n",),
                  verify_observ, check_n),
        Statement("hook-lemma", "alternating e[B_mu] sum", ("n",),
                  verify_hook_lemma, check_n),
    )
}


def get_statement(statement_id: str) -> Statement:
    try:
        return STATEMENTS[statement_id]
    except KeyError:
        known = ", ".join(STATEMENT_IDS)
        raise InvalidParameterError(
            f"unknown statement id: {statement_id} (known: {known})"
        ) from None


def _default_values(name: str, partial: dict[str, int], max_n: int) -> list[int]:
    n = partial.get("n", 0)
    if name == "n":
        return list(range(1, max_n + 1))
    if name in ("m", "p"):
        return [0]
    if name in ("k", "l"):
        return list(range(n))
    if name == "d":
        return list(range(n + 1))
    if name == "j":
        return list(range(1, n + 1))
    raise InvalidParameterError(f"unknown parameter: {name}")


def expand_grid(
    statement_id: str, given: Optional[dict[str, Optional[int]]] = None, max_n: Optional[int] = None
) -> list[dict[str, int]]:
    """
    주어진 값은 고정하고 나머지는 기본 범위로 채운 파라미터 격자

    Args:
        statement_id: 레지스트리 id
        given: 고정할 값 (None 값은 무시)
        max_n: n 이 없을 때 쓸 상한 (기본 3)

    Raises:
        InvalidParameterError: 알 수 없는 id 또는 범위 밖 파라미터
    """
    stmt = get_statement(statement_id)
    given = {key: value for key, value in (given or {}).items() if value is not None}
    unknown = sorted(set(given) - set(stmt.params))
    if unknown:
        raise InvalidParameterError(
            f"{statement_id} does not take parameter(s): {', '.join(unknown)}"
        )
    grid: list[dict[str, int]] = [{}]
    for name in stmt.params:
        expanded = []
        for partial in grid:
            if name in given:
                values = [given[name]]
            else:
                values = _default_values(name, partial, max_n or DEFAULT_MAX_N)
            expanded.extend({**partial, name: value} for value in values)
        grid = expanded
    for params in grid:
        stmt.validate(params)
    return grid


def campaign(
    statement_id: str, grid: list[dict[str, int]], threads: Optional[int] = None
) -> list[VerificationReport]:
    """레지스트리 id 로 run_campaign"""
    stmt = get_statement(statement_id)
    return run_campaign(stmt.run, grid, threads, statement=stmt.id)
