"""
부호 반전 involution φ 와 교대합

φ: breaking point 이후 처음 만나는 rise 의 장식을 토글합니다.
    wt(P) = (-t)^{dr(P)} q^{dinv(P)} t^{area(P)} x^P
    wt(φ(P)) = -wt(P)  (rise 가 있을 때)
고정점은 rise 가 없는 경로, 즉 넓이 0 이고 장식이 없는 Dyck 경로입니다.
"""

from typing import Iterator, Optional, Sequence

from ..algebra.partitions import Partition
from ..algebra.qt_algebra import QTPoly, monomial, t
from ..algebra.symfunc import SymFunc
from .enumeration import PathFamily, enumerate_plsqe, gen_function
from .objects import DecoratedLabelledPath


def first_rise_after_break(P: DecoratedLabelledPath) -> Optional[int]:
    """breaking row 이후 첫 rise (없으면 None)"""
    start = P.path.breaking_row
    candidates = [i for i in P.path.rises if i > start]
    return min(candidates) if candidates else None


def phi(P: DecoratedLabelledPath) -> DecoratedLabelledPath:
    """
    involution φ

    Usage:
        >>> Q = phi(P)
        >>> phi(Q) == P
        True
    """
    row = first_rise_after_break(P)
    if row is None:
        return P
    return DecoratedLabelledPath(P.path, P.labels, P.drises ^ {row})


def is_fixed_point(P: DecoratedLabelledPath) -> bool:
    return not P.path.rises


def weight(P: DecoratedLabelledPath) -> tuple[QTPoly, Partition]:
    """(-t)^k q^dinv t^area 와 단항식 유형"""
    return (-t) ** P.k * monomial(P.dinv(), P.area()), P.monomial_type()


def union_over_k(
    m: int, n: int, content: Optional[Sequence[int]] = None, dyck_only: bool = False
) -> Iterator[DecoratedLabelledPath]:
    """X = ⊔_k PLSQE(m,n)^{*k} (dyck_only 이면 Y = ⊔_k PLD(m,n)^{*k})"""
    for k in range(n):
        yield from enumerate_plsqe(m, n, k, content, dyck_only=dyck_only)


def involution_violations(
    m: int, n: int, content: Optional[Sequence[int]] = None, dyck_only: bool = False
) -> list[str]:
    """
    φ 의 성질을 전수 확인하고 위반 내역을 반환 (비어 있으면 통과)

    - φ∘φ = id
    - 고정점 ⇔ rise 없음 (넓이 0, 장식 0)
    - 고정점이 아니면 wt(φ(P)) = -wt(P)
    - Dyck 경로는 Dyck 경로로
    """
    problems: list[str] = []
    for P in union_over_k(m, n, content, dyck_only):
        image = phi(P)
        if phi(image) != P:
            problems.append(f"phi(phi(P)) != P for {P.to_dict()}")
        if is_fixed_point(P):
            if image != P or P.area() != 0 or P.k != 0:
                problems.append(f"bad fixed point {P.to_dict()}")
            continue
        w_p, type_p = weight(P)
        w_i, type_i = weight(image)
        if w_i != -w_p or type_i != type_p:
            problems.append(f"weight not negated for {P.to_dict()}")
        if image.k >= n:
            problems.append(f"phi leaves the family for {P.to_dict()}")
        if P.path.is_dyck != image.path.is_dyck:
            problems.append(f"phi changes the Dyck property for {P.to_dict()}")
    return problems


def alternating_gen_function(family: PathFamily | str, m: int, n: int) -> SymFunc:
    """Σ_{s=0}^{n-1} (-t)^s · family(m,n)^{*s}"""
    total = SymFunc.zero(n)
    for s in range(n):
        total = total + gen_function(family, m, n, s).scale((-t) ** s)
    return total


def fixed_point_gen_function(m: int, n: int) -> SymFunc:
    """PLD_{x,q,0}(m,n)^{*0}: 고정점의 생성함수"""
    return gen_function(PathFamily.PLD, m, n, 0).specialize(t_value=0)
