"""
경로 집합 열거와 생성함수

열거 순서: 경로(area word 사전순) → 장식(사전순) → 라벨(사전순)
"""

from collections import Counter
from enum import Enum
from itertools import combinations
from typing import Any, Iterator, Optional, Sequence

import pandas as pd
from loguru import logger

from ..algebra.partitions import Partition, enumerate_partitions
from ..algebra.qt_algebra import QT_RING, QTPoly
from ..algebra.symfunc import SymFunc
from ..core.config import settings
from ..core.exceptions import BoundExceededError, InvalidParameterError, SymmetryError
from .objects import DecoratedLabelledPath, SchroederPath, SquarePath


class PathFamily(str, Enum):
    """열거 가능한 경로 집합"""

    PLD = "PLD"
    PLSQE = "PLSQE"
    SQE = "SQE"
    SQE_REFINED = "SQE-refined"
    DDD = "DDd"

    @property
    def labelled(self) -> bool:
        return self in (PathFamily.PLD, PathFamily.PLSQE)


# ===== 경로 =====

def _check_size(size: int) -> None:
    limit = settings.max_n + settings.max_m
    if size > limit:
        raise BoundExceededError(f"path size {size} exceeds max_n + max_m = {limit}")


def square_paths(size: int) -> Iterator[SquarePath]:
    """동쪽으로 끝나는 크기 size 의 정사각 경로 (area word 사전순)"""

    def extend(word: list[int]) -> Iterator[tuple[int, ...]]:
        i = len(word)
        if i == size:
            yield tuple(word)
            return
        # a_{i+1} >= i+1-N 이어야 a_N >= 0 에 도달 가능
        for a in range(i + 1 - size, word[-1] + 2):
            word.append(a)
            yield from extend(word)
            word.pop()

    if size == 0:
        yield SquarePath(())
        return
    for first in range(-(size - 1), 1):
        for word in extend([first]):
            yield SquarePath(word)


def dyck_paths(size: int) -> Iterator[SquarePath]:
    for path in square_paths(size):
        if path.is_dyck:
            yield path


# ===== 라벨링 =====

def labellings(
    path: SquarePath,
    zeros: int,
    n: int,
    content: Optional[Sequence[int]] = None,
) -> Iterator[tuple[int, ...]]:
    """
    path 의 유효한 부분 라벨링 (사전순)

    Args:
        path: 정사각 경로
        zeros: 0 라벨 개수 (valley 에만 놓임)
        n: 0 이 아닌 라벨 개수
        content: 라벨 1..r 의 사용 횟수. None 이면 1..n 자유
    """
    size = path.size
    if zeros + n != size:
        return
    remaining = list(content) if content is not None else None
    if remaining is not None and sum(remaining) != n:
        return
    top = len(remaining) if remaining is not None else n
    valleys = path.valleys
    base = set(path.base_rows)
    labels = [0] * size

    def place(i: int, zeros_left: int, base_hit: bool) -> Iterator[tuple[int, ...]]:
        if i == size:
            if zeros_left == 0 and base_hit:
                yield tuple(labels)
            return
        row = i + 1
        rows_left = size - i
        if zeros_left > rows_left:
            return
        if zeros_left and row in valleys:
            labels[i] = 0
            yield from place(i + 1, zeros_left - 1, base_hit)
        if rows_left == zeros_left:
            return
        lowest = labels[i - 1] + 1 if path.same_column(row) else 1
        for value in range(lowest, top + 1):
            if remaining is not None:
                if not remaining[value - 1]:
                    continue
                remaining[value - 1] -= 1
            labels[i] = value
            yield from place(i + 1, zeros_left, base_hit or row in base)
            if remaining is not None:
                remaining[value - 1] += 1

    yield from place(0, zeros, False)


def _check_labelled(m: int, n: int, k: int) -> None:
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if m < 0:
        raise InvalidParameterError(f"m must be >= 0, got {m}")
    if not 0 <= k < n:
        raise InvalidParameterError(f"need 0 <= k < n, got k={k}, n={n}")
    _check_size(n + m)


def enumerate_plsqe(
    m: int, n: int, k: int, content: Optional[Sequence[int]] = None, dyck_only: bool = False
) -> Iterator[DecoratedLabelledPath]:
    """PLSQE(m,n)^{*k} (dyck_only 이면 PLD(m,n)^{*k})"""
    _check_labelled(m, n, k)
    paths = dyck_paths(n + m) if dyck_only else square_paths(n + m)
    for path in paths:
        rises = sorted(path.rises)
        if len(rises) < k:
            continue
        decorations = [frozenset(c) for c in combinations(rises, k)]
        for drises in decorations:
            for labels in labellings(path, m, n, content):
                yield DecoratedLabelledPath(path, labels, drises)


def enumerate_pld(
    m: int, n: int, k: int, content: Optional[Sequence[int]] = None
) -> Iterator[DecoratedLabelledPath]:
    """PLD(m,n)^{*k}"""
    return enumerate_plsqe(m, n, k, content, dyck_only=True)


# ===== Schröder 객체 =====

def _check_schroeder(p: int, n: int, ell: int, d: int) -> None:
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if min(p, ell, d) < 0:
        raise InvalidParameterError(f"p, l, d must be non-negative: p={p}, l={ell}, d={d}")
    _check_size(n + p)


def enumerate_sqe(
    p: int, n: int, ell: int, d: int, dyck_only: bool = False
) -> Iterator[SchroederPath]:
    """SQE(p,n)^{*ℓ,∘d} (dyck_only 이면 DD(p,n)^{*ℓ,∘d})"""
    _check_schroeder(p, n, ell, d)
    paths = dyck_paths(n + p) if dyck_only else square_paths(n + p)
    for path in paths:
        rises = sorted(path.rises)
        peaks = sorted(path.peaks)
        if len(rises) < ell or len(peaks) < d:
            continue
        base = set(path.base_rows)
        for drises in combinations(rises, ell):
            for dpeaks in combinations(peaks, d):
                free_valleys = sorted(path.valleys - set(dpeaks))
                for zvals in combinations(free_valleys, p):
                    if base <= set(zvals):
                        continue
                    yield SchroederPath(
                        path, frozenset(drises), frozenset(dpeaks), frozenset(zvals)
                    )


def enumerate_sqe_refined(
    p: int, n: int, k: int, ell: int, d: int
) -> Iterator[SchroederPath]:
    """SQE(p, n\\k)^{*ℓ,∘d}"""
    for obj in enumerate_sqe(p, n, ell, d):
        if obj.refined_k == k:
            yield obj


def enumerate_ddd(p: int, n: int, k: int, ell: int, d: int) -> Iterator[SchroederPath]:
    """DDd(p, n\\k)^{*ℓ,∘d} = SQE(p, n\\k) ∩ Dyck"""
    for obj in enumerate_sqe(p, n, ell, d, dyck_only=True):
        if obj.refined_k == k:
            yield obj


def enumerate_family(family: PathFamily | str, **params: int) -> Iterator[Any]:
    """
    이름으로 집합 열거

    Args:
        family: PLD | PLSQE | SQE | SQE-refined | DDd
        params: m, n, k (라벨 집합) 또는 p, n, k, l, d (Schröder 집합)
    """
    family = PathFamily(family)
    try:
        if family is PathFamily.PLD:
            return enumerate_pld(params["m"], params["n"], params["k"])
        if family is PathFamily.PLSQE:
            return enumerate_plsqe(params["m"], params["n"], params["k"])
        if family is PathFamily.SQE:
            return enumerate_sqe(params["p"], params["n"], params["l"], params["d"])
        if family is PathFamily.SQE_REFINED:
            return enumerate_sqe_refined(
                params["p"], params["n"], params["k"], params["l"], params["d"]
            )
        return enumerate_ddd(params["p"], params["n"], params["k"], params["l"], params["d"])
    except KeyError as e:
        raise InvalidParameterError(f"missing parameter {e.args[0]} for {family.value}") from e


# ===== 생성함수 =====

def _qt_sum(objects: Iterator[Any]) -> QTPoly:
    stats: Counter[tuple[int, int]] = Counter()
    for obj in objects:
        stats[(obj.dinv(), obj.area())] += 1
    return QT_RING({exps: count for exps, count in stats.items()})


def content_coefficient(
    family: PathFamily | str, m: int, n: int, k: int, content: Sequence[int]
) -> QTPoly:
    """내용(content)이 주어진 단항식의 q,t 계수"""
    family = PathFamily(family)
    if not family.labelled:
        raise InvalidParameterError(f"{family.value} is not a labelled family")
    return _qt_sum(enumerate_plsqe(m, n, k, content, dyck_only=family is PathFamily.PLD))


def gen_function(
    family: PathFamily | str, m: int, n: int, k: int, check_symmetry: bool = True
) -> SymFunc:
    """
    Σ q^dinv t^area x^P 의 단항식 전개

    λ ⊢ n 마다 내용 λ 인 라벨링만 세어 [m_λ] 를 얻습니다.
    check_symmetry 이면 뒤집은 내용의 계수와 비교해 대칭성을 확인합니다.
    """
    family = PathFamily(family)
    coeffs: dict[Partition, QTPoly] = {}
    for lam in enumerate_partitions(n):
        value = content_coefficient(family, m, n, k, lam.parts)
        if check_symmetry and len(set(lam.parts)) > 1:
            mirror = content_coefficient(family, m, n, k, tuple(reversed(lam.parts)))
            if mirror != value:
                raise SymmetryError(
                    f"{family.value}({m},{n})^*{k}: coefficient of m_{lam} depends on "
                    f"label order",
                    lam.parts,
                )
        coeffs[lam] = value
    logger.debug(f"생성함수 계산: {family.value}({m},{n})^*{k}")
    return SymFunc(n, coeffs)


def qt_polynomial(
    family: PathFamily | str, p: int, n: int, ell: int, d: int, k: Optional[int] = None
) -> QTPoly:
    """
    Schröder 집합의 q,t-열거 Σ q^dinv t^area

    Args:
        family: SQE | SQE-refined | DDd
        k: 세분 파라미터 (SQE-refined, DDd 에서 필수)
    """
    family = PathFamily(family)
    if family is PathFamily.SQE:
        return _qt_sum(enumerate_sqe(p, n, ell, d))
    if family.labelled:
        raise InvalidParameterError(f"{family.value} is a labelled family")
    if k is None:
        raise InvalidParameterError(f"{family.value} needs the refinement parameter k")
    if family is PathFamily.SQE_REFINED:
        return _qt_sum(enumerate_sqe_refined(p, n, k, ell, d))
    return _qt_sum(enumerate_ddd(p, n, k, ell, d))


# ===== 레코드 =====

def records(family: PathFamily | str, **params: int) -> pd.DataFrame:
    """
    (area, dinv, 단항식 유형) 레코드 DataFrame

    Schröder 집합은 monomial 대신 refined_k 열을 가집니다.
    """
    family = PathFamily(family)
    rows = []
    for obj in enumerate_family(family, **params):
        row: dict[str, Any] = {"area": obj.area(), "dinv": obj.dinv()}
        if family.labelled:
            row["monomial"] = str(obj.monomial_type())
        else:
            row["k"] = obj.refined_k
        rows.append(row)
    columns = ["area", "dinv", "monomial" if family.labelled else "k"]
    return pd.DataFrame(rows, columns=columns)
