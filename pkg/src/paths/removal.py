"""
dinv 0 라벨 Dyck 경로에서 큰 라벨(big car) 제거

h_j^⊥ PLD_{x,0,t}(0,n)^{*k} 를 조합적으로 계산하고, 제거 알고리즘으로
손실 넓이(loss)를 추적합니다.

- contractible peak i: a_{i-1} < a_i = a_{i+1}, l_{i-1} < l_{i+1}
  (a_0 = l_0 = -∞ 로 보아 i = 1 은 a_2 = 0 이면 contractible)
- 제거 한 단계: i 이하의 rise 에 있는 장식을 한 rise 씩 아래로 이동.
  가장 아래 rise 가 장식되어 있으면 그 장식은 사라짐 (rise-killing),
  아니면 장식 수 유지 (rise-preserving)
- contractible 이면 i 행과 바로 뒤 동쪽 스텝을, 아니면 i 행과 마지막
  동쪽 스텝을 제거 (위쪽 행의 area 가 1 씩 감소)
- 알고리즘: contractible big car 를 아래에서부터 모두 제거한 뒤,
  남은 big car 를 위에서부터 제거
"""

from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterator, Optional

from ..algebra.partitions import enumerate_partitions
from ..algebra.qt_algebra import QT_RING, QTPoly, binom2, monomial, t_binomial
from ..algebra.symfunc import SymFunc
from ..core.exceptions import InvalidParameterError, InvariantError
from .enumeration import enumerate_pld
from .objects import DecoratedLabelledPath, SquarePath


class RemovalMode(str, Enum):
    RISE_PRESERVING = "rise-preserving"
    RISE_KILLING = "rise-killing"


@dataclass(frozen=True)
class RemovalRecord:
    """한 번의 제거 기록 (역연산에 필요한 정보 전부)"""

    row: int
    label: int
    level: int
    contractible: bool
    mode: RemovalMode
    loss: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "row": self.row,
            "label": self.label,
            "level": self.level,
            "contractible": self.contractible,
            "mode": self.mode.value,
            "loss": self.loss,
        }


EMPTY_PATH = DecoratedLabelledPath(SquarePath(()), ())


# ===== 한 단계 =====

def is_contractible(D: DecoratedLabelledPath, i: int) -> bool:
    a, labels = D.path.area_word, D.labels
    size = len(a)
    if i >= size or a[i] != a[i - 1]:
        return False
    if i == 1:
        return True
    return a[i - 2] < a[i - 1] and labels[i - 2] < labels[i]


def _rises_below(path: SquarePath, i: int) -> list[int]:
    return sorted(r for r in path.rises if r <= i)


def removal_step(
    D: DecoratedLabelledPath, i: int
) -> tuple[DecoratedLabelledPath, RemovalRecord]:
    """
    peak i 의 라벨 제거

    Returns:
        (제거 후 경로, 제거 기록)
    """
    path = D.path
    if not path.is_dyck or D.m:
        raise InvalidParameterError("removal works on fully labelled Dyck paths")
    if i not in path.peaks:
        raise InvalidParameterError(f"row {i} is not a peak")
    if D.dinv() != 0:
        raise InvalidParameterError("removal needs a path with dinv 0")

    a, labels = list(path.area_word), list(D.labels)
    contractible = is_contractible(D, i)
    rises = _rises_below(path, i)
    killing = bool(rises) and rises[0] in D.drises

    moved = {rises[s - 1] for s in range(1, len(rises)) if rises[s] in D.drises}
    above = {r - 1 for r in D.drises if r > i}
    loss = sum(1 for r in rises if r not in D.drises)
    if contractible:
        word = a[: i - 1] + a[i:]
    else:
        word = a[: i - 1] + [x - 1 for x in a[i:]]
        loss += sum(1 for r in range(i + 1, len(a) + 1) if r not in D.drises)

    try:
        smaller = DecoratedLabelledPath(
            SquarePath(tuple(word)),
            tuple(labels[: i - 1] + labels[i:]),
            frozenset(moved | above),
        )
    except InvalidParameterError as e:
        raise InvalidParameterError(f"peak {i} cannot be removed: {e}") from e
    if D.area() - smaller.area() != loss:
        raise InvariantError(f"area loss mismatch removing row {i} of {D.to_dict()}")

    record = RemovalRecord(
        row=i,
        label=labels[i - 1],
        level=a[i - 1],
        contractible=contractible,
        mode=RemovalMode.RISE_KILLING if killing else RemovalMode.RISE_PRESERVING,
        loss=loss,
    )
    return smaller, record


def insert_step(D: DecoratedLabelledPath, record: RemovalRecord) -> DecoratedLabelledPath:
    """removal_step 의 역연산"""
    a, labels = list(D.path.area_word), list(D.labels)
    i = record.row
    if not 1 <= i <= len(a) + 1:
        raise InvalidParameterError(f"row {i} out of range for a path of size {len(a)}")
    if record.contractible:
        word = a[: i - 1] + [record.level] + a[i - 1 :]
    else:
        word = a[: i - 1] + [record.level] + [x + 1 for x in a[i - 1 :]]
    path = SquarePath(tuple(word))

    below = {r for r in D.drises if r < i}
    drises = {r + 1 for r in D.drises if r >= i}
    rises = _rises_below(path, i)
    if rises and record.mode is RemovalMode.RISE_KILLING:
        drises.add(rises[0])
    drises.update(rises[s] for s in range(1, len(rises)) if rises[s - 1] in below)
    return DecoratedLabelledPath(
        path, tuple(labels[: i - 1] + [record.label] + labels[i - 1 :]), frozenset(drises)
    )


# ===== 전체 알고리즘 =====

def big_labels(D: DecoratedLabelledPath, j: int) -> frozenset[int]:
    """가장 큰 j 개의 라벨 (서로 달라야 함)"""
    values = sorted(D.labels, reverse=True)
    if not 0 <= j <= len(values):
        raise InvalidParameterError(f"need 0 <= j <= {len(values)}, got {j}")
    top = values[:j]
    if len(set(top)) != j or (j < len(values) and j and values[j] == values[j - 1]):
        raise InvalidParameterError(f"the {j} biggest labels are not distinct: {D.labels}")
    return frozenset(top)


def big_cars_decreasing(D: DecoratedLabelledPath, big: frozenset[int]) -> bool:
    """큰 라벨이 dinv reading word 에서 감소 순으로 나타나는가"""
    seen = [v for v in D.dinv_reading_word() if v in big]
    return all(seen[s] > seen[s + 1] for s in range(len(seen) - 1))


def check_big_cars(D: DecoratedLabelledPath, big: frozenset[int]) -> None:
    """big car 는 모두 peak 이고 서로 다른 열에 있어야 함"""
    rows = [i for i, v in enumerate(D.labels, start=1) if v in big]
    columns = [D.path.columns[i - 1] for i in rows]
    if any(i not in D.path.peaks for i in rows) or len(set(columns)) != len(columns):
        raise InvariantError(f"big cars are not peaks in distinct columns: {D.to_dict()}")


def removal_algorithm(
    D: DecoratedLabelledPath, j: int
) -> tuple[DecoratedLabelledPath, list[RemovalRecord]]:
    """
    j 개의 big car 를 모두 제거

    Usage:
        >>> residual, records = removal_algorithm(D, 2)
        >>> [r.loss for r in records]
        [1, 5]
    """
    big = big_labels(D, j)
    if D.dinv() != 0 or not big_cars_decreasing(D, big):
        raise InvalidParameterError(
            "big labels must decrease in the reading word of a dinv-0 path"
        )
    check_big_cars(D, big)

    current = D
    records: list[RemovalRecord] = []
    while True:
        rows = [i for i, v in enumerate(current.labels, start=1) if v in big]
        movable = [i for i in rows if is_contractible(current, i)]
        if not movable:
            break
        current, record = removal_step(current, movable[0])
        records.append(record)
    while True:
        rows = [i for i, v in enumerate(current.labels, start=1) if v in big]
        if not rows:
            break
        current, record = removal_step(current, rows[-1])
        records.append(record)
    return current, records


def reinsert(
    residual: DecoratedLabelledPath, records: list[RemovalRecord]
) -> DecoratedLabelledPath:
    """기록을 역순으로 적용해 원래 경로 복원"""
    current = residual
    for record in reversed(records):
        current = insert_step(current, record)
    return current


# ===== 조합적 h_j^⊥ =====

def eligible_paths(
    n: int, k: int, j: int, content: Optional[tuple[int, ...]] = None
) -> Iterator[DecoratedLabelledPath]:
    """
    dinv 0 이고 가장 큰 j 개의 라벨이 reading word 에서 감소하는 PLD(0,n)^{*k} 원소

    content 가 없으면 라벨은 1..n 의 순열입니다.
    """
    content = content or (1,) * n
    top = len(content)
    big = frozenset(range(top - j + 1, top + 1))
    for D in enumerate_pld(0, n, k, content):
        if D.dinv() == 0 and big_cars_decreasing(D, big):
            yield D


def hperp_combinatorial(j: int, n: int, k: int) -> SymFunc:
    """
    h_j^⊥ PLD_{x,0,t}(0,n)^{*k} (차수 n-j)

    [m_ν] 는 작은 라벨의 내용이 ν, 큰 라벨이 서로 다른 dinv 0 경로의 t^area 합입니다.
    """
    if not 1 <= j <= n:
        raise InvalidParameterError(f"need 1 <= j <= n, got j={j}, n={n}")
    coeffs: dict[Any, QTPoly] = {}
    for nu in enumerate_partitions(n - j):
        content = nu.parts + (1,) * j
        big = frozenset(range(len(nu) + 1, len(nu) + j + 1))
        areas: Counter[int] = Counter()
        for D in eligible_paths(n, k, j, content):
            check_big_cars(D, big)
            areas[D.area()] += 1
        coeffs[nu] = QT_RING({(0, a): c for a, c in areas.items()})
    return SymFunc(n - j, coeffs)


# ===== 손실 분포 =====

def expected_loss_polynomial(n: int, k: int, j: int, r: int) -> QTPoly:
    """t^{C(j-r,2)} [n-k-r, j-r]_t [n-k, r]_t"""
    if r < 0 or r > j:
        return QT_RING.zero
    return (
        monomial(0, binom2(j - r))
        * t_binomial(n - k - r, j - r)
        * t_binomial(n - k, r)
    )


def residual_universe(size: int, k: int) -> list[DecoratedLabelledPath]:
    """순열 라벨의 dinv 0 PLD(0,size)^{*k} (size 0 이면 빈 경로)"""
    if size == 0:
        return [EMPTY_PATH] if k == 0 else []
    if k < 0 or k >= size:
        return []
    return [D for D in enumerate_pld(0, size, k, (1,) * size) if D.dinv() == 0]


def loss_generating_functions(
    n: int, k: int, j: int
) -> dict[tuple[DecoratedLabelledPath, int], QTPoly]:
    """(잔여 경로, rise-preserving 횟수 r) → Σ t^{총 손실}"""
    table: dict[tuple[DecoratedLabelledPath, int], QTPoly] = defaultdict(lambda: QT_RING.zero)
    for D in eligible_paths(n, k, j):
        residual, records = removal_algorithm(D, j)
        r = sum(1 for rec in records if rec.mode is RemovalMode.RISE_PRESERVING)
        table[(residual, r)] += monomial(0, sum(rec.loss for rec in records))
    return dict(table)


def loss_order_problems(records: list[RemovalRecord], bound: int) -> list[str]:
    """
    제거 순서대로 본 손실 열 검사 (bound = n - k - r)

    rise-killing 손실은 강증가하며 [0, bound-1] 안, rise-preserving 손실은
    약증가하며 [0, bound] 안
    """
    killing = [rec.loss for rec in records if rec.mode is RemovalMode.RISE_KILLING]
    preserving = [rec.loss for rec in records if rec.mode is RemovalMode.RISE_PRESERVING]
    problems: list[str] = []
    if killing != sorted(set(killing)):
        problems.append(f"rise-killing losses {killing} not strictly increasing")
    if any(not 0 <= x <= bound - 1 for x in killing):
        problems.append(f"rise-killing losses {killing} out of range")
    if preserving != sorted(preserving):
        problems.append(f"rise-preserving losses {preserving} not increasing")
    if any(not 0 <= x <= bound for x in preserving):
        problems.append(f"rise-preserving losses {preserving} out of range")
    return problems


def removal_violations(n: int, k: int, j: int) -> list[str]:
    """
    제거 알고리즘 성질 전수 검사 (위반 내역, 비어 있으면 통과)

    - 잔여 경로는 dinv 0, 장식 수 k - j + r
    - 손실 순서와 범위는 loss_order_problems
    - 기록으로 재삽입하면 원래 경로
    - (잔여 경로, r) 마다 손실 생성함수가 닫힌 꼴과 일치
    """
    problems: list[str] = []
    seen: dict[tuple[Any, ...], DecoratedLabelledPath] = {}
    table: dict[tuple[DecoratedLabelledPath, int], QTPoly] = defaultdict(lambda: QT_RING.zero)
    for D in eligible_paths(n, k, j):
        residual, records = removal_algorithm(D, j)
        killing = [rec.loss for rec in records if rec.mode is RemovalMode.RISE_KILLING]
        preserving = [rec.loss for rec in records if rec.mode is RemovalMode.RISE_PRESERVING]
        r = len(preserving)
        tag = D.to_dict()
        if residual.dinv() != 0 or residual.k != k - j + r:
            problems.append(f"bad residual for {tag}")
        problems.extend(f"{text} for {tag}" for text in loss_order_problems(records, n - k - r))
        if reinsert(residual, records) != D:
            problems.append(f"reinsertion does not restore {tag}")
        key = (residual, tuple((rec.mode, rec.loss) for rec in records))
        if key in seen:
            problems.append(f"removal is not injective: {tag} and {seen[key].to_dict()}")
        seen[key] = D
        table[(residual, r)] += monomial(0, sum(killing) + sum(preserving))

    for r in range(j + 1):
        expected = expected_loss_polynomial(n, k, j, r)
        for residual in residual_universe(n - j, k - j + r):
            got = table.get((residual, r), QT_RING.zero)
            if got != expected:
                problems.append(f"loss distribution for r={r}, residual {residual.to_dict()}")
    return problems
