"""
격자 경로 객체와 통계

정사각 경로(동쪽 스텝으로 끝남)는 area word a_1..a_N 로 표현합니다.
    i 번째 북쪽 스텝은 대각선 y = x + a_i 에서 시작 (x_i = i-1-a_i)
    a_1 <= 0, a_{i+1} <= a_i + 1, a_N >= 0
    시작 방향: a_1 == 0 이면 북쪽, 아니면 동쪽
행 번호는 1부터 셉니다.
"""

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from ..algebra.partitions import Partition
from ..core.exceptions import InvalidParameterError


@dataclass(frozen=True)
class SquarePath:
    """
    동쪽 스텝으로 끝나는 정사각 경로

    Usage:
        >>> path = SquarePath((0, -3, -3, -2, -2, -1, 0, 0))
        >>> path.shift, path.rises, path.peaks
        (3, frozenset({4, 6, 7}), frozenset({1, 2, 4, 7, 8}))
    """

    area_word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(int(a) for a in self.area_word)
        object.__setattr__(self, "area_word", word)
        if not word:
            return
        if word[0] > 0:
            raise InvalidParameterError(f"a_1 must be <= 0: {word}")
        for i in range(len(word) - 1):
            if word[i + 1] > word[i] + 1:
                raise InvalidParameterError(f"a_{i + 2} > a_{i + 1} + 1: {word}")
        if word[-1] < 0:
            raise InvalidParameterError(f"path must end with an east step: {word}")

    @classmethod
    def from_step_word(cls, steps: str) -> "SquarePath":
        """'N'/'E' 문자열에서 생성"""
        size = steps.count("N")
        if steps.count("E") != size or not steps or steps[-1] != "E":
            raise InvalidParameterError(f"not a square path ending east: {steps}")
        word = []
        east = 0
        for step in steps:
            if step == "E":
                east += 1
            elif step == "N":
                word.append(len(word) - east)
            else:
                raise InvalidParameterError(f"unknown step {step!r}")
        return cls(tuple(word))

    # ----- 기본 -----

    @property
    def size(self) -> int:
        return len(self.area_word)

    def letter(self, i: int) -> int:
        """a_i (1부터)"""
        return self.area_word[i - 1]

    @property
    def starts_north(self) -> bool:
        return bool(self.area_word) and self.area_word[0] == 0

    @property
    def columns(self) -> tuple[int, ...]:
        """x_i: i 번째 북쪽 스텝의 x 좌표"""
        return tuple(i - a for i, a in enumerate(self.area_word))

    @property
    def min_level(self) -> int:
        return min(self.area_word) if self.area_word else 0

    @property
    def shift(self) -> int:
        return -self.min_level

    @property
    def is_dyck(self) -> bool:
        return self.min_level == 0

    def step_word(self) -> str:
        steps = []
        previous = 0
        for x in self.columns:
            steps.append("E" * (x - previous) + "N")
            previous = x
        steps.append("E" * (self.size - previous))
        return "".join(steps)

    # ----- 특수 행 -----

    @cached_property
    def rises(self) -> frozenset[int]:
        """북쪽 스텝 바로 뒤의 북쪽 스텝"""
        a = self.area_word
        return frozenset(i + 1 for i in range(1, len(a)) if a[i] == a[i - 1] + 1)

    @cached_property
    def valleys(self) -> frozenset[int]:
        """동쪽 스텝 바로 뒤의 북쪽 스텝 (동쪽으로 시작하면 1 포함)"""
        a = self.area_word
        rows = {i + 1 for i in range(1, len(a)) if a[i] <= a[i - 1]}
        if a and not self.starts_north:
            rows.add(1)
        return frozenset(rows)

    @cached_property
    def peaks(self) -> frozenset[int]:
        """동쪽 스텝이 바로 뒤따르는 북쪽 스텝 (N 은 항상 포함)"""
        a = self.area_word
        rows = {i + 1 for i in range(len(a) - 1) if a[i + 1] <= a[i]}
        if a:
            rows.add(len(a))
        return frozenset(rows)

    @cached_property
    def base_rows(self) -> tuple[int, ...]:
        """base diagonal 에서 시작하는 행"""
        low = self.min_level
        return tuple(i + 1 for i, a in enumerate(self.area_word) if a == low)

    @property
    def breaking_row(self) -> int:
        """base diagonal 에 닿는 가장 낮은 점에서 시작하는 행"""
        return self.base_rows[0]

    def same_column(self, i: int) -> bool:
        """i 행이 i-1 행과 같은 열에 있는가 (= rise)"""
        return i in self.rises


# ===== 라벨/장식 경로 =====

@dataclass(frozen=True, eq=True)
class DecoratedLabelledPath:
    """
    부분 라벨링 + 장식 rise 를 가진 정사각 경로 (PLSQE / PLD 원소)

    Usage:
        >>> P = DecoratedLabelledPath(SquarePath((0, 1, 0, 1, 2, 1, 2, 3)),
        ...                           (1, 3, 0, 4, 6, 0, 2, 6), frozenset({4, 7}))
        >>> P.area(), P.dinv()
        (7, 3)
    """

    path: SquarePath
    labels: tuple[int, ...]
    drises: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(int(v) for v in self.labels))
        object.__setattr__(self, "drises", frozenset(self.drises))
        self.validate()

    def validate(self) -> None:
        path, labels = self.path, self.labels
        if len(labels) != path.size:
            raise InvalidParameterError("one label per north step is required")
        if any(v < 0 for v in labels):
            raise InvalidParameterError(f"labels must be non-negative: {labels}")
        for i in range(2, path.size + 1):
            if path.same_column(i) and labels[i - 1] <= labels[i - 2]:
                raise InvalidParameterError(f"labels not column-strict at row {i}: {labels}")
        if path.size:
            if path.starts_north and labels[0] == 0:
                raise InvalidParameterError("first label must be nonzero when starting north")
            if all(labels[i - 1] == 0 for i in path.base_rows):
                raise InvalidParameterError("no nonzero label on the base diagonal")
        if not self.drises <= path.rises:
            raise InvalidParameterError(f"decorations {sorted(self.drises)} are not rises")

    # ----- 크기 -----

    @property
    def m(self) -> int:
        return sum(1 for v in self.labels if v == 0)

    @property
    def n(self) -> int:
        return sum(1 for v in self.labels if v != 0)

    @property
    def k(self) -> int:
        return len(self.drises)

    # ----- 통계 -----

    def area(self) -> int:
        """Σ_{i ∉ DRise} (a_i + shift)"""
        s = self.path.shift
        return sum(
            a + s for i, a in enumerate(self.path.area_word, start=1) if i not in self.drises
        )

    def dinv(self) -> int:
        """primary + secondary + bonus"""
        a, labels = self.path.area_word, self.labels
        total = 0
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                if a[i] == a[j] and labels[i] < labels[j]:
                    total += 1
                elif a[i] == a[j] + 1 and labels[i] > labels[j]:
                    total += 1
        total += sum(1 for i in range(len(a)) if a[i] < 0 and labels[i] != 0)
        return total

    def reading_order(self) -> list[int]:
        """대각선 높이 오름차순, 같은 높이는 아래에서 위로"""
        a = self.path.area_word
        return sorted(range(1, len(a) + 1), key=lambda i: (a[i - 1], i))

    def dinv_reading_word(self) -> tuple[int, ...]:
        return tuple(self.labels[i - 1] for i in self.reading_order())

    def content(self) -> Counter[int]:
        """0 이 아닌 라벨의 개수"""
        return Counter(v for v in self.labels if v != 0)

    def monomial_type(self) -> Partition:
        return Partition.of(*self.content().values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "area_word": list(self.path.area_word),
            "start": "N" if self.path.starts_north else "E",
            "drises": sorted(self.drises),
            "labels": list(self.labels),
        }


# ===== Schröder 객체 =====

@dataclass(frozen=True, eq=True)
class SchroederPath:
    """
    장식 rise, 장식 peak, zero valley 를 가진 정사각 경로 (SQE 원소)

    Usage:
        >>> P = SchroederPath(SquarePath((0, -3, -3, -2, -2, -1, 0, 0)),
        ...                   drises=frozenset({6}), dpeaks=frozenset({7}),
        ...                   zvals=frozenset({2, 5}))
        >>> P.dinv()
        7
    """

    path: SquarePath
    drises: frozenset[int] = field(default_factory=frozenset)
    dpeaks: frozenset[int] = field(default_factory=frozenset)
    zvals: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for name in ("drises", "dpeaks", "zvals"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        self.validate()

    def validate(self) -> None:
        path = self.path
        if not self.drises <= path.rises:
            raise InvalidParameterError("decorated rises must be rises")
        if not self.dpeaks <= path.peaks:
            raise InvalidParameterError("decorated peaks must be peaks")
        if not self.zvals <= path.valleys:
            raise InvalidParameterError("zero valleys must be valleys")
        if self.dpeaks & self.zvals:
            raise InvalidParameterError("a row cannot be both a decorated peak and a zero valley")
        if path.size and set(path.base_rows) <= self.zvals:
            raise InvalidParameterError("every base-diagonal row is a zero valley")

    @property
    def p(self) -> int:
        return len(self.zvals)

    @property
    def n(self) -> int:
        return self.path.size - self.p

    @property
    def refined_k(self) -> int:
        """base diagonal 에서 시작하면서 zero valley 가 아닌 행의 수"""
        return sum(1 for i in self.path.base_rows if i not in self.zvals)

    def area(self) -> int:
        s = self.path.shift
        return sum(
            a + s for i, a in enumerate(self.path.area_word, start=1) if i not in self.drises
        )

    def dinv(self) -> int:
        a = self.path.area_word
        total = 0
        for i in range(1, len(a) + 1):
            for j in range(i + 1, len(a) + 1):
                ai, aj = a[i - 1], a[j - 1]
                if ai == aj and i not in self.dpeaks and j not in self.zvals:
                    total += 1
                elif ai == aj + 1 and j not in self.dpeaks and i not in self.zvals:
                    total += 1
        total += sum(1 for i in range(1, len(a) + 1) if a[i - 1] < 0 and i not in self.zvals)
        return total

    def canonical_labelling(self) -> DecoratedLabelledPath:
        """
        zero valley 는 0, 장식 peak 는 읽기 순서대로 n, n-1, ...,
        나머지는 읽기 순서대로 1, 2, ... 로 라벨링
        """
        a = self.path.area_word
        order = sorted(range(1, len(a) + 1), key=lambda i: (a[i - 1], i))
        labels = [0] * len(a)
        big = self.n
        small = 1
        for i in order:
            if i in self.zvals:
                continue
            if i in self.dpeaks:
                labels[i - 1] = big
                big -= 1
            else:
                labels[i - 1] = small
                small += 1
        return DecoratedLabelledPath(self.path, tuple(labels), self.drises)

    def to_dict(self) -> dict[str, Any]:
        return {
            "area_word": list(self.path.area_word),
            "start": "N" if self.path.starts_north else "E",
            "drises": sorted(self.drises),
            "dpeaks": sorted(self.dpeaks),
            "zvals": sorted(self.zvals),
        }
