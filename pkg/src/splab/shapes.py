"""Shifted shapes and the doubled alphabet.

Strict partitions are plain tuples of strictly decreasing positive integers.
Cells are 1-based (row, col) pairs in English orientation: row 1 is the top
row, and row i of a shifted diagram occupies columns i .. i + part_i - 1, so
the leftmost cell of row i is the diagonal cell (i, i).

Letters come in a low (primed) and a high (unprimed) copy of every positive
integer, totally ordered as 1' < 1 < 2' < 2 < 3' < ...
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]
Cell = tuple[int, int]


class ContainmentError(ValueError):
    """Inner shape sticks out of the outer shape."""


class Letter(NamedTuple):
    """One letter of the doubled alphabet.

    Tuple comparison gives exactly the intended total order, because
    (v, False) < (v, True) < (v + 1, False).
    """

    value: int
    high: bool

    def raised(self) -> "Letter":
        return Letter(self.value, True)

    def lowered(self) -> "Letter":
        return Letter(self.value, False)

    def __str__(self) -> str:
        return str(self.value) if self.high else f"{self.value}'"


def low(value: int) -> Letter:
    return Letter(value, False)


def high(value: int) -> Letter:
    return Letter(value, True)


def parse_letter(token: str) -> Letter:
    """Parse `5` (high) or `5'` (low)."""
    is_high = True
    if token.endswith("'"):
        is_high = False
        token = token[:-1]
    if not token.isdigit() or int(token) < 1:
        raise ValueError(f"bad letter token {token!r}")
    return Letter(int(token), is_high)


def compare_letters(a: Letter, b: Letter) -> int:
    """Three-way comparison: -1, 0 or 1."""
    if a == b:
        return 0
    return -1 if a < b else 1


def is_strict_partition(seq: Iterable[int]) -> bool:
    parts = tuple(seq)
    if any(not isinstance(p, int) or p <= 0 for p in parts):
        return False
    return all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))


def check_strict_partition(seq: Iterable[int]) -> Partition:
    parts = tuple(seq)
    if not is_strict_partition(parts):
        raise ValueError(f"{parts} is not a strict partition")
    return parts


def _part(parts: Partition, i: int) -> int:
    """Row length, treating missing rows as 0 (1-based row index)."""
    return parts[i - 1] if i <= len(parts) else 0


@dataclass(frozen=True)
class SkewShape:
    """A skew shifted diagram outer/inner.

    The cell set is the cells of the outer diagram that are not cells of the
    inner one. A straight shape is the special case inner = ().
    """

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", check_strict_partition(self.outer))
        object.__setattr__(self, "inner", check_strict_partition(self.inner))
        for i in range(1, len(self.inner) + 1):
            if _part(self.inner, i) > _part(self.outer, i):
                raise ContainmentError(
                    f"inner {self.inner} not contained in outer {self.outer}"
                )

    @classmethod
    def from_text(cls, text: str) -> "SkewShape":
        """Parse `5,4,1` or `5,4,1/1`."""
        outer_text, _, inner_text = text.partition("/")
        def parse_parts(chunk: str) -> Partition:
            chunk = chunk.strip()
            if not chunk:
                return ()
            return tuple(int(p) for p in chunk.split(","))
        return cls(parse_parts(outer_text), parse_parts(inner_text))

    def __str__(self) -> str:
        outer = ",".join(map(str, self.outer))
        if not self.inner:
            return outer
        return outer + "/" + ",".join(map(str, self.inner))

    def row_span(self, i: int) -> range:
        """Columns of the skew cells in row i."""
        return range(i + _part(self.inner, i), i + _part(self.outer, i))

    def cells(self) -> list[Cell]:
        """All cells in row-major order."""
        return [
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in self.row_span(i)
        ]

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.outer) and j in self.row_span(i)

    def diagonal_cells(self) -> set[Cell]:
        return {(i, i) for i in range(1, len(self.outer) + 1) if (i, i) in self}

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    @property
    def n_diagonals(self) -> int:
        return len(self.diagonal_cells())


def diagonal_cells(shape: SkewShape) -> set[Cell]:
    return shape.diagonal_cells()


def make_skew(outer: Iterable[int], inner: Iterable[int] = ()) -> SkewShape:
    return SkewShape(tuple(outer), tuple(inner))


def strict_partitions(total: int, max_part: int | None = None) -> Iterator[Partition]:
    """All strict partitions of `total`, largest part first, lex-descending."""
    if total == 0:
        yield ()
        return
    if max_part is None:
        max_part = total
    for first in range(min(total, max_part), 0, -1):
        for rest in strict_partitions(total - first, first - 1):
            yield (first, *rest)


def strict_subpartitions(outer: Iterable[int]) -> Iterator[Partition]:
    """All strict partitions fitting inside `outer` part by part."""
    outer = check_strict_partition(outer)

    def rec(i: int, cap: int) -> Iterator[Partition]:
        # a subpartition may stop at any row; once stopped it stays empty
        yield ()
        if i == len(outer):
            return
        for part in range(1, min(outer[i], cap) + 1):
            for rest in rec(i + 1, part - 1):
                yield (part, *rest)

    return rec(0, outer[0] if outer else 0)
