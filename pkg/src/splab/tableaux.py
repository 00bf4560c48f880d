"""Shifted skew tableaux: validity checks, enumeration, standardization, text format.

The text format is one line per row, cells space separated, `.` for an
inner-shape box, `N` for a high letter and `N'` for a low one.  Line i holds
the boxes of row i starting at column i, so the inner shape of a row is its
run of leading dots.  Example (shape 3,2 / 1):

    . 1 1
    2 3'
"""

from __future__ import annotations

import re
from typing import Iterator, Mapping

from .shapes import Cell, Letter, SkewShape, parse_letter

MODES = ("semistandard", "qtableau")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class ShiftedTableau:
    """A filling of a skew shifted shape, one letter per cell.

    Construction checks only that the entries are total on the shape; use
    ``is_semistandard`` / ``is_q_tableau`` to test the filling conditions.
    Instances are immutable and hashable.
    """

    __slots__ = ("shape", "_entries", "_hash")

    def __init__(self, shape: SkewShape, entries: Mapping[Cell, Letter]):
        cells = shape.cells()
        if set(entries) != set(cells):
            raise ValueError("entries are not total on the shape's cells")
        self.shape = shape
        self._entries = {cell: entries[cell] for cell in cells}
        self._hash = None

    @classmethod
    def from_rows(cls, rows, inner=()) -> "ShiftedTableau":
        """Build from per-row letter lists; row i's letters start right of inner row i."""
        inner = tuple(inner)
        outer = []
        entries = {}
        for i, row in enumerate(rows, start=1):
            pad = inner[i - 1] if i <= len(inner) else 0
            outer.append(pad + len(row))
            for k, letter in enumerate(row):
                entries[(i, i + pad + k)] = letter
        return cls(SkewShape(tuple(outer), inner), entries)

    def __getitem__(self, cell: Cell) -> Letter:
        return self._entries[cell]

    def get(self, cell: Cell) -> Letter | None:
        return self._entries.get(cell)

    def cells(self) -> Iterator[tuple[Cell, Letter]]:
        """(cell, letter) pairs in row-major order."""
        return iter(self._entries.items())

    @property
    def size(self) -> int:
        return len(self._entries)

    def with_entries(self, replacements: Mapping[Cell, Letter]) -> "ShiftedTableau":
        new = dict(self._entries)
        new.update(replacements)
        return ShiftedTableau(self.shape, new)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShiftedTableau):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, tuple(self._entries.items())))
        return self._hash

    def __str__(self) -> str:
        return print_tableau(self)

    def __repr__(self) -> str:
        return f"<ShiftedTableau {str(self)!r}>"


def print_tableau(tableau: ShiftedTableau) -> str:
    """Canonical text form; inverse of parse_tableau on canonical input."""
    shape = tableau.shape
    lines = []
    for i in range(1, len(shape.outer) + 1):
        tokens = []
        for j in range(i, i + shape.outer[i - 1]):
            if (i, j) in shape:
                tokens.append(str(tableau[(i, j)]))
            else:
                tokens.append(".")
        lines.append(" ".join(tokens))
    return "\n".join(lines)


_TOKEN = re.compile(r"\S+")


def parse_tableau(text: str) -> ShiftedTableau:
    outer = []
    inner = []
    entries = {}
    lines = text.splitlines()
    for i, line in enumerate(lines, start=1):
        matches = list(_TOKEN.finditer(line))
        if not matches:
            raise ParseError("empty row", i, 1)
        dots = 0
        for k, match in enumerate(matches):
            token, col_pos = match.group(), match.start() + 1
            if token == ".":
                if k != dots:
                    raise ParseError("inner box after a letter", i, col_pos)
                dots += 1
            else:
                try:
                    entries[(i, i + k)] = parse_letter(token)
                except ValueError:
                    raise ParseError(f"bad cell token {token!r}", i, col_pos) from None
        outer.append(len(matches))
        inner.append(dots)
    while inner and inner[-1] == 0:
        inner.pop()
    try:
        shape = SkewShape(tuple(outer), tuple(inner))
    except ValueError as exc:
        raise ParseError(str(exc), len(lines), 1) from None
    return ShiftedTableau(shape, entries)


def raise_diagonals(tableau: ShiftedTableau) -> ShiftedTableau:
    """Raise every low letter sitting on a diagonal cell; idempotent."""
    changes = {
        cell: tableau[cell].raised()
        for cell in tableau.shape.diagonal_cells()
        if not tableau[cell].high
    }
    return tableau.with_entries(changes) if changes else tableau


def is_semistandard(tableau: ShiftedTableau) -> bool:
    """Weakly increasing rows and columns, no low letter on the diagonal,
    at most one high letter per value in a column, one low per value in a row."""
    for (i, j), letter in tableau.cells():
        if i == j and not letter.high:
            return False
        left = tableau.get((i, j - 1))
        if left is not None:
            if letter < left:
                return False
            if letter == left and not letter.high:
                return False
        above = tableau.get((i - 1, j))
        if above is not None:
            if letter < above:
                return False
            if letter == above and letter.high:
                return False
    return True


def is_q_tableau(tableau: ShiftedTableau) -> bool:
    """True when raising the diagonal entries yields a semistandard tableau."""
    return is_semistandard(raise_diagonals(tableau))


def content(tableau: ShiftedTableau) -> tuple[int, ...]:
    """Marker-blind letter counts per value, up to the largest value present."""
    counts: dict[int, int] = {}
    for _, letter in tableau.cells():
        counts[letter.value] = counts.get(letter.value, 0) + 1
    if not counts:
        return ()
    top = max(counts)
    return tuple(counts.get(v, 0) for v in range(1, top + 1))


def letter_rank_key(letter: Letter, cell: Cell):
    """Sort key realizing the canonical letter listing: letters in alphabet
    order, equal lows north to south, equal highs west to east."""
    row, col = cell
    return (letter, row if not letter.high else col)


def standardize(tableau: ShiftedTableau) -> ShiftedTableau:
    """Order-preserving relabeling onto high letters 1..n; idempotent."""
    ranked = sorted(
        ((letter, cell) for cell, letter in tableau.cells()),
        key=lambda pair: letter_rank_key(*pair),
    )
    relabel = {cell: Letter(rank, True) for rank, (_, cell) in enumerate(ranked, 1)}
    return ShiftedTableau(tableau.shape, relabel)


def enumerate_tableaux(
    shape: SkewShape, n: int, mode: str = "semistandard"
) -> Iterator[ShiftedTableau]:
    """Stream every filling of the given mode with letter values <= n.

    Order: backtracking over cells row by row with candidate letters
    ascending, so the stream is lexicographic in the cells' letter sequence.
    In qtableau mode the filling conditions are applied to the raised
    tableau, which frees the marker of each diagonal entry.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    cells = shape.cells()
    chosen: dict[Cell, Letter] = {}
    effective: dict[Cell, Letter] = {}

    def candidates(cell: Cell) -> Iterator[tuple[Letter, Letter]]:
        i, j = cell
        on_diagonal = i == j
        left = effective.get((i, j - 1))
        above = effective.get((i - 1, j))
        for value in range(1, n + 1):
            for is_high in (False, True):
                if on_diagonal:
                    eff = Letter(value, True)
                    if mode == "semistandard" and not is_high:
                        continue
                else:
                    eff = Letter(value, is_high)
                if left is not None:
                    if eff < left or (eff == left and not eff.high):
                        continue
                if above is not None:
                    if eff < above or (eff == above and eff.high):
                        continue
                yield Letter(value, is_high), eff

    def fill(k: int) -> Iterator[ShiftedTableau]:
        if k == len(cells):
            yield ShiftedTableau(shape, dict(chosen))
            return
        cell = cells[k]
        for letter, eff in candidates(cell):
            chosen[cell] = letter
            effective[cell] = eff
            yield from fill(k + 1)
        chosen.pop(cell, None)
        effective.pop(cell, None)

    return fill(0)
