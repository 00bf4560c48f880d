"""Extended Sagan-Worley slides on Q-tableaux and the skew plactic sum.

These are the classical shifted jeu de taquin moves extended to tableaux
whose diagonal entries may be low.  Away from the diagonal the smaller of
the two letters adjacent to the hole slides into it, ties broken so equal
lows stack in a column and equal highs line up in a row.  A hole on the
diagonal compares its right neighbour with the next diagonal cell: with
different values the right neighbour slides in unchanged, with equal values
one of two raising rewrites fires and the hole drops down the diagonal.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Callable, Optional

from .shapes import Cell, Letter, SkewShape
from .tableaux import (
    ShiftedTableau,
    enumerate_tableaux,
    is_q_tableau,
    raise_diagonals,
)

__all__ = [
    "NoNeighborError",
    "SWState",
    "sw_slide",
    "sw_rectify",
    "raise_diagonals",
    "southwestmost_marker",
    "preimage_count",
    "rectification_counter",
    "skew_plactic_schur_p",
]


class NoNeighborError(ValueError):
    """The hole has reached an outer corner; the slide path is complete."""


class SWState:
    """A Q-tableau with a single hole travelling south-east."""

    __slots__ = ("entries", "hole")

    def __init__(self, entries: dict[Cell, Letter], hole: Cell):
        self.entries = entries
        self.hole = hole

    def replaced(self, changes: dict[Cell, Letter], hole: Cell) -> "SWState":
        new = dict(self.entries)
        for cell in changes:
            new.pop(cell, None)
        new.pop(hole, None)
        new.update(changes)
        return SWState(new, hole)


def _neighbors(state: SWState):
    r, c = state.hole
    right = state.entries.get((r, c + 1))
    below = state.entries.get((r + 1, c))
    diag = state.entries.get((r + 1, c + 1))
    return right, below, diag


def sw_slide(state: SWState) -> SWState:
    """Apply one extended slide; raises NoNeighborError when done."""
    r, c = state.hole
    right, below, diag = _neighbors(state)
    if r == c:
        # hole on the diagonal: below (r+1, c) is never a cell
        if right is None and diag is None:
            raise NoNeighborError(f"hole {state.hole} is an outer corner")
        if right is None:
            raise AssertionError("diagonal letter without its row head")
        if diag is None or right.value != diag.value:
            return state.replaced({(r, c): right}, (r, c + 1))
        if not right.high and not diag.high:
            # low pair: right letter lands low on the diagonal, the lower
            # copy climbs out of the diagonal raised
            return state.replaced(
                {(r, c): right, (r, c + 1): diag.raised()}, (r + 1, c + 1)
            )
        if not right.high and diag.high:
            return state.replaced(
                {(r, c): right.raised(), (r, c + 1): diag}, (r + 1, c + 1)
            )
        raise AssertionError(f"impossible diagonal pair {right}, {diag}")
    if right is None and below is None:
        raise NoNeighborError(f"hole {state.hole} is an outer corner")
    if below is None or (right is not None and right < below):
        return state.replaced({(r, c): right}, (r, c + 1))
    if right is None or below < right:
        return state.replaced({(r, c): below}, (r + 1, c))
    # equal letters: lows close up the column, highs close up the row
    if not right.high:
        return state.replaced({(r, c): right}, (r, c + 1))
    return state.replaced({(r, c): below}, (r + 1, c))


def _inner_corners(inner: tuple[int, ...]) -> list[Cell]:
    corners = []
    for i in range(1, len(inner) + 1):
        nxt = inner[i] if i < len(inner) else 0
        if inner[i - 1] > nxt + 1 or i == len(inner):
            corners.append((i, inner[i - 1] + i - 1))
    return corners


Audit = Callable[[SWState, SWState], None]


def sw_rectify(
    tableau: ShiftedTableau,
    corner_order: str = "low",
    audit: Optional[Audit] = None,
) -> ShiftedTableau:
    """Rectify a Q-tableau to straight shape.

    Holes enter at inner corners, lowest row first under the canonical
    order (`corner_order="high"` picks the topmost instead, for
    order-independence checks).  `audit(before, after)` fires per slide.
    """
    if not is_q_tableau(tableau):
        raise ValueError("rectification input must be a Q-tableau")
    entries = dict(tableau.cells())
    inner = list(tableau.shape.inner)
    while inner:
        corners = _inner_corners(tuple(inner))
        corner = max(corners) if corner_order == "low" else min(corners)
        state = SWState(entries, corner)
        while True:
            try:
                new_state = sw_slide(state)
            except NoNeighborError:
                break
            if audit:
                audit(state, new_state)
            state = new_state
        entries = state.entries
        inner[corner[0] - 1] -= 1
        while inner and inner[-1] == 0:
            inner.pop()
        if inner != sorted(inner, reverse=True) or len(set(inner)) != len(inner):
            raise AssertionError("inner shape degenerated")
    outer_len: dict[int, int] = {}
    for (i, _) in entries:
        outer_len[i] = outer_len.get(i, 0) + 1
    outer = tuple(outer_len.get(i, 0) for i in range(1, len(outer_len) + 1))
    result = ShiftedTableau(SkewShape(outer), entries)
    if not is_q_tableau(result):
        raise AssertionError("rectification produced a non-Q-tableau")
    return result


def southwestmost_marker(tableau_or_entries, value: int) -> str:
    """Marker of the unique southwest-most letter of a value: `low`, `high`
    or `absent`."""
    if isinstance(tableau_or_entries, ShiftedTableau):
        items = list(tableau_or_entries.cells())
    else:
        items = list(tableau_or_entries.items())
    hits = [(cell, letter) for cell, letter in items if letter.value == value]
    if not hits:
        return "absent"
    cell, letter = max(hits, key=lambda pair: (pair[0][0], -pair[0][1]))
    return "high" if letter.high else "low"


def rectification_counter(
    shape: SkewShape, n: int, corner_order: str = "low"
) -> Counter:
    """How many Q-tableaux of the shape rectify to each straight Q-tableau."""
    counter: Counter = Counter()
    for tab in enumerate_tableaux(shape, n, "qtableau"):
        counter[sw_rectify(tab, corner_order)] += 1
    return counter


def preimage_count(target: ShiftedTableau, shape: SkewShape, n: int) -> int:
    """Number of Q-tableaux of the shape rectifying to `target`."""
    if not target.shape.is_straight:
        raise ValueError("the rectification target must be straight")
    return sum(
        1
        for tab in enumerate_tableaux(shape, n, "qtableau")
        if sw_rectify(tab) == target
    )


def skew_plactic_schur_p(
    shape: SkewShape, n: int
) -> dict[ShiftedTableau, Fraction]:
    """Formal sum of plactic classes assigned to a skew shape.

    Every Q-tableau of the shape with values <= n is rectified, its diagonal
    raised, and the resulting straight semistandard tableau (its own plactic
    class representative) collected with weight 1 / 2^(number of diagonal
    cells of the shape).
    """
    scale = Fraction(1, 2 ** shape.n_diagonals)
    counts: Counter = Counter()
    for tab in enumerate_tableaux(shape, n, "qtableau"):
        counts[raise_diagonals(sw_rectify(tab))] += 1
    return {rep: scale * count for rep, count in counts.items()}
