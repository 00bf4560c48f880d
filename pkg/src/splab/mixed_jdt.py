"""Mixed jeu de taquin: deterministic slides that rectify a skew tableau to
its mixed insertion tableau.

A rectification runs in passes.  Each pass turns the bottom row of the
current inner shape into bullets and repeatedly slides the least available
letter (a letter with a bullet directly above or directly to its left),
applying the first matching rule from six collections in fixed precedence:

  1. diagonal slides     bullets above, up-left, and (if the cell exists)
                         left: the letter steps up-left unchanged;
  2. singular slides     letter x up-left, bullets above and left, moving
                         letter y != x: low y steps up, high y steps left;
  3. blocked variants    same frame with x == y: a low y entering a diagonal
                         cell steps left and is raised, otherwise a low y
                         steps left and a high y steps up, both unchanged;
  4. paired rewrite      bullet left of a low y whose high partner sits on
                         the diagonal below: both cells become high y and
                         the bullet drops to the diagonal;
  5. diagonal boundary   a letter right of a bullet on the diagonal steps
                         onto it raised; a high letter on the diagonal under
                         a bullet with a letter up-left steps up lowered;
  6. plain slides        step left or up unchanged.

Bullets are deleted as soon as no letter remains weakly south-east of them,
which shrinks the outer shape; a pass ends when nothing is available.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .shapes import Cell, Letter, SkewShape
from .tableaux import ShiftedTableau, is_semistandard, letter_rank_key
from .insertion import mixed_insert_word, _as_word


class StuckError(RuntimeError):
    """No slide rule matched; indicates an internal inconsistency."""


class NoInnerShapeError(ValueError):
    """Bullet placement on a straight shape."""


class _Sentinel:
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self):
        return self.name


GAP = _Sentinel("GAP")
BULLET = _Sentinel("BULLET")


@dataclass(frozen=True)
class SlideEvent:
    pass_no: int
    collection: int
    rule: int
    letter: Letter
    src: Cell
    dst: Cell
    # instance ids of every letter the event repositioned, mover first
    moved_ids: tuple[int, ...] = ()

    def __str__(self) -> str:
        return (
            f"pass={self.pass_no} coll={self.collection} rule={self.rule} "
            f"letter={self.letter} from={self.src} to={self.dst}"
        )


Observer = Callable[["HoleTableau", Optional[SlideEvent]], None]


class HoleTableau:
    """Mutable rectification state: letters, bullets and gaps on a grid.

    Gaps are the not-yet-bulleted inner cells; cells vanish entirely once a
    dead bullet is deleted.  The class is a sequential state machine; make a
    fresh instance per rectification.
    """

    def __init__(self, cells: dict[Cell, object], pass_no: int = 0):
        self.cells = cells
        self.pass_no = pass_no
        self.trace: list[SlideEvent] = []
        self._ids = {
            cell: k
            for k, (cell, content) in enumerate(sorted(cells.items()))
            if isinstance(content, Letter)
        }

    @classmethod
    def from_tableau(cls, tableau: ShiftedTableau) -> "HoleTableau":
        cells: dict[Cell, object] = {}
        shape = tableau.shape
        for i in range(1, len(shape.outer) + 1):
            for j in range(i, i + shape.outer[i - 1]):
                cells[(i, j)] = tableau[(i, j)] if (i, j) in shape else GAP
        return cls(cells)

    # -- shape bookkeeping --------------------------------------------------

    def _row_counts(self, predicate) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for (i, _), content in self.cells.items():
            if predicate(content):
                counts[i] = counts.get(i, 0) + 1
        if not counts:
            return ()
        return tuple(counts.get(i, 0) for i in range(1, max(counts) + 1))

    def inner_shape(self) -> tuple[int, ...]:
        return self._row_counts(lambda c: c is GAP)

    def outer_shape(self) -> tuple[int, ...]:
        return self._row_counts(lambda c: True)

    def letters(self) -> dict[Cell, Letter]:
        return {c: v for c, v in self.cells.items() if isinstance(v, Letter)}

    def bullets(self) -> list[Cell]:
        return [c for c, v in self.cells.items() if v is BULLET]

    def instance_of(self, cell: Cell) -> int:
        return self._ids[cell]

    def nucleus(self) -> tuple[int, ...]:
        """Shape of the largest straight-shape block of letters anchored at
        the top-left box, row i truncated below row i-1 as a strict shape."""
        parts: list[int] = []
        row = 1
        while True:
            run = 0
            while isinstance(self.cells.get((row, row + run)), Letter):
                run += 1
            if parts:
                run = min(run, parts[-1] - 1)
            if run <= 0:
                return tuple(parts)
            parts.append(run)
            row += 1

    def to_tableau(self) -> ShiftedTableau:
        if any(v is BULLET for v in self.cells.values()):
            raise ValueError("state still holds bullets")
        return ShiftedTableau(
            SkewShape(self.outer_shape(), self.inner_shape()), self.letters()
        )

    def snapshot(self) -> str:
        """Text grid: `.` gaps, `*` bullets, letters as usual."""
        outer = self.outer_shape()
        lines = []
        for i in range(1, len(outer) + 1):
            tokens = []
            for j in range(i, i + outer[i - 1]):
                content = self.cells[(i, j)]
                if content is GAP:
                    tokens.append(".")
                elif content is BULLET:
                    tokens.append("*")
                else:
                    tokens.append(str(content))
            lines.append(" ".join(tokens))
        return "\n".join(lines)

    # -- the slide machine ---------------------------------------------------

    def place_bullets(self) -> None:
        inner = self.inner_shape()
        if not inner:
            raise NoInnerShapeError("shape is already straight")
        bottom = len(inner)
        for j in range(bottom, bottom + inner[-1]):
            assert self.cells[(bottom, j)] is GAP
            self.cells[(bottom, j)] = BULLET
        self.pass_no += 1
        self._delete_dead_bullets()

    def _delete_dead_bullets(self) -> None:
        letters = list(self.letters())
        for (r, c) in self.bullets():
            if not any(r2 >= r and c2 >= c for (r2, c2) in letters):
                del self.cells[(r, c)]

    def available_entries(self) -> list[tuple[Letter, Cell]]:
        out = []
        for (r, c), content in self.cells.items():
            if not isinstance(content, Letter):
                continue
            if self.cells.get((r - 1, c)) is BULLET or self.cells.get((r, c - 1)) is BULLET:
                out.append((content, (r, c)))
        out.sort(key=lambda pair: letter_rank_key(pair[0], pair[1]))
        return out

    def _move(self, src: Cell, dst: Cell, letter: Letter) -> None:
        """Swap a letter into a bullet cell, possibly changing its marker."""
        assert self.cells[dst] is BULLET
        self.cells[dst] = letter
        self.cells[src] = BULLET
        self._ids[dst] = self._ids.pop(src)

    def apply_slide_step(self) -> SlideEvent:
        avail = self.available_entries()
        if not avail:
            raise StuckError("no available entries")
        y, b = avail[0]
        r, c = b
        at = self.cells.get
        up, left, upleft, below = (r - 1, c), (r, c - 1), (r - 1, c - 1), (r + 1, c)

        def letter_at(cell):
            content = at(cell)
            return content if isinstance(content, Letter) else None

        coll = rule = None
        if (
            at(up) is BULLET
            and at(upleft) is BULLET
            and (at(left) is BULLET or at(left) is None)
        ):
            coll, rule = 1, 1 if at(left) is BULLET else 2
            moved = [(b, upleft, y)]
        elif at(up) is BULLET and at(left) is BULLET and letter_at(upleft):
            x = letter_at(upleft)
            if x != y:
                if not y.high:
                    coll, rule, moved = 2, 1, [(b, up, y)]
                else:
                    coll, rule, moved = 2, 2, [(b, left, y)]
            elif not y.high:
                if left[0] == left[1]:
                    # entering the diagonal raises the letter; the cell
                    # up-left of x is filled in every reachable state
                    assert letter_at((r - 1, c - 2)) is not None
                    coll, rule, moved = 3, 1, [(b, left, y.raised())]
                else:
                    coll, rule, moved = 3, 2, [(b, left, y)]
            else:
                coll, rule, moved = 3, 3, [(b, up, y)]
        elif (
            not y.high
            and at(left) is BULLET
            and below[0] == below[1]
            and letter_at(below) == y.raised()
        ):
            # composite rewrite: y steps left raised, its high partner
            # steps up off the diagonal, the bullet drops to the diagonal
            coll, rule = 4, 1
            moved = [(b, left, y.raised()), (below, b, y.raised())]
        elif at(left) is BULLET and left[0] == left[1]:
            coll, rule, moved = 5, 1, [(b, left, y.raised())]
        elif (
            y.high
            and r == c
            and at(up) is BULLET
            and letter_at(upleft)
        ):
            coll, rule, moved = 5, 2, [(b, up, y.lowered())]
        elif at(left) is BULLET:
            coll, rule, moved = 6, 1, [(b, left, y)]
        elif at(up) is BULLET:
            coll, rule, moved = 6, 2, [(b, up, y)]
        else:
            raise StuckError(f"no rule matches letter {y} at {b}")

        ids = []
        for src, dst, _ in moved:
            ids.append(self._ids[src])
        if len(moved) == 1:
            src, dst, letter = moved[0]
            self._move(src, dst, letter)
        else:
            # rule 4 repositions two letters atomically
            (src1, dst1, let1), (src2, dst2, let2) = moved
            id1, id2 = self._ids.pop(src1), self._ids.pop(src2)
            self.cells[dst1] = let1
            self.cells[dst2] = let2
            self.cells[src2] = BULLET
            self._ids[dst1], self._ids[dst2] = id1, id2
        event = SlideEvent(
            self.pass_no, coll, rule, y, b, moved[0][1], tuple(ids)
        )
        self.trace.append(event)
        self._delete_dead_bullets()
        return event

    def run_pass(self, observer: Observer | None = None) -> None:
        self.place_bullets()
        if observer:
            observer(self, None)
        while self.available_entries():
            event = self.apply_slide_step()
            if observer:
                observer(self, event)
        if self.bullets():
            raise StuckError("pass finished with live bullets")


def mixed_rectify(
    tableau: ShiftedTableau,
    observer: Observer | None = None,
    trace: Optional[list[SlideEvent]] = None,
) -> ShiftedTableau:
    """Rectify a semistandard skew tableau to straight shape.

    `observer(state, event)` fires after every bullet placement (event None)
    and after every slide; `trace`, if given, collects the slide events.
    """
    if not is_semistandard(tableau):
        raise ValueError("mixed rectification needs a semistandard tableau")
    state = HoleTableau.from_tableau(tableau)
    while state.inner_shape():
        state.run_pass(observer)
    if trace is not None:
        trace.extend(state.trace)
    result = state.to_tableau()
    if not (result.shape.is_straight and is_semistandard(result)):
        raise StuckError("rectification left a non-straight or invalid tableau")
    return result


def oplus(tableau: ShiftedTableau, letter: Letter) -> ShiftedTableau:
    """Push the tableau one step down-right and prepend a top row whose only
    letter is `letter`, one column past the rightmost occupied column."""
    if not letter.high:
        raise ValueError("only a high letter can be adjoined")
    shifted = {(r + 1, c + 1): v for (r, c), v in tableau.cells()}
    rightmost = max((c for (_, c) in shifted), default=0)
    shifted[(1, rightmost + 1)] = letter
    outer = (rightmost + 1, *tableau.shape.outer)
    inner = (rightmost, *tableau.shape.inner) if rightmost else ()
    return ShiftedTableau(SkewShape(outer, inner), shifted)


def staircase(word: Iterable[int]) -> ShiftedTableau:
    """Fold of oplus over the word, read left to right as high letters."""
    out = ShiftedTableau(SkewShape(()), {})
    for value in _as_word(word):
        out = oplus(out, Letter(value, True))
    return out


def check_rect_equals_insertion(word: Iterable[int]) -> bool:
    """Mixed rectification of the staircase equals mixed insertion."""
    word = _as_word(word)
    return mixed_rectify(staircase(word)) == mixed_insert_word(word)
