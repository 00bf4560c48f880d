"""Mixed insertion, hook words, and the shifted plactic relations.

Words are sequences of positive integers, read as high letters when
inserted.  Mixed insertion bumps along rows while the travelling letter is
high, and along columns once it turns low; a high letter bumped off the
diagonal turns low and switches to column insertion.
"""

from __future__ import annotations

from bisect import bisect_right
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .shapes import Letter, check_strict_partition
from .tableaux import ShiftedTableau, is_semistandard

Word = tuple[int, ...]


class MarkerError(ValueError):
    """A low letter where only a high one is defined."""


class LengthError(ValueError):
    """Word length does not match the partition size."""


def _as_word(word: Iterable[int]) -> Word:
    word = tuple(word)
    if any(not isinstance(x, int) or x < 1 for x in word):
        raise ValueError(f"word letters must be positive integers: {word}")
    return word


# ---------------------------------------------------------------------------
# mixed insertion

def _rows_to_tableau(rows: list[list[Letter]]) -> ShiftedTableau:
    return ShiftedTableau.from_rows(rows)


def _check_rows(rows: list[list[Letter]]) -> None:
    """Assert the row lists form a semistandard straight-shape tableau.

    Cell (r, r+j) holds rows[r][j] in 0-based coordinates, so the neighbour
    above rows[r][j] is rows[r-1][j+1].
    """
    lengths = [len(row) for row in rows]
    if any(a <= b for a, b in zip(lengths, lengths[1:])) or (rows and lengths[-1] == 0):
        raise AssertionError("insertion broke the staircase shape")
    for r, row in enumerate(rows):
        for j, letter in enumerate(row):
            if j == 0 and not letter.high:
                raise AssertionError("insertion put a low letter on the diagonal")
            if j > 0 and (letter < row[j - 1] or (letter == row[j - 1] and not letter.high)):
                raise AssertionError("insertion broke a row condition")
            if r > 0 and j + 1 < len(rows[r - 1]):
                above = rows[r - 1][j + 1]
                if letter < above or (letter == above and letter.high):
                    raise AssertionError("insertion broke a column condition")


def _column_height(rows: list[list[Letter]], c: int) -> int:
    """Number of filled cells of 0-based column c (they start at row 0)."""
    m = 0
    while m < len(rows) and m <= c and c - m < len(rows[m]):
        m += 1
    return m


def _insert_high_into_rows(rows: list[list[Letter]], value: int) -> None:
    """One mixed insertion step, mutating the 0-based row lists."""
    cur = Letter(value, True)
    by_row = True
    index = 0
    while True:
        if by_row:
            r = index
            if r == len(rows):
                rows.append([cur])
                return
            row = rows[r]
            if not row or cur >= row[-1]:
                row.append(cur)
                return
            j = bisect_right(row, cur)
            bumped = row[j]
            row[j] = cur
            col = r + j
            if bumped.high and col != r:
                cur, by_row, index = bumped, True, r + 1
            else:
                cur, by_row, index = bumped.lowered(), False, col + 1
        else:
            c = index
            m = _column_height(rows, c)
            if m == 0:
                if len(rows[0]) != c:
                    raise AssertionError("column landing site is not addable")
                rows[0].append(cur)
                return
            if cur >= rows[m - 1][c - (m - 1)]:
                if m == len(rows):
                    if c != m:
                        raise AssertionError("column landing site is not addable")
                    rows.append([cur])
                elif len(rows[m]) == c - m:
                    rows[m].append(cur)
                else:
                    raise AssertionError("column landing site is not addable")
                return
            i = next(r for r in range(m) if rows[r][c - r] > cur)
            bumped = rows[i][c - i]
            rows[i][c - i] = cur
            if bumped.high and i != c:
                cur, by_row, index = bumped, True, i + 1
            else:
                cur, by_row, index = bumped.lowered(), False, c + 1


def _tableau_to_rows(tableau: ShiftedTableau) -> list[list[Letter]]:
    if not tableau.shape.is_straight:
        raise ValueError("mixed insertion needs a straight-shape tableau")
    rows: list[list[Letter]] = [[] for _ in tableau.shape.outer]
    for (i, _), letter in tableau.cells():
        rows[i - 1].append(letter)
    return rows


def mixed_insert_letter(tableau: ShiftedTableau, letter: Letter) -> ShiftedTableau:
    """Insert one high letter; the shape grows by exactly one box."""
    if not letter.high:
        raise MarkerError(f"cannot insert low letter {letter}")
    if not is_semistandard(tableau):
        raise ValueError("insertion target must be semistandard")
    rows = _tableau_to_rows(tableau)
    before = sum(len(r) for r in rows)
    _insert_high_into_rows(rows, letter.value)
    _check_rows(rows)
    if sum(len(r) for r in rows) != before + 1:
        raise AssertionError("insertion did not grow the shape by one box")
    return _rows_to_tableau(rows)


def mixed_insert_word(word: Iterable[int]) -> ShiftedTableau:
    """Left-to-right mixed insertion of a word of high letters."""
    rows: list[list[Letter]] = []
    for k, value in enumerate(_as_word(word), 1):
        _insert_high_into_rows(rows, value)
        _check_rows(rows)
        if sum(len(r) for r in rows) != k:
            raise AssertionError("insertion lost a box")
    return _rows_to_tableau(rows)


def plactic_equivalent(u: Iterable[int], v: Iterable[int]) -> bool:
    """Same mixed insertion tableau."""
    return mixed_insert_word(u) == mixed_insert_word(v)


# ---------------------------------------------------------------------------
# hook words

def is_hook_word(word: Sequence[int]) -> bool:
    """A strictly decreasing prefix followed by a weakly increasing suffix."""
    n = len(word)
    p = 1
    while p < n and word[p] < word[p - 1]:
        p += 1
    s = n
    while s > 0 and (s == n or word[s - 1] <= word[s]):
        s -= 1
    # word[:p] is the longest strictly decreasing prefix, word[s:] the
    # longest weakly increasing suffix; a split point needs s <= p
    return n == 0 or s <= p


def longest_hook_subword_length(word: Sequence[int]) -> int:
    """Longest hook word among all (not necessarily contiguous) subwords.

    Quadratic two-table scan: longest strictly decreasing subword ending at
    each position, longest weakly increasing subword starting at each
    position, maximized over the splice point.
    """
    n = len(word)
    if n == 0:
        return 0
    dec = [1] * n
    inc = [1] * n
    for i in range(n):
        for j in range(i):
            if word[j] > word[i]:
                dec[i] = max(dec[i], dec[j] + 1)
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            if word[j] >= word[i]:
                inc[i] = max(inc[i], inc[j] + 1)
    best = max(max(dec), max(inc))
    best_inc_after = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        best_inc_after[i] = max(best_inc_after[i + 1], inc[i])
    for i in range(n):
        if best_inc_after[i + 1]:
            best = max(best, dec[i] + best_inc_after[i + 1])
    return best


def longest_hook_subword_brute(word: Sequence[int]) -> int:
    """Independent oracle: scan subwords by decreasing length."""
    word = tuple(word)
    for length in range(len(word), 0, -1):
        for sub in combinations(word, length):
            if is_hook_word(sub):
                return length
    return 0


def in_hook_set(word: Iterable[int], lam: Iterable[int]) -> bool:
    """Membership in the hook-word factorization set of a strict partition.

    The word splits into consecutive blocks sized by the parts of `lam` read
    smallest first; every block must be a hook word and no block may extend
    to a longer hook subword inside the previous block joined with it.
    """
    word = _as_word(word)
    lam = check_strict_partition(lam)
    if len(word) != sum(lam):
        raise LengthError(f"word length {len(word)} != |{lam}|")
    blocks = []
    pos = 0
    for size in reversed(lam):
        blocks.append(word[pos:pos + size])
        pos += size
    for block in blocks:
        if not is_hook_word(block):
            return False
    for prev, block in zip(blocks, blocks[1:]):
        if longest_hook_subword_length(prev + block) != len(block):
            return False
    return True


def enumerate_hook_set(lam: Iterable[int], n: int) -> Iterator[Word]:
    """All words over the alphabet 1..n in the hook set of `lam`."""
    lam = check_strict_partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    for word in product(range(1, n + 1), repeat=sum(lam)):
        if in_hook_set(word, lam):
            yield word


# ---------------------------------------------------------------------------
# shifted plactic relations

# Each family is (left pattern, right pattern, comparisons), the comparisons
# chaining a ? b ? c ? d with 'le' or 'lt'.
RELATION_FAMILIES: tuple[tuple[str, str, tuple[str, str, str]], ...] = (
    ("abdc", "adbc", ("le", "le", "lt")),
    ("acdb", "acbd", ("le", "lt", "le")),
    ("dacb", "adcb", ("le", "lt", "lt")),
    ("badc", "bdac", ("lt", "le", "lt")),
    ("cbda", "cdba", ("lt", "lt", "le")),
    ("dbca", "bdca", ("lt", "le", "lt")),
    ("bcda", "bcad", ("lt", "le", "le")),
    ("cadb", "cdab", ("le", "lt", "le")),
)

_OPS = {"le": lambda x, y: x <= y, "lt": lambda x, y: x < y}


def _chain_ok(a: int, b: int, c: int, d: int, rels: tuple[str, str, str]) -> bool:
    return _OPS[rels[0]](a, b) and _OPS[rels[1]](b, c) and _OPS[rels[2]](c, d)


def relation_instances(max_letter: int) -> Iterator[tuple[Word, Word]]:
    """Every (left word, right word) instance with letters <= max_letter."""
    for lhs, rhs, rels in RELATION_FAMILIES:
        for a in range(1, max_letter + 1):
            for b in range(a, max_letter + 1):
                for c in range(b, max_letter + 1):
                    for d in range(c, max_letter + 1):
                        if _chain_ok(a, b, c, d, rels):
                            vals = {"a": a, "b": b, "c": c, "d": d}
                            yield (
                                tuple(vals[s] for s in lhs),
                                tuple(vals[s] for s in rhs),
                            )


def _rewrites(window: Word) -> set[Word]:
    out = set()
    for lhs, rhs, rels in RELATION_FAMILIES:
        for pattern, target in ((lhs, rhs), (rhs, lhs)):
            vals = {}
            ok = True
            for sym, letter in zip(pattern, window):
                if sym in vals and vals[sym] != letter:
                    ok = False
                    break
                vals[sym] = letter
            if ok and _chain_ok(vals["a"], vals["b"], vals["c"], vals["d"], rels):
                out.add(tuple(vals[s] for s in target))
    out.discard(window)
    return out


def relation_neighbors(word: Iterable[int]) -> set[Word]:
    """Words reachable by one relation applied to four consecutive letters."""
    word = _as_word(word)
    out: set[Word] = set()
    for start in range(len(word) - 3):
        window = word[start:start + 4]
        for new_window in _rewrites(window):
            out.add(word[:start] + new_window + word[start + 4:])
    return out
