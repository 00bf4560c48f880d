"""Exhaustive desk-scale verification suites.

Every suite sweeps a bounded input space, counts checks, and reports the
lexicographically smallest counterexample when something fails.  Items are
independent, so a suite can fan out over a process pool; aggregation is
order-insensitive and the report does not depend on the parallelism degree.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

from .shapes import (
    Letter,
    SkewShape,
    strict_partitions,
    strict_subpartitions,
)
from .tableaux import (
    ShiftedTableau,
    enumerate_tableaux,
    print_tableau,
)
from .insertion import (
    enumerate_hook_set,
    mixed_insert_word,
    relation_instances,
    relation_neighbors,
)
from .mixed_jdt import HoleTableau, SlideEvent, mixed_rectify, staircase
from .saganworley import (
    rectification_counter,
    skew_plactic_schur_p,
    southwestmost_marker,
    sw_rectify,
)
from .symfunc import (
    MismatchError,
    SymPoly,
    schur_p_poly,
    schur_q_poly,
    shifted_lr_coeffs,
)

SUITE_NAMES = (
    "mixed-jdt",
    "plactic-relations",
    "plactic-completeness",
    "sw-marker",
    "sw-count",
    "cho",
    "qp-identity",
    "free-schur",
    "invariants",
)


@dataclass
class VerifyResult:
    suite: str
    tested: int
    failed: int
    counterexample: str | None
    bounds: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "tested": self.tested,
            "failed": self.failed,
            "counterexample": self.counterexample,
            "bounds": self.bounds,
        }


Failure = tuple[tuple, str]  # (sort key, replayable text)


def _aggregate(
    results: Iterable[tuple[int, list[Failure]]]
) -> tuple[int, int, str | None]:
    tested = 0
    failed = 0
    best: Failure | None = None
    for count, failures in results:
        tested += count
        failed += len(failures)
        for failure in failures:
            if best is None or failure[0] < best[0]:
                best = failure
    return tested, failed, best[1] if best else None


def _run_items(worker: Callable, items: list, jobs: int):
    if jobs > 1 and len(items) > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = list(pool.imap_unordered(worker, items))
    else:
        results = [worker(item) for item in items]
    return _aggregate(results)


def _fmt_word(word) -> str:
    return " ".join(map(str, word))


def _words(n: int, length: int):
    return product(range(1, n + 1), repeat=length)


def _skew_pairs(max_size: int):
    pairs = []
    for total in range(1, max_size + 1):
        for outer in strict_partitions(total):
            for inner in strict_subpartitions(outer):
                pairs.append((outer, inner))
    return pairs


# ---------------------------------------------------------------------------
# mixed jeu de taquin vs mixed insertion

def _w_rect_vs_insert(item):
    n, length, first = item
    tested, fails = 0, []
    for rest in _words(n, length - 1):
        word = (first, *rest)
        tested += 1
        if mixed_rectify(staircase(word)) != mixed_insert_word(word):
            fails.append(((length, word), _fmt_word(word)))
    return tested, fails


def suite_mixed_jdt(n: int = 3, max_len: int = 6, jobs: int = 1) -> VerifyResult:
    items = [(n, k, first) for k in range(1, max_len + 1) for first in range(1, n + 1)]
    tested, failed, ce = _run_items(_w_rect_vs_insert, items, jobs)
    return VerifyResult(
        "mixed-jdt", tested, failed, ce, {"n": n, "len": max_len}
    )


# ---------------------------------------------------------------------------
# slide invariants along the same sweep

def _holes_semistandard_violation(state: HoleTableau) -> str | None:
    letters = state.letters()
    rows: dict[int, list] = {}
    cols: dict[int, list] = {}
    for (r, c), letter in letters.items():
        rows.setdefault(r, []).append((c, letter))
        cols.setdefault(c, []).append((r, letter))
    for r, items in rows.items():
        items.sort()
        seen_low = set()
        for (_, a), (_, b) in zip(items, items[1:]):
            if b < a:
                return f"row {r} decreases"
        for _, letter in items:
            if not letter.high:
                if letter.value in seen_low:
                    return f"row {r} repeats low {letter}"
                seen_low.add(letter.value)
    for c, items in cols.items():
        items.sort()
        seen_high = set()
        for (_, a), (_, b) in zip(items, items[1:]):
            if b < a:
                return f"column {c} decreases"
        for _, letter in items:
            if letter.high:
                if letter.value in seen_high:
                    return f"column {c} repeats high {letter}"
                seen_high.add(letter.value)
    return None


def audit_rectification(tableau: ShiftedTableau) -> list[str]:
    """Run a mixed rectification and report every invariant violation:
    a low letter on a diagonal cell, broken holes-aware semistandardness,
    a decreasing least-available letter within a pass, or a letter moving
    again after its slide run ended."""
    violations: list[str] = []
    pass_state = {"first_letter": None, "current": None, "finished": set()}

    def observer(state: HoleTableau, event: SlideEvent | None):
        if event is None:
            pass_state["first_letter"] = None
            pass_state["current"] = None
            pass_state["finished"] = set()
            return
        for (r, c), v in state.cells.items():
            if isinstance(v, Letter) and r == c and not v.high:
                violations.append(f"low letter {v} on diagonal {(r, c)}")
        problem = _holes_semistandard_violation(state)
        if problem:
            violations.append(problem)
        mover = event.moved_ids[0]
        if mover != pass_state["current"]:
            # a new slide run starts; its opening letter may not sit below
            # the previous run's opening letter (within a run the letter
            # itself may drop, e.g. when it is lowered off the diagonal)
            if (
                pass_state["first_letter"] is not None
                and event.letter < pass_state["first_letter"]
            ):
                violations.append(
                    f"least available decreased to {event.letter} "
                    f"in pass {event.pass_no}"
                )
            pass_state["first_letter"] = event.letter
            if mover in pass_state["finished"]:
                violations.append(f"letter instance {mover} moved twice")
            if pass_state["current"] is not None:
                pass_state["finished"].add(pass_state["current"])
            pass_state["current"] = mover
        for other in event.moved_ids[1:]:
            if other in pass_state["finished"]:
                violations.append(f"letter instance {other} dragged after resting")

    mixed_rectify(tableau, observer=observer)
    return violations


def _w_invariants(item):
    n, length, first = item
    tested, fails = 0, []
    for rest in _words(n, length - 1):
        word = (first, *rest)
        tested += 1
        for violation in audit_rectification(staircase(word)):
            fails.append(((length, word), f"{_fmt_word(word)}: {violation}"))
    return tested, fails


def suite_invariants(n: int = 3, max_len: int = 6, jobs: int = 1) -> VerifyResult:
    items = [(n, k, first) for k in range(1, max_len + 1) for first in range(1, n + 1)]
    tested, failed, ce = _run_items(_w_invariants, items, jobs)
    return VerifyResult(
        "invariants", tested, failed, ce, {"n": n, "len": max_len}
    )


# ---------------------------------------------------------------------------
# plactic relations

CONTEXT_ALPHABET = 4


def _w_relation(item):
    left, right = item
    tested, fails = 0, []
    contexts = [()] + [(a,) for a in range(1, CONTEXT_ALPHABET + 1)]
    for pre in contexts:
        for post in contexts:
            tested += 1
            u = pre + left + post
            v = pre + right + post
            if mixed_insert_word(u) != mixed_insert_word(v):
                fails.append(
                    ((len(u), u, v), f"{_fmt_word(u)} | {_fmt_word(v)}")
                )
    return tested, fails


def suite_plactic_relations(n: int = 5, jobs: int = 1) -> VerifyResult:
    items = sorted(set(relation_instances(n)))
    tested, failed, ce = _run_items(_w_relation, items, jobs)
    return VerifyResult("plactic-relations", tested, failed, ce, {"n": n})


# ---------------------------------------------------------------------------
# plactic completeness: equal insertion iff connected by rewrites

def _w_completeness(item):
    n, length = item
    words = list(_words(n, length))
    index = {w: i for i, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        parent[find(i)] = find(j)

    for w in words:
        for v in relation_neighbors(w):
            union(index[w], index[v])
    tested, fails = 0, []
    by_tableau: dict = {}
    for w in words:
        tested += 1
        by_tableau.setdefault(mixed_insert_word(w), []).append(w)
    for group in by_tableau.values():
        root = find(index[group[0]])
        for w in group[1:]:
            if find(index[w]) != root:
                fails.append(
                    ((length, group[0], w), f"{_fmt_word(group[0])} | {_fmt_word(w)}")
                )
    by_root: dict = {}
    for w in words:
        by_root.setdefault(find(index[w]), set()).add(mixed_insert_word(w))
    for members in by_root.values():
        if len(members) > 1:
            fails.append(((length,), "connected words with different insertions"))
    return tested, fails


def suite_plactic_completeness(
    n: int = 3, max_len: int = 5, jobs: int = 1
) -> VerifyResult:
    items = [(n, k) for k in range(1, max_len + 1)]
    tested, failed, ce = _run_items(_w_completeness, items, jobs)
    return VerifyResult(
        "plactic-completeness", tested, failed, ce, {"n": n, "len": max_len}
    )


# ---------------------------------------------------------------------------
# Sagan-Worley marker conservation and order independence

def _w_sw_marker(item):
    outer, inner, n = item
    shape = SkewShape(outer, inner)
    tested, fails = 0, []
    values = range(1, n + 1)
    for tab in enumerate_tableaux(shape, n, "qtableau"):
        text = print_tableau(tab)

        def audit(before, after, text=text):
            for v in values:
                lhs = southwestmost_marker(before.entries, v)
                rhs = southwestmost_marker(after.entries, v)
                if lhs != rhs:
                    fails.append(
                        ((outer, inner, text, v),
                         f"{text} :: value {v} flipped {lhs}->{rhs}")
                    )

        first = sw_rectify(tab, "low", audit)
        tested += 1
        if first != sw_rectify(tab, "high"):
            fails.append(
                ((outer, inner, text), f"{text} :: corner order changed the result")
            )
    return tested, fails


def suite_sw_marker(max_size: int = 6, n: int = 3, jobs: int = 1) -> VerifyResult:
    items = [(o, i, n) for o, i in _skew_pairs(max_size)]
    tested, failed, ce = _run_items(_w_sw_marker, items, jobs)
    return VerifyResult(
        "sw-marker", tested, failed, ce, {"max-size": max_size, "n": n}
    )


# ---------------------------------------------------------------------------
# rectification counting against the P-expansion coefficients

def _w_sw_count(item):
    outer, inner, n = item
    shape = SkewShape(outer, inner)
    counter = rectification_counter(shape, n)
    coeffs = shifted_lr_coeffs(outer, inner)
    tested, fails = 0, []
    seen = set()
    for lam in strict_partitions(shape.size):
        expected = coeffs.get(lam, 0)
        for target in enumerate_tableaux(SkewShape(lam), n, "qtableau"):
            tested += 1
            seen.add(target)
            got = counter.get(target, 0)
            if got != expected:
                fails.append(
                    ((outer, inner, lam, print_tableau(target)),
                     f"{shape} -> {print_tableau(target)} :: {got} != {expected}")
                )
    for stray in set(counter) - seen:
        fails.append(
            ((outer, inner, (), print_tableau(stray)),
             f"{shape} :: unexpected rectification target {print_tableau(stray)}")
        )
    return tested, fails


def suite_sw_count(max_size: int = 6, n: int = 3, jobs: int = 1) -> VerifyResult:
    items = [(o, i, n) for o, i in _skew_pairs(max_size)]
    tested, failed, ce = _run_items(_w_sw_count, items, jobs)
    return VerifyResult(
        "sw-count", tested, failed, ce, {"max-size": max_size, "n": n}
    )


# ---------------------------------------------------------------------------
# the skew plactic sum expands with coefficients 2^len / 2^diag times b

def _w_cho(item):
    outer, inner, n = item
    shape = SkewShape(outer, inner)
    plactic_sum = skew_plactic_schur_p(shape, n)
    coeffs = shifted_lr_coeffs(outer, inner)
    tested, fails = 0, []
    seen = set()
    for lam in strict_partitions(shape.size):
        expected = Fraction(
            2 ** len(lam) * coeffs.get(lam, 0), 2 ** shape.n_diagonals
        )
        for rep in enumerate_tableaux(SkewShape(lam), n, "semistandard"):
            tested += 1
            seen.add(rep)
            got = plactic_sum.get(rep, Fraction(0))
            if got != expected:
                fails.append(
                    ((outer, inner, lam, print_tableau(rep)),
                     f"{shape} -> {print_tableau(rep)} :: {got} != {expected}")
                )
    for stray in set(plactic_sum) - seen:
        fails.append(
            ((outer, inner, (), print_tableau(stray)),
             f"{shape} :: unexpected class {print_tableau(stray)}")
        )
    return tested, fails


def suite_cho(max_size: int = 6, n: int = 3, jobs: int = 1) -> VerifyResult:
    items = [(o, i, n) for o, i in _skew_pairs(max_size)]
    tested, failed, ce = _run_items(_w_cho, items, jobs)
    return VerifyResult("cho", tested, failed, ce, {"max-size": max_size, "n": n})


# ---------------------------------------------------------------------------
# generating function identities

def _w_qp(item):
    outer, inner, n = item
    shape = SkewShape(outer, inner)
    tested, fails = 0, []
    tested += 1
    try:
        schur_q_poly(shape, n)
    except MismatchError:
        fails.append(((outer, inner), f"{shape} :: Q polynomial routes disagree"))
    return tested, fails


def suite_qp_identity(max_size: int = 6, n: int = 3, jobs: int = 1) -> VerifyResult:
    items = [(o, i, n) for o, i in _skew_pairs(max_size)]
    tested, failed, ce = _run_items(_w_qp, items, jobs)
    return VerifyResult(
        "qp-identity", tested, failed, ce, {"max-size": max_size, "n": n}
    )


def _w_free_schur(item):
    lam, n = item
    tested, fails = 0, []
    tested += 1
    image: dict = {}
    for word in enumerate_hook_set(lam, n):
        counts = [0] * n
        for letter in word:
            counts[letter - 1] += 1
        e = tuple(counts)
        image[e] = image.get(e, 0) + 1
    if SymPoly(n, image) != schur_p_poly(SkewShape(lam), n):
        fails.append(((lam,), f"{','.join(map(str, lam))} :: hook-set image mismatch"))
    return tested, fails


def suite_free_schur(max_size: int = 5, n: int = 3, jobs: int = 1) -> VerifyResult:
    items = [
        (lam, n)
        for total in range(1, max_size + 1)
        for lam in strict_partitions(total)
    ]
    tested, failed, ce = _run_items(_w_free_schur, items, jobs)
    return VerifyResult(
        "free-schur", tested, failed, ce, {"max-size": max_size, "n": n}
    )


# ---------------------------------------------------------------------------

def run_suite(
    name: str,
    n: int | None = None,
    max_len: int | None = None,
    max_size: int | None = None,
    jobs: int = 1,
) -> VerifyResult:
    """Dispatch a suite by name with optional bound overrides."""
    if name == "mixed-jdt":
        return suite_mixed_jdt(n or 3, max_len or 6, jobs)
    if name == "invariants":
        return suite_invariants(n or 3, max_len or 6, jobs)
    if name == "plactic-relations":
        return suite_plactic_relations(n or 5, jobs)
    if name == "plactic-completeness":
        return suite_plactic_completeness(n or 3, max_len or 5, jobs)
    if name == "sw-marker":
        return suite_sw_marker(max_size or 6, n or 3, jobs)
    if name == "sw-count":
        return suite_sw_count(max_size or 6, n or 3, jobs)
    if name == "cho":
        return suite_cho(max_size or 6, n or 3, jobs)
    if name == "qp-identity":
        return suite_qp_identity(max_size or 6, n or 3, jobs)
    if name == "free-schur":
        return suite_free_schur(max_size or 5, n or 3, jobs)
    raise KeyError(name)
