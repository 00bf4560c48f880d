"""Sparse polynomials in n commuting variables and Schur P/Q expansions.

Everything is exact integer (or dyadic rational) arithmetic over exponent
tuples of fixed length n.  Schur P polynomials are built straight from the
tableau enumeration; expanding a symmetric polynomial in the P basis peels
its lexicographically greatest monomial, which for a P polynomial is the
shape itself with coefficient 1.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping

from .shapes import Partition, SkewShape, check_strict_partition
from .tableaux import content, enumerate_tableaux


class NotSymmetricError(ValueError):
    """Input polynomial is not symmetric in its variables."""


class NotInSpanError(ValueError):
    """Peeling terminated on a monomial outside the strict-partition cone."""


class MismatchError(AssertionError):
    """The two computation routes for a Q polynomial disagree."""


class SymPoly:
    """Sparse polynomial: exponent tuple (length n) -> integer coefficient."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[tuple[int, ...], int] = ()):
        self.n = n
        self.coeffs = {e: c for e, c in dict(coeffs).items() if c != 0}
        for e in self.coeffs:
            if len(e) != n:
                raise ValueError(f"exponent {e} has length != {n}")

    @classmethod
    def zero(cls, n: int) -> "SymPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "SymPoly":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exponents: Iterable[int], coeff: int = 1) -> "SymPoly":
        e = tuple(exponents)
        return cls(len(e), {e: coeff})

    def _aligned(self, other: "SymPoly") -> "SymPoly":
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")
        return other

    def __add__(self, other: "SymPoly") -> "SymPoly":
        out = dict(self.coeffs)
        for e, c in self._aligned(other).coeffs.items():
            out[e] = out.get(e, 0) + c
        return SymPoly(self.n, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, int):
            return SymPoly(self.n, {e: other * c for e, c in self.coeffs.items()})
        self._aligned(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SymPoly(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymPoly)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.coeffs}
        return len(degrees) <= 1

    def is_symmetric(self) -> bool:
        """Invariance under adjacent variable swaps (hence all of them)."""
        for i in range(self.n - 1):
            for e, c in self.coeffs.items():
                swapped = list(e)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if self.coeffs.get(tuple(swapped), 0) != c:
                    return False
        if self.n <= 3:
            for e, c in self.coeffs.items():
                for perm in permutations(e):
                    if self.coeffs.get(perm, 0) != c:
                        return False
        return True

    def leading(self) -> tuple[tuple[int, ...], int]:
        e = max(self.coeffs)
        return e, self.coeffs[e]

    def __repr__(self):
        return f"SymPoly({self.n}, {self.coeffs!r})"


def _content_exponent(counts: tuple[int, ...], n: int) -> tuple[int, ...]:
    if len(counts) > n:
        raise AssertionError("tableau value exceeds the variable count")
    return counts + (0,) * (n - len(counts))


def schur_p_poly(shape: SkewShape, n: int) -> SymPoly:
    """Generating polynomial of the semistandard tableaux of a shape."""
    out: dict[tuple[int, ...], int] = {}
    for tab in enumerate_tableaux(shape, n, "semistandard"):
        e = _content_exponent(content(tab), n)
        out[e] = out.get(e, 0) + 1
    return SymPoly(n, out)


def schur_q_poly(shape: SkewShape, n: int) -> SymPoly:
    """Doubled generating polynomial, computed both ways and cross-checked:
    as 2^(rows of outer - rows of inner) times the P polynomial and as the
    generating polynomial of the Q-tableaux."""
    doubled = 2 ** (len(shape.outer) - len(shape.inner)) * schur_p_poly(shape, n)
    direct: dict[tuple[int, ...], int] = {}
    for tab in enumerate_tableaux(shape, n, "qtableau"):
        e = _content_exponent(content(tab), n)
        direct[e] = direct.get(e, 0) + 1
    direct_poly = SymPoly(n, direct)
    if direct_poly != doubled:
        raise MismatchError(f"Q polynomial routes disagree for {shape}")
    return direct_poly


@lru_cache(maxsize=None)
def _schur_p_cached(parts: Partition, n: int) -> SymPoly:
    return schur_p_poly(SkewShape(parts), n)


def expand_in_p(poly: SymPoly, n: int) -> dict[Partition, int]:
    """Write a homogeneous symmetric polynomial as an integer combination of
    straight-shape P polynomials in n variables.

    Works by peeling: the lex-greatest monomial of P_lambda is the partition
    itself with coefficient 1, so repeatedly subtracting the P polynomial of
    the current lex-greatest exponent terminates or leaves the cone.
    """
    if poly.n != n:
        raise ValueError("variable count mismatch")
    if not poly.is_homogeneous():
        raise ValueError("polynomial must be homogeneous")
    if not poly.is_symmetric():
        raise NotSymmetricError("polynomial is not symmetric")
    out: dict[Partition, int] = {}
    rest = poly
    while not rest.is_zero:
        exp, coeff = rest.leading()
        parts = tuple(p for p in exp if p > 0)
        if exp != parts + (0,) * (n - len(parts)) or not _is_strict(parts):
            raise NotInSpanError(f"leading monomial {exp} is not a strict partition")
        rest = rest - coeff * _schur_p_cached(parts, n)
        out[parts] = coeff
    return {lam: c for lam, c in out.items() if c != 0}


def _is_strict(parts: tuple[int, ...]) -> bool:
    return all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))


def skew_schur_p_coeffs(
    outer: Iterable[int], inner: Iterable[int]
) -> dict[Partition, int]:
    """Expansion coefficients of a skew P polynomial in the straight P basis.

    Uses as many variables as the outer shape has rows; every shape that can
    appear fits in that many rows, and the straight P polynomials in that
    many variables are linearly independent.
    """
    outer = check_strict_partition(outer)
    inner = check_strict_partition(inner)
    n = max(len(outer), 1)
    shape = SkewShape(outer, inner)
    return expand_in_p(schur_p_poly(shape, n), n)


def shifted_lr_coeffs(
    outer: Iterable[int], inner: Iterable[int]
) -> dict[Partition, int]:
    """Shifted Littlewood-Richardson numbers: the expansion coefficients of
    the skew Q polynomial in the straight Q basis.

    Rescales the P expansion, since Q shapes carry a factor 2 per row:
    the Q coefficient of lambda is the P coefficient times
    2^(rows of outer - rows of inner - rows of lambda).  These are the
    numbers that count rectification preimages.
    """
    outer = check_strict_partition(outer)
    inner = check_strict_partition(inner)
    diag = len(outer) - len(inner)
    out = {}
    for lam, coeff in skew_schur_p_coeffs(outer, inner).items():
        scaled = coeff * 2 ** diag
        if scaled % 2 ** len(lam):
            raise AssertionError(
                f"non-integral Q-basis coefficient for {lam} in {outer}/{inner}"
            )
        out[lam] = scaled // 2 ** len(lam)
    return out
