"""Truncated universal enveloping algebra in a PBW basis, and finite tables on it.

A monomial is a non-decreasing tuple of basis indices of B.  Words are
straightened exactly with ``x_j x_i = x_i x_j + [x_j, x_i]`` and only then
cut down to the degree bound, so truncation never feeds back into the
rewriting.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Iterable, Mapping

from ..errors import DegreeOverflow
from .algebra import LieAlgebra
from .linalg import Vector, add, fmt, fmt_vec, is_zero, scale, zeros

Monomial = tuple[int, ...]


def monomials(n: int, d: int) -> list[Monomial]:
    """All PBW monomials in n letters of degree at most d, by degree then lexicographically."""
    out: list[Monomial] = []
    for r in range(d + 1):
        out.extend(combinations_with_replacement(range(n), r))
    return out


def is_monomial(m: Monomial) -> bool:
    return all(a <= b for a, b in zip(m, m[1:]))


@dataclass(frozen=True)
class UEnvElement:
    terms: Mapping[Monomial, Fraction]
    d: int

    def __post_init__(self):
        for m, c in self.terms.items():
            if c == 0:
                raise ValueError(f"zero coefficient stored for {m}")
            if len(m) > self.d or not is_monomial(m):
                raise DegreeOverflow(f"monomial {m} is not a PBW monomial of degree <= {self.d}")

    def __eq__(self, other):
        return isinstance(other, UEnvElement) and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[m]
            word = "".join(f"b{i + 1}" for i in m) or "1"
            parts.append(f"{fmt(c)}*{word}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [[list(m), fmt(c)] for m, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))]


def _clean(terms: Mapping[Monomial, Fraction], d: int) -> UEnvElement:
    return UEnvElement({m: c for m, c in terms.items() if c != 0 and len(m) <= d}, d)


class PBW:
    """Straightening in U(B) for a fixed B.

    The memo table lives on the instance, so nothing is shared between
    independent computations.
    """

    def __init__(self, B: LieAlgebra, strategy: str = "leftmost"):
        if strategy not in ("leftmost", "rightmost"):
            raise ValueError(f"unknown strategy {strategy!r}")
        self.B = B
        self.strategy = strategy
        self._memo: dict[Monomial, dict[Monomial, Fraction]] = {}

    def _descent(self, w: Monomial) -> int | None:
        positions = range(len(w) - 1)
        if self.strategy == "rightmost":
            positions = reversed(positions)
        for p in positions:
            if w[p] > w[p + 1]:
                return p
        return None

    def _straighten(self, w: Monomial) -> dict[Monomial, Fraction]:
        if w in self._memo:
            return self._memo[w]
        p = self._descent(w)
        if p is None:
            result = {w: Fraction(1)}
        else:
            j, i = w[p], w[p + 1]
            acc: Counter = Counter()
            for m, c in self._straighten(w[:p] + (i, j) + w[p + 2:]).items():
                acc[m] += c
            for k, ck in enumerate(self.B.c[j][i]):
                if ck:
                    for m, c in self._straighten(w[:p] + (k,) + w[p + 2:]).items():
                        acc[m] += ck * c
            result = {m: c for m, c in acc.items() if c != 0}
        self._memo[w] = result
        return result

    def straighten(self, word: Iterable[int], d: int) -> UEnvElement:
        w = tuple(word)
        for i in w:
            if not 0 <= i < self.B.dim:
                raise IndexError(f"letter {i} outside a basis of size {self.B.dim}")
        return _clean(self._straighten(w), d)

    def times_letter(self, m: Monomial, i: int, d: int) -> UEnvElement:
        """``m * b_i`` in the PBW basis."""
        return self.straighten(m + (i,), d)

    def letter_times(self, i: int, m: Monomial, d: int) -> UEnvElement:
        return self.straighten((i,) + m, d)


def pbw_straighten(B: LieAlgebra, word: Iterable[int], d: int, strategy: str = "leftmost") -> UEnvElement:
    return PBW(B, strategy).straighten(word, d)


def coproduct_split(m: Monomial) -> Counter:
    """Every ordered split of m into a subsequence and its complement, with multiplicities.

    Subsequences of a non-decreasing tuple are non-decreasing, so both sides
    are already PBW monomials.
    """
    out: Counter = Counter()
    for mask in product((0, 1), repeat=len(m)):
        left = tuple(x for x, t in zip(m, mask) if t == 0)
        right = tuple(x for x, t in zip(m, mask) if t == 1)
        out[(left, right)] += 1
    return out


@dataclass(frozen=True)
class DualTable:
    """A linear map U(B)_{<=d} -> A given by its values on PBW monomials."""

    nb: int
    na: int
    d: int
    entries: Mapping[Monomial, Vector] = field(hash=False)

    def __post_init__(self):
        expected = set(monomials(self.nb, self.d))
        if set(self.entries) != expected:
            raise ValueError("table must be total on monomials of degree <= d")

    def __eq__(self, other):
        return (
            isinstance(other, DualTable)
            and (self.nb, self.na, self.d) == (other.nb, other.na, other.d)
            and dict(self.entries) == dict(other.entries)
        )

    def __call__(self, m: Monomial) -> Vector:
        if len(m) > self.d:
            raise DegreeOverflow(f"table is defined up to degree {self.d}, asked for {m}")
        return self.entries[m]

    def evaluate(self, u: UEnvElement) -> Vector:
        out = zeros(self.na)
        for m, c in u.terms.items():
            out = add(out, scale(c, self(m)))
        return out

    def truncate(self, d: int) -> "DualTable":
        if d > self.d:
            raise DegreeOverflow(f"cannot extend a degree {self.d} table to degree {d}")
        return DualTable(self.nb, self.na, d, {m: v for m, v in self.entries.items() if len(m) <= d})

    def is_zero(self) -> bool:
        return all(is_zero(v) for v in self.entries.values())

    def __add__(self, other: "DualTable") -> "DualTable":
        return DualTable(self.nb, self.na, self.d, {m: add(v, other.entries[m]) for m, v in self.entries.items()})

    def scaled(self, c) -> "DualTable":
        return DualTable(self.nb, self.na, self.d, {m: scale(c, v) for m, v in self.entries.items()})

    def coordinates(self) -> Vector:
        return tuple(x for m in monomials(self.nb, self.d) for x in self.entries[m])

    def to_json(self) -> list:
        return [[list(m), fmt_vec(self.entries[m])] for m in monomials(self.nb, self.d)]


def zero_table(nb: int, na: int, d: int) -> DualTable:
    return DualTable(nb, na, d, {m: zeros(na) for m in monomials(nb, d)})


def table_from(nb: int, na: int, d: int, fn) -> DualTable:
    return DualTable(nb, na, d, {m: tuple(fn(m)) for m in monomials(nb, d)})


def right_translate(pbw: PBW, b: Vector, h: DualTable, side: str = "right") -> DualTable:
    """``(b . h)(m) = h(m * b)``; the result is defined one degree lower than h.

    ``side="left"`` gives ``h(b * m)`` instead, used only by the convention probe.
    """
    d = h.d - 1
    if d < 0:
        raise DegreeOverflow("translating a degree 0 table leaves nothing defined")

    def value(m: Monomial) -> Vector:
        out = zeros(h.na)
        for i, bi in enumerate(b):
            if bi:
                u = pbw.times_letter(m, i, h.d) if side == "right" else pbw.letter_times(i, m, h.d)
                out = add(out, scale(bi, h.evaluate(u)))
        return out

    return table_from(h.nb, h.na, d, value)
