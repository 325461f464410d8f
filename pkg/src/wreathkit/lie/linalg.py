"""Exact linear algebra over the rationals (tuples of Fractions)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or 'p/q' strings")
    return Fraction(x)


def vec(xs) -> Vector:
    return tuple(frac(x) for x in xs)


def matrix(rows) -> Matrix:
    return tuple(vec(r) for r in rows)


def zeros(n: int) -> Vector:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(int(j == i)) for j in range(n))


def identity(n: int) -> Matrix:
    return tuple(basis_vector(n, i) for i in range(n))


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


def ncols(M: Matrix, default: int = 0) -> int:
    return len(M[0]) if M else default


def mat_vec(M: Matrix, v: Sequence[Fraction]) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in M)


def mat_mul(M: Matrix, N: Matrix) -> Matrix:
    cols = list(zip(*N)) if N else []
    return tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols) for row in M)


def transpose(M: Matrix) -> Matrix:
    return tuple(zip(*M))


def column(M: Matrix, j: int) -> Vector:
    return tuple(row[j] for row in M)


def rref(M: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    R = [list(row) for row in M]
    pivots: list[int] = []
    r = 0
    width = len(R[0]) if R else 0
    for c in range(width):
        p = next((i for i in range(r, len(R)) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        lead = R[r][c]
        R[r] = [x / lead for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c] != 0:
                m = R[i][c]
                R[i] = [x - m * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def rank(M) -> int:
    if not M or not M[0]:
        return 0
    return len(rref(M)[1])


def solve(M: Matrix, y: Sequence[Fraction]) -> Vector | None:
    """A solution of ``M x = y``, or None if the system is inconsistent."""
    n = ncols(M)
    aug = [list(row) + [frac(b)] for row, b in zip(M, y)]
    if not aug:
        return zeros(n)
    R, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, c in zip(R, pivots):
        x[c] = row[n]
    return tuple(x)


def fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vec(v: Vector) -> list[str]:
    return [fmt(x) for x in v]
