"""Lie algebras over Q by structure constants, their homomorphisms and extensions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..errors import JacobiFailure, NotAHom, NotASection, NotExact
from .linalg import (
    Matrix,
    Vector,
    add,
    basis_vector,
    frac,
    identity,
    is_zero,
    mat_mul,
    mat_vec,
    matrix,
    rank,
    scale,
    solve,
    sub,
    vec,
    zeros,
)


class AntisymmetryFailure(JacobiFailure):
    pass


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    c: tuple[tuple[Vector, ...], ...]
    name: str = "L"

    def basis(self, i: int) -> Vector:
        return basis_vector(self.dim, i)

    def bracket(self, u: Vector, v: Vector) -> Vector:
        out = zeros(self.dim)
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj != 0 and i != j:
                    out = add(out, scale(ui * vj, self.c[i][j]))
        return out

    def is_abelian(self) -> bool:
        return all(is_zero(self.c[i][j]) for i in range(self.dim) for j in range(self.dim))


def make_lie(dim: int, brackets=(), name: str = "L") -> LieAlgebra:
    """Build and validate a Lie algebra.

    ``brackets`` lists ``(i, j, vector)`` meaning ``[e_i, e_j] = vector``;
    unspecified brackets are zero except where antisymmetry fills them in.
    """
    c = [[None] * dim for _ in range(dim)]
    for i, j, v in brackets:
        v = vec(v)
        if not (0 <= i < dim and 0 <= j < dim):
            raise JacobiFailure(f"bracket [{i},{j}] names a basis element outside 0..{dim - 1}")
        if len(v) != dim:
            raise JacobiFailure(f"bracket [{i},{j}] has length {len(v)}, expected {dim}")
        if c[i][j] is not None and c[i][j] != v:
            raise JacobiFailure(f"bracket [{i},{j}] given twice with different values")
        c[i][j] = v
    for i, j in product(range(dim), repeat=2):
        if c[i][j] is None:
            c[i][j] = scale(-1, c[j][i]) if c[j][i] is not None else zeros(dim)
    for i in range(dim):
        if not is_zero(c[i][i]):
            raise AntisymmetryFailure(f"[e_{i}, e_{i}] != 0", witness=(i, i))
        for j in range(dim):
            if c[i][j] != scale(-1, c[j][i]):
                raise AntisymmetryFailure(f"[e_{i}, e_{j}] != -[e_{j}, e_{i}]", witness=(i, j))
    L = LieAlgebra(dim, tuple(tuple(row) for row in c), name)
    for i, j, k in product(range(dim), repeat=3):
        ei, ej, ek = L.basis(i), L.basis(j), L.basis(k)
        total = add(
            add(L.bracket(ei, L.bracket(ej, ek)), L.bracket(ej, L.bracket(ek, ei))),
            L.bracket(ek, L.bracket(ei, ej)),
        )
        if not is_zero(total):
            raise JacobiFailure("Jacobi identity fails", witness=(i, j, k))
    return L


def abelian_lie(dim: int, name: str | None = None) -> LieAlgebra:
    return make_lie(dim, (), name or f"K^{dim}")


@dataclass(frozen=True)
class LieHom:
    domain: LieAlgebra
    codomain: LieAlgebra
    matrix: Matrix  # codomain.dim x domain.dim

    def __call__(self, v: Vector) -> Vector:
        if self.domain.dim == 0:
            return zeros(self.codomain.dim)
        return mat_vec(self.matrix, v)


def _shape_ok(M: Matrix, rows: int, cols: int) -> bool:
    return len(M) == rows and all(len(r) == cols for r in M)


def lie_hom_check(domain: LieAlgebra, codomain: LieAlgebra, mat) -> LieHom:
    M = matrix(mat)
    if not _shape_ok(M, codomain.dim, domain.dim):
        raise NotAHom(f"matrix must be {codomain.dim}x{domain.dim}")
    h = LieHom(domain, codomain, M)
    for i, j in product(range(domain.dim), repeat=2):
        lhs = h(domain.bracket(domain.basis(i), domain.basis(j)))
        rhs = codomain.bracket(h(domain.basis(i)), h(domain.basis(j)))
        if lhs != rhs:
            raise NotAHom(f"h([e_{i}, e_{j}]) != [h(e_{i}), h(e_{j})]", witness=(i, j))
    return h


def is_lie_hom(domain: LieAlgebra, codomain: LieAlgebra, mat) -> bool:
    try:
        lie_hom_check(domain, codomain, mat)
        return True
    except NotAHom:
        return False


@dataclass(frozen=True)
class LieExtension:
    A: LieAlgebra
    G: LieAlgebra
    B: LieAlgebra
    k: LieHom
    f: LieHom

    def k_preimage(self, g: Vector) -> Vector | None:
        """``k^-1(g)`` by exact solve, or None when g is outside image(k)."""
        if self.A.dim == 0:
            return () if is_zero(g) else None
        return solve(self.k.matrix, g)


def make_lie_extension(A, G, B, k, f) -> LieExtension:
    k = k if isinstance(k, LieHom) else lie_hom_check(A, G, k)
    f = f if isinstance(f, LieHom) else lie_hom_check(G, B, f)
    if A.dim and rank(k.matrix) != A.dim:
        raise NotExact("k is not injective")
    if B.dim and rank(f.matrix) != B.dim:
        raise NotExact("f is not surjective")
    for i in range(A.dim):
        if not is_zero(f(k(A.basis(i)))):
            raise NotExact("f ∘ k != 0", witness=i)
    if A.dim + B.dim != G.dim:
        raise NotExact("dim A + dim B != dim G, so image(k) != kernel(f)")
    return LieExtension(A, G, B, k, f)


@dataclass(frozen=True)
class LinearSection:
    ext: LieExtension
    matrix: Matrix  # G.dim x B.dim

    def __call__(self, b: Vector) -> Vector:
        if self.ext.B.dim == 0:
            return zeros(self.ext.G.dim)
        return mat_vec(self.matrix, b)

    def is_lie_hom(self) -> bool:
        return is_lie_hom(self.ext.B, self.ext.G, self.matrix)


def make_section(E: LieExtension, mat) -> LinearSection:
    M = matrix(mat)
    if not _shape_ok(M, E.G.dim, E.B.dim):
        raise NotASection(f"section matrix must be {E.G.dim}x{E.B.dim}")
    if E.B.dim and mat_mul(E.f.matrix, M) != identity(E.B.dim):
        raise NotASection("f ∘ s != identity")
    return LinearSection(E, M)


def complement_part(E: LieExtension, s: LinearSection, g: Vector) -> Vector:
    """``g - s(f(g))``, which always lies in image(k)."""
    return sub(g, s(E.f(g)))


def combine(coeffs, vectors, n: int) -> Vector:
    out = zeros(n)
    for c, v in zip(coeffs, vectors):
        out = add(out, scale(frac(c), v))
    return out


__all__ = [
    "AntisymmetryFailure",
    "LieAlgebra",
    "LieExtension",
    "LieHom",
    "LinearSection",
    "abelian_lie",
    "combine",
    "complement_part",
    "is_lie_hom",
    "lie_hom_check",
    "make_lie",
    "make_lie_extension",
    "make_section",
]
