"""Small Lie extensions used by tests, the suite and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LieExtension, LinearSection, abelian_lie, make_lie, make_lie_extension, make_section
from .coinduced import LieModule, make_lie_module, trivial_lie_module


@dataclass(frozen=True)
class LieFixture:
    name: str
    ext: LieExtension
    section: LinearSection


def _fixture(name, A, G, B, k, f, s) -> LieFixture:
    E = make_lie_extension(A, G, B, k, f)
    return LieFixture(name, E, make_section(E, s))


def heisenberg() -> LieFixture:
    """x, y, z with [x, y] = z; kernel span z, quotient K^2; s picks x and y (not a Lie hom)."""
    G = make_lie(3, [(0, 1, [0, 0, 1])], "h3")
    return _fixture(
        "h3",
        abelian_lie(1, "span z"),
        G,
        abelian_lie(2, "K^2"),
        [[0], [0], [1]],
        [[1, 0, 0], [0, 1, 0]],
        [[1, 0], [0, 1], [0, 0]],
    )


def affine_line() -> LieFixture:
    """b, a with [b, a] = a."""
    G = make_lie(2, [(0, 1, [0, 1])], "aff(1)")
    return _fixture("aff1", abelian_lie(1, "span a"), G, abelian_lie(1, "span b"), [[0], [1]], [[1, 0]], [[1], [0]])


def solvable_base() -> LieFixture:
    """b1, b2, a with [b1, b2] = b2 and [b1, a] = a; the quotient is itself nonabelian."""
    G = make_lie(3, [(0, 1, [0, 1, 0]), (0, 2, [0, 0, 1])], "G3")
    B = make_lie(2, [(0, 1, [0, 1])], "B2")
    return _fixture(
        "solvable",
        abelian_lie(1, "span a"),
        G,
        B,
        [[0], [0], [1]],
        [[1, 0, 0], [0, 1, 0]],
        [[1, 0], [0, 1], [0, 0]],
    )


def nonabelian_kernel() -> LieFixture:
    """d acting on h3 = span{x, y, z} by the grading derivation (1, 1, 2)."""
    G = make_lie(
        4,
        [(0, 1, [0, 1, 0, 0]), (0, 2, [0, 0, 1, 0]), (0, 3, [0, 0, 0, 2]), (1, 2, [0, 0, 0, 1])],
        "d+h3",
    )
    A = make_lie(3, [(0, 1, [0, 0, 1])], "h3")
    k = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]
    return _fixture("nonabelian_kernel", A, G, abelian_lie(1, "span d"), k, [[1, 0, 0, 0]], [[1], [0], [0], [0]])


def abelian_plane() -> LieFixture:
    return _fixture("abelian", abelian_lie(1), abelian_lie(2), abelian_lie(1), [[1], [0]], [[0, 1]], [[0], [1]])


def lie_fixtures() -> dict[str, LieFixture]:
    return {fx.name: fx for fx in (heisenberg(), affine_line(), solvable_base(), nonabelian_kernel(), abelian_plane())}


def scalar_module() -> LieModule:
    """K over a one-dimensional B with b acting as 1."""
    return make_lie_module(abelian_lie(1), 1, [[[1]]])


def heisenberg_beck_module() -> LieModule:
    """span z with the trivial K^2 action."""
    return trivial_lie_module(abelian_lie(2, "K^2"), 1)


def adjoint_module(B) -> LieModule:
    """B acting on itself by ad."""
    rho = [[[B.c[i][j][r] for j in range(B.dim)] for r in range(B.dim)] for i in range(B.dim)]
    return make_lie_module(B, B.dim, rho)
