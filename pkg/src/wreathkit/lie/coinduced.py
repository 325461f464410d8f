"""The coinduced Lie module ``Vect(U(B), A)`` and its universal property, truncated at d.

A B-module is a vector space with matrices ``rho_i`` for the basis of B such
that ``rho([b_i, b_j]) = rho_i rho_j - rho_j rho_i``.  The carrier of the
coinduced module is the space of tables on PBW monomials, acted on by
``(b.h)(m) = h(m b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ..errors import NotAModule, UniquenessFailure
from .algebra import LieAlgebra
from .enveloping import PBW, DualTable, Monomial, monomials, right_translate, table_from
from .linalg import Matrix, Vector, add, identity, mat_mul, mat_vec, matrix, rank, scale, sub, zeros


@dataclass(frozen=True)
class LieModule:
    B: LieAlgebra
    dim: int
    rho: tuple[Matrix, ...]

    def act_basis(self, i: int, v: Vector) -> Vector:
        return mat_vec(self.rho[i], v) if self.dim else ()

    def act(self, b: Vector, v: Vector) -> Vector:
        out = zeros(self.dim)
        for i, bi in enumerate(b):
            if bi:
                out = add(out, scale(bi, self.act_basis(i, v)))
        return out

    def act_monomial(self, m: Monomial, v: Vector) -> Vector:
        """``b_i1 (b_i2 (... (b_ir v)))``."""
        for i in reversed(m):
            v = self.act_basis(i, v)
        return v


def _mat_sub(P: Matrix, Q: Matrix) -> Matrix:
    return tuple(sub(p, q) for p, q in zip(P, Q))


def _mat_combo(B: LieAlgebra, rho: tuple[Matrix, ...], coeffs: Vector, n: int) -> Matrix:
    out = tuple(zeros(n) for _ in range(n))
    for c, R in zip(coeffs, rho):
        if c:
            out = tuple(add(o, scale(c, r)) for o, r in zip(out, R))
    return out


def make_lie_module(B: LieAlgebra, dim: int, rho) -> LieModule:
    rho = tuple(matrix(R) for R in rho)
    if len(rho) != B.dim or any(len(R) != dim or any(len(r) != dim for r in R) for R in rho):
        raise NotAModule(f"need {B.dim} matrices of size {dim}x{dim}")
    if dim:
        for i, j in product(range(B.dim), repeat=2):
            lhs = _mat_combo(B, rho, B.c[i][j], dim)
            rhs = _mat_sub(mat_mul(rho[i], rho[j]), mat_mul(rho[j], rho[i]))
            if lhs != rhs:
                raise NotAModule(f"rho([b_{i}, b_{j}]) != [rho(b_{i}), rho(b_{j})]", witness=(i, j))
    return LieModule(B, dim, rho)


def trivial_lie_module(B: LieAlgebra, dim: int) -> LieModule:
    zero = tuple(zeros(dim) for _ in range(dim))
    return make_lie_module(B, dim, [zero] * B.dim)


@dataclass
class Coinduced:
    """``Vect(U(B)_{<=d}, A)`` for a vector space A of dimension ``na``."""

    B: LieAlgebra
    na: int
    d: int

    def __post_init__(self):
        self.pbw = PBW(self.B)

    def act(self, b: Vector, h: DualTable) -> DualTable:
        return right_translate(self.pbw, b, h)

    def act_basis(self, i: int, h: DualTable) -> DualTable:
        return self.act(self.B.basis(i), h)


def lie_coinduced(B: LieAlgebra, na: int, d: int) -> Coinduced:
    return Coinduced(B, na, d)


def lie_unit(mod: LieModule, d: int, a) -> DualTable:
    """``m -> m . a`` on PBW monomials."""
    a = tuple(Fraction(x) for x in a)
    return table_from(mod.B.dim, mod.dim, d, lambda m: mod.act_monomial(m, a))


def lie_lift(mod: LieModule, gamma: Matrix, d: int, v) -> DualTable:
    """``u -> gamma(u . v)``; gamma is a linear map from the module to A."""
    v = tuple(Fraction(x) for x in v)
    na = len(gamma)
    return table_from(mod.B.dim, na, d, lambda m: mat_vec(gamma, mod.act_monomial(m, v)) if mod.dim else zeros(na))


@dataclass
class UnitReport:
    injective: bool
    equivariance_defects: list
    rank: int


def check_unit(mod: LieModule, d: int) -> UnitReport:
    """Unit is injective and equivariant, compared at degrees <= d-1."""
    C = lie_coinduced(mod.B, mod.dim, d)
    cols = [lie_unit(mod, d, a).coordinates() for a in identity(mod.dim)]
    r = rank(tuple(zip(*cols))) if cols else 0
    defects = []
    for i, a in product(range(mod.B.dim), identity(mod.dim)):
        lhs = lie_unit(mod, d - 1, mod.act_basis(i, a))
        rhs = C.act_basis(i, lie_unit(mod, d, a))
        if lhs != rhs:
            defects.append({"b": i, "a": [str(x) for x in a]})
    return UnitReport(r == mod.dim, defects, r)


@dataclass
class UniversalityReport:
    evaluation_ok: bool
    module_map_defects: list
    nullity: int
    forced_mismatches: list

    @property
    def ok(self) -> bool:
        return self.evaluation_ok and not self.module_map_defects and self.nullity == 0 and not self.forced_mismatches


def _forced_value(mod: LieModule, gamma: Matrix, v: Vector, m: Monomial) -> Vector:
    """The value any module map beta with ev(beta) = gamma must take at (v, m).

    ``beta(v)(m b) = (b . beta(v))(m) = beta(b v)(m)`` peels letters off the
    right until only the empty monomial is left, where beta is gamma.
    """
    while m:
        v = mod.act_basis(m[-1], v)
        m = m[:-1]
    return mat_vec(gamma, v)


def _homogeneous_nullity(mod: LieModule, na: int, d: int) -> int:
    """Dimension of the space of module maps beta with ev(beta) = 0, as a linear system.

    Unknowns are beta(e_j)(m)_c for module basis e_j, monomials m <= d and
    coordinates c of A.  A zero nullity certifies that the lift is unique.
    """
    B = mod.B
    pbw = PBW(B)
    mons = monomials(B.dim, d)
    pos = {(j, m, c): n for n, (j, m, c) in enumerate(product(range(mod.dim), mons, range(na)))}
    nvars = len(pos)
    rows: list[list[Fraction]] = []
    for j, c in product(range(mod.dim), range(na)):
        row = [Fraction(0)] * nvars
        row[pos[(j, (), c)]] = Fraction(1)
        rows.append(row)
    # beta(b_i e_j)(m) - beta(e_j)(m b_i) = 0 for deg m <= d-1
    for i, j in product(range(B.dim), range(mod.dim)):
        image = mod.act_basis(i, identity(mod.dim)[j])
        for m in monomials(B.dim, d - 1):
            prod_terms = pbw.times_letter(m, i, d).terms
            for c in range(na):
                row = [Fraction(0)] * nvars
                for jj, coef in enumerate(image):
                    if coef:
                        row[pos[(jj, m, c)]] += coef
                for mm, coef in prod_terms.items():
                    row[pos[(j, mm, c)]] -= coef
                rows.append(row)
    return nvars - rank(rows) if nvars else 0


def check_universality(mod: LieModule, gamma, d: int) -> UniversalityReport:
    gamma = matrix(gamma)
    na = len(gamma)
    C = lie_coinduced(mod.B, na, d)
    basis = identity(mod.dim)
    lifts = [lie_lift(mod, gamma, d, v) for v in basis]
    evaluation_ok = all(h(()) == tuple(col) for h, col in zip(lifts, zip(*gamma))) if mod.dim else True
    defects = []
    for i, j in product(range(mod.B.dim), range(mod.dim)):
        lhs = lie_lift(mod, gamma, d - 1, mod.act_basis(i, basis[j]))
        rhs = C.act_basis(i, lifts[j])
        if lhs != rhs:
            defects.append({"b": i, "v": j})
    mismatches = [
        {"v": j, "monomial": list(m)}
        for j, v in enumerate(basis)
        for m in monomials(mod.B.dim, d)
        if lifts[j](m) != _forced_value(mod, gamma, v, m)
    ]
    nullity = _homogeneous_nullity(mod, na, d)
    rep = UniversalityReport(evaluation_ok, defects, nullity, mismatches)
    return rep


def require_universality(mod: LieModule, gamma, d: int) -> UniversalityReport:
    rep = check_universality(mod, gamma, d)
    if not rep.ok:
        raise UniquenessFailure("coinduced universality failed", witness=rep.__dict__)
    return rep
