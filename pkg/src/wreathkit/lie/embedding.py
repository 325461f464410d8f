"""The Lie version of the wreath embedding, truncated at a degree d.

For an extension ``A -k-> G -f-> B`` with a linear section s, ``h'_a`` sends a
PBW monomial ``b_1...b_r`` to ``k^-1[s b_1, [..., [s b_r, k a]...]]`` and g goes
to ``(h'_{g - s f g}, f g)`` in ``Vect(U(B), A) x B``.

The bracket on that space is pinned to
``[(h1, b1), (h2, b2)] = (conv(h1, h2) + b1.h2 - b2.h1, [b1, b2])`` with
``(b.h)(m) = h(m b)``.  The homomorphism law is asserted when s is itself a
Lie homomorphism; for other sections it is only reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DegreeOverflow, ValueOutsideKernel
from ..report import Check, FAIL, INFO, PASS
from .algebra import LieExtension, LinearSection, complement_part
from .enveloping import PBW, DualTable, Monomial, coproduct_split, monomials, right_translate, table_from
from .linalg import Vector, add, fmt_vec, rank, scale, transpose, zeros


def _iterated_brackets(E: LieExtension, s: LinearSection, a: Vector, d: int) -> dict[Monomial, Vector]:
    """``[s b_i1, [..., [s b_ir, k a]]]`` in G for every monomial of degree <= d."""
    G = E.G
    sb = [s(E.B.basis(i)) for i in range(E.B.dim)]
    out: dict[Monomial, Vector] = {(): E.k(a)}
    for m in monomials(E.B.dim, d):
        if m:
            out[m] = G.bracket(sb[m[0]], out[m[1:]])
    return out


def h_prime(E: LieExtension, s: LinearSection, a, d: int) -> DualTable:
    a = tuple(Fraction(x) for x in a)
    values = {}
    for m, g in _iterated_brackets(E, s, a, d).items():
        pre = E.k_preimage(g)
        if pre is None:
            raise ValueOutsideKernel(f"iterated bracket at {m} is outside image(k)", witness=list(m))
        values[m] = pre
    return DualTable(E.B.dim, E.A.dim, d, values)


@dataclass(frozen=True)
class LieWreathElement:
    h: DualTable
    b: Vector

    def __add__(self, other: "LieWreathElement") -> "LieWreathElement":
        return LieWreathElement(self.h + other.h, add(self.b, other.b))

    def scaled(self, c) -> "LieWreathElement":
        return LieWreathElement(self.h.scaled(c), scale(c, self.b))

    def truncate(self, d: int) -> "LieWreathElement":
        return LieWreathElement(self.h.truncate(d), self.b)

    def coordinates(self) -> Vector:
        return self.h.coordinates() + tuple(self.b)

    def to_json(self) -> dict:
        return {"h": self.h.to_json(), "b": fmt_vec(self.b)}


def lie_kk_embed(E: LieExtension, s: LinearSection, g, d: int) -> LieWreathElement:
    g = tuple(Fraction(x) for x in g)
    a = E.k_preimage(complement_part(E, s, g))
    if a is None:
        raise ValueOutsideKernel("g - s f g is outside image(k)", witness=fmt_vec(g))
    return LieWreathElement(h_prime(E, s, a, d), E.f(g))


def convolution(E: LieExtension, h1: DualTable, h2: DualTable, d: int) -> DualTable:
    A = E.A

    def value(m: Monomial) -> Vector:
        out = zeros(A.dim)
        for (left, right), mult in coproduct_split(m).items():
            out = add(out, scale(mult, A.bracket(h1(left), h2(right))))
        return out

    return table_from(E.B.dim, A.dim, d, value)


def wreath_bracket(
    E: LieExtension,
    u: LieWreathElement,
    v: LieWreathElement,
    pbw: PBW | None = None,
    side: str = "right",
    sign: int = 1,
) -> LieWreathElement:
    """The pinned bracket; the result is defined one degree below the inputs.

    ``side`` and ``sign`` exist for the convention probe; the defaults are the pinned choice.
    """
    if u.h.d != v.h.d:
        raise DegreeOverflow("brackets need both tables at the same degree bound")
    pbw = pbw or PBW(E.B)
    d = u.h.d - 1
    conv = convolution(E, u.h.truncate(d), v.h.truncate(d), d)
    act = right_translate(pbw, u.b, v.h, side) + right_translate(pbw, v.b, u.h, side).scaled(-1)
    return LieWreathElement(conv + act.scaled(sign), E.B.bracket(u.b, v.b))


def _law_defects(E, s, d, pbw, side="right", sign=1) -> list[dict]:
    """Basis pairs and monomials where ``[phi g, phi g'] != phi [g, g']`` (checked at degree <= d-1)."""
    G = E.G
    phis = [lie_kk_embed(E, s, G.basis(i), d) for i in range(G.dim)]
    defects = []
    for i in range(G.dim):
        for j in range(i + 1, G.dim):
            lhs = wreath_bracket(E, phis[i], phis[j], pbw, side, sign)
            rhs = lie_kk_embed(E, s, G.bracket(G.basis(i), G.basis(j)), d - 1)
            if lhs.b != rhs.b:
                defects.append({"pair": [i, j], "monomial": "b-part", "got": fmt_vec(lhs.b), "want": fmt_vec(rhs.b)})
            for m in monomials(E.B.dim, d - 1):
                if lhs.h(m) != rhs.h(m):
                    defects.append(
                        {"pair": [i, j], "monomial": list(m), "got": fmt_vec(lhs.h(m)), "want": fmt_vec(rhs.h(m))}
                    )
    return defects


def _random_rationals(rng: random.Random, n: int) -> Vector:
    return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n))


@dataclass
class LieEmbeddingReport:
    checks: list[Check]
    split_tier: bool
    d: int

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def status(self, id: str) -> str:
        return next(c.status for c in self.checks if c.id == id)

    def check(self, id: str) -> Check:
        return next(c for c in self.checks if c.id == id)


def verify_lie_embedding(E: LieExtension, s: LinearSection, d: int, seed: int = 0, samples: int = 8) -> LieEmbeddingReport:
    if d < 1:
        raise DegreeOverflow("the homomorphism law needs d >= 1")
    G, A, B = E.G, E.A, E.B
    pbw = PBW(B)
    checks = []

    def add_check(id, anchor, ok, witnesses=()):
        status = INFO if ok is None else (PASS if ok else FAIL)
        checks.append(Check(id, anchor, status, list(witnesses)))

    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        x, y = _random_rationals(rng, G.dim), _random_rationals(rng, G.dim)
        alpha, beta = _random_rationals(rng, 2)
        lhs = lie_kk_embed(E, s, add(scale(alpha, x), scale(beta, y)), d)
        rhs = lie_kk_embed(E, s, x, d).scaled(alpha) + lie_kk_embed(E, s, y, d).scaled(beta)
        if lhs != rhs:
            bad.append({"x": fmt_vec(x), "y": fmt_vec(y), "alpha": str(alpha), "beta": str(beta)})
    add_check("lie.linearity", "the embedding is linear", not bad, bad[:3])

    cols = [lie_kk_embed(E, s, G.basis(i), d).coordinates() for i in range(G.dim)]
    r = rank(transpose(cols)) if cols else 0
    add_check("lie.injectivity", "the embedding is injective (rank of the assembled map)", r == G.dim, [] if r == G.dim else [r])

    bad = [i for i in range(G.dim) if lie_kk_embed(E, s, G.basis(i), d).b != E.f(G.basis(i))]
    add_check("lie.pi_compat", "projection to B after the embedding equals f", not bad, bad)

    bad = []
    for i in range(A.dim):
        a = A.basis(i)
        got = lie_kk_embed(E, s, E.k(a), d)
        if got.h != h_prime(E, s, a, d) or any(got.b):
            bad.append(i)
    add_check("lie.kernel_restriction", "on the kernel the embedding is a -> (h'_a, 0)", not bad, bad)

    split = s.is_lie_hom()
    defects = _law_defects(E, s, d, pbw)
    anchor = "bracket law [phi g, phi g'] = phi [g, g'] at degrees <= d-1"
    if split:
        add_check("lie.hom_law", anchor, not defects, defects[:6])
    else:
        checks.append(
            Check("lie.hom_law", anchor, INFO, defects[:6], "section is not a Lie homomorphism; outcome not asserted")
        )
    return LieEmbeddingReport(checks, split, d)


def convention_probe(E: LieExtension, s: LinearSection, d: int) -> dict[str, int]:
    """Number of law defects for each side/sign variant of the translation term."""
    pbw = PBW(E.B)
    return {
        f"{side}{'+' if sign > 0 else '-'}": len(_law_defects(E, s, d, pbw, side, sign))
        for side in ("right", "left")
        for sign in (1, -1)
    }


def embedding_matrix(E: LieExtension, s: LinearSection, d: int) -> list[Vector]:
    """Columns of the linear map G -> Vect(U(B)_{<=d}, A) x B on the basis of G."""
    return [lie_kk_embed(E, s, E.G.basis(i), d).coordinates() for i in range(E.G.dim)]


__all__ = [
    "LieEmbeddingReport",
    "LieWreathElement",
    "convention_probe",
    "convolution",
    "embedding_matrix",
    "h_prime",
    "lie_kk_embed",
    "verify_lie_embedding",
    "wreath_bracket",
]
