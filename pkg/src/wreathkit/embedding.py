"""The Kaluzhnin-Krasner embedding of an extension into the wreath product.

Given an extension ``A -k-> G -f-> B`` and a set-theoretic section ``s`` of f,
``g`` goes to ``(h_g, f(g))`` with ``h_g(b) = k^-1(s(b) g s(b f(g))^-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DiagramFailure, FactorizationFailure, UniquenessFailure, ValueOutsideKernel
from .extensions import (
    Extension,
    ExtMorphism,
    Section,
    SplitExtension,
    SplitExtMorphism,
    check_morphism,
)
from .groups import GroupHom, HOM_BUDGET, hom_check, iter_homs
from .wreath import (
    TABLE_BUDGET,
    WreathStructure,
    R_on_morphism,
    compose_split_morphisms,
    decode_function,
    encode_function,
    translate,
    wreath_product,
)


@dataclass
class EmbeddingReport:
    injective_A: bool
    injective_G: bool
    diagram_ok: bool
    equivariant: bool | None = None
    witnesses: list = field(default_factory=list)
    image_order: int = 0

    @property
    def ok(self) -> bool:
        flags = [self.injective_A, self.injective_G, self.diagram_ok]
        if self.equivariant is not None:
            flags.append(self.equivariant)
        return all(flags)

    def to_json(self) -> dict:
        out = {
            "injective_A": self.injective_A,
            "injective_G": self.injective_G,
            "diagram_ok": self.diagram_ok,
            "witnesses": self.witnesses,
            "image_order": self.image_order,
        }
        if self.equivariant is not None:
            out["equivariant"] = self.equivariant
        return out


def kk_function(E: Extension, s, g: int) -> tuple[int, ...]:
    """Values of ``h_g`` as A-indices, one per element of B."""
    G, B = E.G, E.B
    kinv = E.k_inverse()
    fg = E.f(g)
    vals = []
    for b in range(B.order):
        y = G.mul(G.mul(s(b), g), G.inv(s(B.mul(b, fg))))
        if y not in kinv:
            raise ValueOutsideKernel(f"h_{g}({b}) = {y} is not in image(k)", witness=(g, b))
        vals.append(kinv[y])
    return tuple(vals)


def kk_embed(E: Extension, s: Section, W: WreathStructure | None = None, budget: int = TABLE_BUDGET) -> ExtMorphism:
    """The embedding ``E -> W(A)`` induced by the section ``s`` (sigma forgotten)."""
    if W is None:
        W = wreath_product(E.A, E.B, budget)
    na, nb = E.A.order, E.B.order
    phi_G = tuple(encode_function(kk_function(E, s, g), na) * nb + E.f(g) for g in range(E.G.order))
    # phi_A is induced on kernels: kappa(phi_A(a)) = phi_G(k(a))
    phi_A = tuple(phi_G[E.k(a)] // nb for a in range(na))
    return check_morphism(
        E,
        W.ext,
        GroupHom(E.A, W.F, phi_A),
        hom_check(E.G, W.W, phi_G),
    )


def eta_split(S: SplitExtension, W: WreathStructure | None = None, budget: int = TABLE_BUDGET) -> SplitExtMorphism:
    """The unit ``S -> R(A)``: the embedding built from the homomorphic section."""
    if W is None:
        W = wreath_product(S.A, S.B, budget)
    m = kk_embed(S.ext, S.section(), W)
    return check_morphism(S, W.split, m.phi_A, m.phi_G, split=True)


def verify_embedding(m: ExtMorphism | SplitExtMorphism, wreath: WreathStructure | None = None) -> EmbeddingReport:
    """Check injectivity, both squares, and (split source) equivariance.

    Failures are collected as witnesses rather than raised. When ``wreath`` is
    the target, the B-action on its kernel is computed as ``translate``;
    otherwise by conjugation with the target's section.
    """
    witnesses = []
    inj_A = m.phi_A.is_injective()
    inj_G = m.phi_G.is_injective()
    if not inj_A:
        witnesses.append({"check": "injective_A"})
    if not inj_G:
        witnesses.append({"check": "injective_G"})
    split = isinstance(m, SplitExtMorphism)
    try:
        check_morphism(m.source, m.target, m.phi_A, m.phi_G, split=split)
        diagram_ok = True
    except DiagramFailure as exc:
        diagram_ok = False
        witnesses.append({"check": "diagram", "detail": str(exc), "witness": exc.witness})
    equivariant = None
    if split:
        equivariant = True
        S, T = m.source, m.target
        B = S.B
        for a in range(S.A.order):
            for b in range(B.order):
                if wreath is not None:
                    h = wreath.function(decode_function(m.phi_A(a), wreath.A.order, B.order))
                    lhs = wreath.function_index(translate(h, b))
                else:
                    lhs = T.conjugation_action(m.phi_A(a), b)
                rhs = m.phi_A(S.conjugation_action(a, b))
                if lhs != rhs:
                    equivariant = False
                    witnesses.append({"check": "equivariance", "a": a, "b": b})
    image_order = len(set(m.phi_G.map))
    return EmbeddingReport(inj_A, inj_G, diagram_ok, equivariant, witnesses, image_order)


def universal_factorization(
    S: SplitExtension,
    alpha: SplitExtMorphism,
    W_C: WreathStructure,
    W_A: WreathStructure | None = None,
    budget: int = HOM_BUDGET,
):
    """Recover ``alpha_bar: A -> C`` with ``R(alpha_bar) ∘ eta_S = alpha``.

    ``alpha_bar(a)`` is the kernel component of alpha evaluated at the identity
    of B. Returns ``(alpha_bar, satisfier_count)``; the count comes from testing
    every homomorphism A -> C and must be exactly 1.
    """
    if W_A is None:
        W_A = wreath_product(S.A, S.B)
    if alpha.target.ext.G != W_C.W:
        raise FactorizationFailure("alpha does not land in the given wreath product")
    C = W_C.A
    nb = S.B.order
    bar = tuple(W_C.element(alpha.phi_A(a) * nb).h(0) for a in range(S.A.order))
    alpha_bar = hom_check(S.A, C, bar)
    eta = eta_split(S, W_A)
    if compose_split_morphisms(R_on_morphism(W_A, W_C, alpha_bar), eta).phi_G != alpha.phi_G:
        raise FactorizationFailure("R(alpha_bar) ∘ eta_S != alpha")
    count = 0
    for gamma in iter_homs(S.A, C, budget):
        composite = compose_split_morphisms(R_on_morphism(W_A, W_C, gamma), eta)
        if composite.phi_G == alpha.phi_G and composite.phi_A == alpha.phi_A:
            count += 1
    if count != 1:
        raise UniquenessFailure(f"{count} homomorphisms factor alpha, expected exactly 1")
    return alpha_bar, count
