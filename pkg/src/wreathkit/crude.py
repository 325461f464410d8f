"""The crude embedding of an extension into ``KL(E) ≀ B`` and the map chi down to A.

``KL(E)`` is infinite, so its elements are presentation words in normal form;
a crude element is a table ``B -> KL(E)`` together with an element of B, and it
multiplies by the same rule as the finite wreath product.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import kk_embed
from .errors import MismatchWithClassical, ValueOutsideKernel, WellDefinednessFailure
from .extensions import Extension, Section
from .free_product import PresWord, lambda_unit, pres_mul, pres_normal_form
from .wreath import WreathStructure, wreath_product


@dataclass(frozen=True)
class CrudeElement:
    table: tuple[PresWord, ...]
    b: int

    def to_json(self) -> dict:
        return {"table": [str(p) for p in self.table], "b": self.b}


def crude_identity(E: Extension) -> CrudeElement:
    return CrudeElement(tuple(PresWord((), E) for _ in range(E.B.order)), 0)


def crude_mul(E: Extension, x: CrudeElement, y: CrudeElement) -> CrudeElement:
    B = E.B
    table = tuple(pres_mul(x.table[b], y.table[B.mul(b, x.b)]) for b in range(B.order))
    return CrudeElement(table, B.mul(x.b, y.b))


def upsilon(E: Extension) -> list[CrudeElement]:
    """``g -> (b -> (g, b), f(g))`` for every g, in index order."""
    return [
        CrudeElement(
            tuple(pres_normal_form(PresWord(((g, b),), E)) for b in range(E.B.order)),
            E.f(g),
        )
        for g in range(E.G.order)
    ]


class Chi:
    """``(g, b) -> k^-1(s(b) g s(b f(g))^-1)``, extended multiplicatively to words."""

    def __init__(self, E: Extension, s: Section):
        self.E = E
        self.s = s
        self._kinv = E.k_inverse()

    def generator(self, g: int, b: int) -> int:
        E, G, s = self.E, self.E.G, self.s
        y = G.mul(G.mul(s(b), g), G.inv(s(E.B.mul(b, E.f(g)))))
        if y not in self._kinv:
            raise ValueOutsideKernel(f"chi({g},{b}) = {y} is not in image(k)", witness=(g, b))
        return self._kinv[y]

    def __call__(self, p: PresWord) -> int:
        A = self.E.A
        acc = 0
        for g, b in p.gens:
            acc = A.mul(acc, self.generator(g, b))
        return acc

    def certify(self) -> int:
        """Check both relations on every instance; returns the number checked."""
        E, A, B, G = self.E, self.E.A, self.E.B, self.E.G
        checked = 0
        for b in range(B.order):
            if self.generator(0, b) != 0:
                raise WellDefinednessFailure("chi(1, b) != 1", witness=(0, b))
            for g in range(G.order):
                bf = B.mul(b, E.f(g))
                lhs_first = self.generator(g, b)
                for g2 in range(G.order):
                    lhs = A.mul(lhs_first, self.generator(g2, bf))
                    if lhs != self.generator(G.mul(g, g2), b):
                        raise WellDefinednessFailure(
                            "chi(g,b) chi(g',b f(g)) != chi(g g', b)", witness=(g, g2, b)
                        )
                    checked += 1
        return checked


def chi(E: Extension, s: Section) -> Chi:
    return Chi(E, s)


@dataclass
class RecoveryCertificate:
    relation_instances: int
    mismatches: list
    composite: list


def compose_recover(E: Extension, s: Section, W: WreathStructure | None = None) -> RecoveryCertificate:
    """Post-compose the crude embedding with chi and compare with the classical embedding."""
    if W is None:
        W = wreath_product(E.A, E.B)
    c = chi(E, s)
    instances = c.certify()
    classical = kk_embed(E, s, W)
    composite = []
    mismatches = []
    for g, x in enumerate(upsilon(E)):
        values = tuple(c(p) for p in x.table)
        idx = W.function_index(W.function(values)) * E.B.order + x.b
        composite.append(idx)
        if idx != classical.phi_G(g):
            mismatches.append(g)
    if mismatches:
        raise MismatchWithClassical("W(chi) ∘ upsilon differs from the classical embedding", witness=mismatches)
    return RecoveryCertificate(instances, mismatches, composite)


def chi_on_unit(E: Extension, s: Section) -> list[int]:
    """chi applied to the kernel component of the unit ``E -> P L(E)``."""
    c = chi(E, s)
    return [c(p) for p in lambda_unit(E).on_A]
