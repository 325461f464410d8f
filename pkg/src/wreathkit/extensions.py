"""Extensions ``0 -> A -> G -> B -> 0``, their sections, and morphisms over a fixed B."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DiagramFailure, MismatchedBase, NotAnAction, NotExact, NotASection
from .groups import FiniteGroup, GroupHom, NotAHom, hom_check, iter_homs


@dataclass(frozen=True)
class Extension:
    A: FiniteGroup
    G: FiniteGroup
    B: FiniteGroup
    k: GroupHom
    f: GroupHom

    def k_inverse(self) -> dict[int, int]:
        return self.k.inverse_table()

    def fibers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.B.order)]
        for g, b in enumerate(self.f.map):
            out[b].append(g)
        return out


@dataclass(frozen=True)
class Section:
    parent: Extension
    map: tuple[int, ...]

    def __call__(self, b: int) -> int:
        return self.map[b]


@dataclass(frozen=True)
class SplitExtension:
    ext: Extension
    s: GroupHom

    # convenience passthroughs
    @property
    def A(self):
        return self.ext.A

    @property
    def G(self):
        return self.ext.G

    @property
    def B(self):
        return self.ext.B

    @property
    def k(self):
        return self.ext.k

    @property
    def f(self):
        return self.ext.f

    def section(self) -> Section:
        return Section(self.ext, self.s.map)

    def conjugation_action(self, a: int, b: int) -> int:
        """``a^b = k^-1(s(b) k(a) s(b)^-1)``."""
        G = self.G
        sb = self.s(b)
        y = G.mul(G.mul(sb, self.k(a)), G.inv(sb))
        return self.ext.k_inverse()[y]


@dataclass(frozen=True)
class ExtMorphism:
    source: Extension
    target: Extension
    phi_A: GroupHom
    phi_G: GroupHom

    @property
    def is_mono(self) -> bool:
        return self.phi_A.is_injective() and self.phi_G.is_injective()


@dataclass(frozen=True)
class SplitExtMorphism:
    source: SplitExtension
    target: SplitExtension
    phi_A: GroupHom
    phi_G: GroupHom

    @property
    def is_mono(self) -> bool:
        return self.phi_A.is_injective() and self.phi_G.is_injective()

    def forget(self) -> ExtMorphism:
        return ExtMorphism(self.source.ext, self.target.ext, self.phi_A, self.phi_G)


def make_extension(A, G, B, k: GroupHom, f: GroupHom) -> Extension:
    if k.domain != A or k.codomain != G or f.domain != G or f.codomain != B:
        raise NotExact("k must map A -> G and f must map G -> B")
    if not k.is_injective():
        seen: dict[int, int] = {}
        for a, g in enumerate(k.map):
            if g in seen:
                raise NotExact("k is not injective", witness=(seen[g], a))
            seen[g] = a
    if not f.is_surjective():
        missing = sorted(set(range(B.order)) - set(f.map))[0]
        raise NotExact("f is not surjective", witness=missing)
    image_k = set(k.map)
    kernel_f = {g for g, b in enumerate(f.map) if b == 0}
    if image_k != kernel_f:
        raise NotExact("image(k) != kernel(f)", witness=sorted(image_k ^ kernel_f)[0])
    return Extension(A, G, B, k, f)


def extension_from_maps(A, G, B, k, f) -> Extension:
    return make_extension(A, G, B, hom_check(A, G, k), hom_check(G, B, f))


def sections(E: Extension) -> list[Section]:
    """Every set-theoretic section, lexicographic over the fibers of f."""
    return [Section(E, tuple(choice)) for choice in product(*E.fibers())]


def make_section(E: Extension, mapping) -> Section:
    mapping = tuple(int(x) for x in mapping)
    if len(mapping) != E.B.order:
        raise NotASection(f"section needs {E.B.order} values")
    for b, g in enumerate(mapping):
        if not 0 <= g < E.G.order or E.f(g) != b:
            raise NotASection(f"f(s({b})) != {b}", witness=b)
    return Section(E, mapping)


def is_split(E: Extension) -> GroupHom | None:
    for sec in sections(E):
        try:
            return hom_check(E.B, E.G, sec.map)
        except NotAHom:
            continue
    return None


def make_split_extension(E: Extension, s) -> SplitExtension:
    if not isinstance(s, GroupHom):
        s = hom_check(E.B, E.G, s)
    make_section(E, s.map)
    return SplitExtension(E, s)


def check_morphism(source, target, phi_A: GroupHom, phi_G: GroupHom, split: bool = False):
    """Validate the squares of a morphism of (split) extensions over a common B.

    With ``split=True`` both ends must be :class:`SplitExtension` and the
    sections must be respected as well.
    """
    src = source.ext if isinstance(source, SplitExtension) else source
    tgt = target.ext if isinstance(target, SplitExtension) else target
    if src.B != tgt.B:
        raise MismatchedBase("extensions are over different B")
    if phi_A.domain != src.A or phi_A.codomain != tgt.A or phi_G.domain != src.G or phi_G.codomain != tgt.G:
        raise DiagramFailure("component maps have the wrong domain or codomain")
    for a in range(src.A.order):
        if phi_G(src.k(a)) != tgt.k(phi_A(a)):
            raise DiagramFailure("left square fails: phi_G k != l phi_A", witness=("A", a))
    for g in range(src.G.order):
        if tgt.f(phi_G(g)) != src.f(g):
            raise DiagramFailure("right square fails: g phi_G != f", witness=("G", g))
    if not split:
        return ExtMorphism(src, tgt, phi_A, phi_G)
    if not (isinstance(source, SplitExtension) and isinstance(target, SplitExtension)):
        raise DiagramFailure("split morphism needs split extensions at both ends")
    for b in range(src.B.order):
        if phi_G(source.s(b)) != target.s(b):
            raise DiagramFailure("section square fails: phi_G s != t", witness=("B", b))
    return SplitExtMorphism(source, target, phi_A, phi_G)


def automorphism_tables(M: FiniteGroup) -> list[tuple[int, ...]]:
    return [h.map for h in iter_homs(M, M, image_orders="equal") if h.is_injective()]


def validate_action(B: FiniteGroup, A: FiniteGroup, rho) -> tuple[tuple[int, ...], ...]:
    """Check that ``rho[b]`` (a permutation of A per b) is a left action by automorphisms:
    ``rho[b1 b2] = rho[b1] ∘ rho[b2]``."""
    rho = tuple(tuple(int(x) for x in r) for r in rho)
    if len(rho) != B.order:
        raise NotAnAction(f"need one automorphism per element of {B.name}")
    for b, r in enumerate(rho):
        if len(r) != A.order or sorted(r) != list(range(A.order)):
            raise NotAnAction(f"rho[{b}] is not a permutation of {A.name}", witness=b)
        try:
            hom_check(A, A, r)
        except NotAHom as exc:
            raise NotAnAction(f"rho[{b}] is not an endomorphism", witness=b) from exc
    if rho[0] != tuple(range(A.order)):
        raise NotAnAction("rho[identity] must be the identity")
    for b1 in B:
        for b2 in B:
            lhs = rho[B.mul(b1, b2)]
            rhs = tuple(rho[b1][rho[b2][a]] for a in A)
            if lhs != rhs:
                raise NotAnAction("rho[b1 b2] != rho[b1] o rho[b2]", witness=(b1, b2))
    return rho


def semidirect_from_action(B: FiniteGroup, A: FiniteGroup, rho) -> SplitExtension:
    """The split extension on A x B with ``(a,b)(a',b') = (a * rho(b)(a'), b b')``.

    The pair (a, b) has index ``a*|B| + b``; k(a) = (a, 1), f(a, b) = b and
    s(b) = (1, b).
    """
    rho = validate_action(B, A, rho)
    nb = B.order
    tab = [
        [A.mul(a1, rho[b1][a2]) * nb + B.mul(b1, b2) for a2 in A for b2 in B]
        for a1 in A
        for b1 in B
    ]
    G = FiniteGroup(tab, name=f"{A.name}:{B.name}")
    E = extension_from_maps(A, G, B, [a * nb for a in A], [x % nb for x in G])
    return make_split_extension(E, tuple(range(nb)))
