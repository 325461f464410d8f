"""Beck modules over a group B: left B-actions on abelian groups.

The coinduced module on ``Set(B, A)`` is acted on by right translation,
``(b.h)(x) = h(x b)``, which is the same action as on the kernel of ``A ≀ B``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAbelian, NotAHom, UniquenessFailure
from .extensions import SplitExtension, semidirect_from_action, validate_action
from .groups import HOM_BUDGET, FiniteGroup, GroupHom, hom_check, iter_homs
from .wreath import TABLE_BUDGET, translation_table, decode_function, encode_function, function_space


@dataclass(frozen=True)
class BeckModule:
    B: FiniteGroup
    M: FiniteGroup
    rho: tuple[tuple[int, ...], ...]

    def act(self, b: int, m: int) -> int:
        return self.rho[b][m]

    def as_split_extension(self) -> SplitExtension:
        return semidirect_from_action(self.B, self.M, self.rho)


@dataclass(frozen=True)
class BeckMorphism:
    source: BeckModule
    target: BeckModule
    map: GroupHom

    def __call__(self, m: int) -> int:
        return self.map(m)


def make_beck_module(B: FiniteGroup, M: FiniteGroup, rho) -> BeckModule:
    if not M.is_abelian():
        raise NotAbelian(f"{M.name} is not abelian")
    return BeckModule(B, M, validate_action(B, M, rho))


def trivial_module(B: FiniteGroup, M: FiniteGroup) -> BeckModule:
    return make_beck_module(B, M, [tuple(range(M.order))] * B.order)


def _equivariance_witness(src: BeckModule, tgt: BeckModule, mapping) -> tuple[int, int] | None:
    for b in range(src.B.order):
        for m in range(src.M.order):
            if mapping[src.rho[b][m]] != tgt.rho[b][mapping[m]]:
                return (b, m)
    return None


def check_beck_morphism(src: BeckModule, tgt: BeckModule, mapping) -> BeckMorphism:
    if src.B != tgt.B:
        raise NotAHom("Beck modules over different groups")
    h = mapping if isinstance(mapping, GroupHom) else hom_check(src.M, tgt.M, mapping)
    w = _equivariance_witness(src, tgt, h.map)
    if w is not None:
        raise NotAHom("map is not B-equivariant", witness=w)
    return BeckMorphism(src, tgt, h)


def coinduced(B: FiniteGroup, A: FiniteGroup, budget: int = TABLE_BUDGET) -> BeckModule:
    """``Set(B, A)`` with ``(b.h)(x) = h(x b)``."""
    if not A.is_abelian():
        raise NotAbelian(f"{A.name} is not abelian")
    F = function_space(B, A, budget)
    trans = translation_table(B, A)
    rho = [tuple(int(v) for v in trans[:, b]) for b in range(B.order)]
    return make_beck_module(B, F, rho)


def _evaluate_at_identity(na: int, nb: int, x: int) -> int:
    return decode_function(x, na, nb)[0]


def beck_unit(mod: BeckModule) -> BeckMorphism:
    """``m -> (x -> rho[x](m))`` into the coinduced module on the same carrier."""
    B, M = mod.B, mod.M
    target = coinduced(B, M)
    mapping = [encode_function((mod.rho[x][m] for x in range(B.order)), M.order) for m in range(M.order)]
    unit = check_beck_morphism(mod, target, mapping)
    if not unit.map.is_injective():
        raise UniquenessFailure("unit is not injective")
    return unit


def coinduced_on_map(B: FiniteGroup, mu: GroupHom) -> BeckMorphism:
    """The coinduced functor on a homomorphism of abelian groups: ``h -> mu ∘ h``."""
    src, tgt = coinduced(B, mu.domain), coinduced(B, mu.codomain)
    nb, na, nc = B.order, mu.domain.order, mu.codomain.order
    mapping = [encode_function((mu(v) for v in decode_function(x, na, nb)), nc) for x in range(src.M.order)]
    return check_beck_morphism(src, tgt, mapping)


def equivariant_maps(src: BeckModule, tgt: BeckModule, budget: int = HOM_BUDGET) -> list[GroupHom]:
    return [h for h in iter_homs(src.M, tgt.M, budget) if _equivariance_witness(src, tgt, h.map) is None]


@dataclass
class BeckUniversal:
    lift: BeckMorphism
    satisfiers: int
    equivariant_count: int


def beck_universal(
    mod: BeckModule,
    gamma: GroupHom,
    budget: int = HOM_BUDGET,
    candidates: list[GroupHom] | None = None,
) -> BeckUniversal:
    """Lift ``gamma: M -> A`` to ``m -> (x -> gamma(rho[x](m)))`` and certify uniqueness.

    Every equivariant map into the coinduced module is enumerated; exactly one
    of them may evaluate to gamma at the identity of B.  ``candidates`` lets a
    caller looping over many gammas with the same A enumerate those maps once.
    """
    A = gamma.codomain
    if gamma.domain != mod.M:
        raise NotAHom("gamma must start at the module's underlying group")
    B = mod.B
    target = coinduced(B, A)
    nb, na = B.order, A.order
    mapping = [encode_function((gamma(mod.rho[x][m]) for x in range(nb)), na) for m in range(mod.M.order)]
    lift = check_beck_morphism(mod, target, mapping)
    if tuple(_evaluate_at_identity(na, nb, y) for y in lift.map.map) != gamma.map:
        raise UniquenessFailure("evaluation at the identity does not recover gamma")
    if candidates is None:
        candidates = equivariant_maps(mod, target, budget)
    satisfiers = sum(
        1 for beta in candidates if tuple(_evaluate_at_identity(na, nb, y) for y in beta.map) == gamma.map
    )
    if satisfiers != 1:
        raise UniquenessFailure(f"{satisfiers} equivariant maps restrict to gamma, expected 1")
    return BeckUniversal(lift, satisfiers, len(candidates))


def beck_universal_all(mod: BeckModule, A: FiniteGroup, budget: int = HOM_BUDGET) -> list[BeckUniversal]:
    """beck_universal for every hom M -> A, sharing one enumeration of equivariant maps.

    Also checks the adjunction count: equivariant maps into the coinduced module
    are in bijection with homs M -> A.
    """
    gammas = list(iter_homs(mod.M, A, budget))
    candidates = equivariant_maps(mod, coinduced(mod.B, A), budget)
    if len(candidates) != len(gammas):
        raise UniquenessFailure(
            f"{len(candidates)} equivariant maps but {len(gammas)} homs M -> A", witness=(len(candidates), len(gammas))
        )
    return [beck_universal(mod, g, budget, candidates) for g in gammas]
