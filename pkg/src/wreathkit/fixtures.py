"""Built-in fixtures, so the suite and the CLI run without external files."""

from __future__ import annotations

from itertools import product

from .errors import NotAnAction
from .beck import BeckModule, make_beck_module
from .extensions import Extension, SplitExtension, automorphism_tables, extension_from_maps, semidirect_from_action
from .groups import FiniteGroup, cyclic, direct_product, group_from_elements


def z4_over_z2() -> Extension:
    """Z2 -> Z4 -> Z2 with k(x) = 2x and f = reduction mod 2."""
    Z2, Z4 = cyclic(2), cyclic(4)
    return extension_from_maps(Z2, Z4, Z2, [0, 2], [0, 1, 0, 1])


def klein() -> Extension:
    """Z2 -> Z2 x Z2 -> Z2 with k = (1, 0) and f the second projection; (m, n) has index 2m + n."""
    Z2 = cyclic(2)
    V = direct_product(Z2, Z2, "Z2xZ2")
    return extension_from_maps(Z2, V, Z2, [0, 2], [0, 1, 0, 1])


# beta(m, n) = (m + n, n) on Z2 x Z2, in the index convention above
KLEIN_SHEAR = (0, 3, 2, 1)


def s3() -> SplitExtension:
    """Z3 -> S3 -> Z2 as Z3 with Z2 acting by inversion."""
    return semidirect_from_action(cyclic(2), cyclic(3), [[0, 1, 2], [0, 2, 1]])


def d4_split() -> SplitExtension:
    """Z4 -> D4 -> Z2 as Z4 with Z2 acting by inversion."""
    return semidirect_from_action(cyclic(2), cyclic(4), [[0, 1, 2, 3], [0, 3, 2, 1]])


def d4_center() -> Extension:
    """The centre Z2 of D4 with quotient Z2 x Z2; it does not split."""
    G = d4_split().G
    V = direct_product(cyclic(2), cyclic(2), "Z2xZ2")
    # (a, b) has index 2a + b in D4; its image is (a mod 2, b)
    f = [2 * ((g // 2) % 2) + g % 2 for g in G]
    return extension_from_maps(cyclic(2), G, V, [0, 4], f)


def _quaternion_mul(x, y):
    # elements are (sign, unit) with unit in 1, i, j, k
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    s, u = table[(x[1], y[1])]
    return (x[0] * y[0] * s, u)


def q8() -> Extension:
    """Z2 = {1, -1} -> Q8 -> Z2 x Z2, which does not split."""
    units = ["1", "i", "j", "k"]
    elements = [(sign, u) for sign in (1, -1) for u in units]
    Q = group_from_elements(elements, _quaternion_mul, "Q8")
    V = direct_product(cyclic(2), cyclic(2), "Z2xZ2")
    image = {"1": 0, "i": 2, "j": 1, "k": 3}
    return extension_from_maps(cyclic(2), Q, V, [0, 4], [image[u] for _, u in elements])


def free_product_fixture() -> Extension:
    """G = B = Z2 with f the identity and trivial kernel."""
    Z2 = cyclic(2)
    return extension_from_maps(cyclic(1), Z2, Z2, [0], [0, 1])


def z3_inversion() -> BeckModule:
    return make_beck_module(cyclic(2), cyclic(3), [[0, 1, 2], [0, 2, 1]])


def extension_fixtures() -> dict[str, Extension]:
    return {
        "z4": z4_over_z2(),
        "klein": klein(),
        "s3": s3().ext,
        "d4": d4_split().ext,
        "d4_center": d4_center(),
        "q8": q8(),
        "free_z2": free_product_fixture(),
    }


def split_fixtures() -> dict[str, SplitExtension]:
    return {"s3": s3(), "d4": d4_split()}


def small_abelian_groups() -> list[FiniteGroup]:
    """Abelian groups of order 2 to 4."""
    Z2 = cyclic(2)
    return [Z2, cyclic(3), cyclic(4), direct_product(Z2, Z2, "Z2xZ2")]


def small_groups() -> list[FiniteGroup]:
    return small_abelian_groups()


def actions(B: FiniteGroup, M: FiniteGroup) -> list[tuple[tuple[int, ...], ...]]:
    """Every left action of B on M by automorphisms, found by assigning automorphisms to generators."""
    autos = automorphism_tables(M)
    gens = B.generators
    found = []
    for choice in product(autos, repeat=len(gens)):
        rho: list = [None] * B.order
        rho[0] = tuple(range(M.order))
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, a in zip(gens, choice):
                    y = B.mul(g, x)
                    val = tuple(a[rho[x][m]] for m in range(M.order))
                    if rho[y] is None:
                        rho[y] = val
                        nxt.append(y)
                    elif rho[y] != val:
                        ok = False
            frontier = nxt
        if ok:
            try:
                found.append(make_beck_module(B, M, rho).rho)
            except NotAnAction:
                continue
    return sorted(set(found))


def beck_fixtures(max_order: int = 4) -> list[BeckModule]:
    """All Beck modules with |M| <= max_order and |B| <= max_order over the small groups above."""
    out = []
    for B in small_groups():
        if B.order > max_order:
            continue
        for M in small_abelian_groups():
            if M.order > max_order:
                continue
            for rho in actions(B, M):
                out.append(BeckModule(B, M, rho))
    return out

