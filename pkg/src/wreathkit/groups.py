"""Finite groups as multiplication tables, homomorphisms, and brute-force search.

Elements of a group of order ``n`` are the integers ``0..n-1`` and element 0 is
always the identity. ``table[x][y]`` is the index of the product ``x*y``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceeded, EmptySpec, NotAGroup, NotAHom

HOM_BUDGET = 10**6


class FiniteGroup:
    """A validated finite group given by its multiplication table.

    ``labels`` optionally names each element (permutation tuples for groups
    generated from permutations); they play no role in the arithmetic.
    """

    __slots__ = ("name", "order", "table", "labels", "_inv", "_arr", "_gens", "_orders")

    def __init__(self, table, name: str = "G", labels=None, check: bool = True):
        arr = np.asarray(table, dtype=np.int64)
        if check:
            _validate_table(arr)
        arr.setflags(write=False)
        self._arr = arr
        self.name = name
        self.order = int(arr.shape[0])
        self.table = tuple(tuple(row) for row in arr.tolist())
        self.labels = tuple(labels) if labels is not None else None
        inv = [0] * self.order
        for x, row in enumerate(self.table):
            inv[x] = row.index(0)
        self._inv = tuple(inv)
        self._gens = None
        self._orders = None

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    @property
    def array(self) -> np.ndarray:
        return self._arr

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self._inv[x]

    def prod(self, xs: Iterable[int]) -> int:
        acc = 0
        for x in xs:
            acc = self.table[acc][x]
        return acc

    def element_order(self, x: int) -> int:
        if self._orders is None:
            orders = []
            for y in range(self.order):
                n, z = 1, y
                while z != 0:
                    z = self.table[z][y]
                    n += 1
                orders.append(n)
            self._orders = tuple(orders)
        return self._orders[x]

    def is_abelian(self) -> bool:
        return bool((self._arr == self._arr.T).all())

    @property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by element order."""
        if self._gens is None:
            self._gens = tuple(greedy_generators(self.table, self.order))
        return self._gens

    def closure(self, gens: Sequence[int]) -> list[int]:
        return _right_closure(self.table, gens)


def _right_closure(table, gens) -> list[int]:
    # BFS from the identity under right multiplication; in a finite group this
    # is the subgroup generated by gens.
    seen = {0}
    order = [0]
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = table[x][g]
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def greedy_generators(table, n: int) -> list[int]:
    def elt_order(x):
        k, z = 1, x
        while z != 0:
            z = table[z][x]
            k += 1
            if k > n:
                return 0
        return k

    ranked = sorted(range(1, n), key=lambda x: (-elt_order(x), x))
    gens: list[int] = []
    covered = {0}
    for x in ranked:
        if len(covered) == n:
            break
        if x not in covered:
            gens.append(x)
            covered = set(_right_closure(table, gens))
    return gens


def _validate_table(arr: np.ndarray) -> None:
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotAGroup("table must be square")
    n = arr.shape[0]
    if n == 0:
        raise EmptySpec("empty table")
    if arr.min() < 0 or arr.max() >= n:
        raise NotAGroup("table entries out of range")
    ident = np.arange(n)
    if not (arr[0] == ident).all() or not (arr[:, 0] == ident).all():
        bad = int(np.flatnonzero((arr[0] != ident) | (arr[:, 0] != ident))[0])
        raise NotAGroup("element 0 is not a two-sided identity", witness=(0, bad))
    for axis, what in ((1, "row"), (0, "column")):
        srt = np.sort(arr, axis=axis)
        ok = (srt == ident[None, :]).all(axis=1) if axis == 1 else (srt == ident[:, None]).all(axis=0)
        if not ok.all():
            raise NotAGroup(f"{what} {int(np.flatnonzero(~ok)[0])} is not a permutation")
    # Light's associativity test: (xy)g == x(yg) for g in a generating set
    # implies associativity for every triple.
    table = arr.tolist()
    for g in greedy_generators(table, n):
        lhs = arr[arr, g]          # (x*y)*g
        rhs = arr[:, arr[:, g]]    # x*(y*g)
        if not (lhs == rhs).all():
            x, y = (int(v) for v in np.argwhere(lhs != rhs)[0])
            raise NotAGroup("multiplication is not associative", witness=(x, y, g))


def make_group(*, table=None, permutations=None, name: str = "G") -> FiniteGroup:
    """Build a validated group from a multiplication table or permutation generators.

    Permutations are 0-based image lists and compose left to right:
    ``(p*q)[i] == q[p[i]]``. Elements are numbered identity first, then in
    breadth-first order over right multiplication by the generators.
    """
    if table is not None:
        if len(table) == 0:
            raise EmptySpec("empty table")
        return FiniteGroup(table, name=name)
    if not permutations:
        raise EmptySpec("need a table or at least one permutation")
    degree = len(permutations[0])
    perms = [tuple(int(i) for i in p) for p in permutations]
    for p in perms:
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise NotAGroup(f"{list(p)} is not a permutation of 0..{degree - 1}")
    identity = tuple(range(degree))
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for p in perms:
            y = tuple(p[i] for i in x)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    tab = [[index[tuple(q[i] for i in p)] for q in elements] for p in elements]
    return FiniteGroup(tab, name=name, labels=elements)


def group_from_elements(elements: Sequence, mul, name: str = "G") -> FiniteGroup:
    """Tabulate a group given as explicit elements (identity first) and a product."""
    index = {e: i for i, e in enumerate(elements)}
    tab = [[index[mul(a, b)] for b in elements] for a in elements]
    return FiniteGroup(tab, name=name, labels=list(elements))


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise EmptySpec("cyclic group needs n >= 1")
    tab = [[(x + y) % n for y in range(n)] for x in range(n)]
    return FiniteGroup(tab, name=f"Z{n}" if n > 1 else "1")


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Componentwise product; the pair (x, y) has index ``x*|H| + y``."""
    m = H.order
    tab = [
        [G.table[x1][x2] * m + H.table[y1][y2] for x2 in range(G.order) for y2 in range(m)]
        for x1 in range(G.order)
        for y1 in range(m)
    ]
    return FiniteGroup(tab, name=name or f"{G.name}x{H.name}", check=False)


@dataclass(frozen=True)
class GroupHom:
    domain: FiniteGroup
    codomain: FiniteGroup
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __repr__(self):
        return f"GroupHom({self.domain.name}->{self.codomain.name}, {list(self.map)})"

    def is_injective(self) -> bool:
        return len(set(self.map)) == self.domain.order

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.codomain.order

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def after(self, other: GroupHom) -> GroupHom:
        """The composite ``self ∘ other``."""
        if other.codomain != self.domain:
            raise NotAHom("composite of non-composable homomorphisms")
        return GroupHom(other.domain, self.codomain, tuple(self.map[x] for x in other.map))

    def inverse_table(self) -> dict[int, int]:
        """Preimage lookup for an injective hom."""
        return {y: x for x, y in enumerate(self.map)}


def hom_check(domain: FiniteGroup, codomain: FiniteGroup, mapping: Sequence[int]) -> GroupHom:
    m = np.asarray(list(mapping), dtype=np.int64)
    if m.shape != (domain.order,):
        raise NotAHom(f"map has length {len(m)}, expected {domain.order}")
    if domain.order and (m.min() < 0 or m.max() >= codomain.order):
        raise NotAHom("map entries outside the codomain")
    lhs = m[domain.array]
    rhs = codomain.array[m[:, None], m[None, :]]
    if not (lhs == rhs).all():
        x, y = (int(v) for v in np.argwhere(lhs != rhs)[0])
        raise NotAHom(f"h({x}*{y}) != h({x})*h({y})", witness=(x, y))
    return GroupHom(domain, codomain, tuple(int(v) for v in m))


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, tuple(range(G.order)))


def zero_hom(G: FiniteGroup, H: FiniteGroup) -> GroupHom:
    return GroupHom(G, H, (0,) * G.order)


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in set(self.elements)


def make_subgroup(parent: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    elts = tuple(sorted(set(elements)))
    members = set(elts)
    if 0 not in members:
        raise NotAGroup("subgroup must contain the identity")
    for x in elts:
        if parent.inv(x) not in members:
            raise NotAGroup("subset not closed under inverses", witness=x)
        for y in elts:
            if parent.mul(x, y) not in members:
                raise NotAGroup("subset not closed under multiplication", witness=(x, y))
    return Subgroup(parent, elts)


def kernel(h: GroupHom) -> Subgroup:
    return make_subgroup(h.domain, (x for x, y in enumerate(h.map) if y == 0))


def image(h: GroupHom) -> Subgroup:
    return make_subgroup(h.codomain, h.map)


def _spanning_tree(G: FiniteGroup, gens: Sequence[int]):
    # (element, parent, generator position) in BFS order, identity excluded
    tree = []
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for j, g in enumerate(gens):
            y = G.table[x][g]
            if y not in seen:
                seen.add(y)
                tree.append((y, x, j))
                queue.append(y)
    return tree


def iter_homs(G: FiniteGroup, H: FiniteGroup, budget: int = HOM_BUDGET, image_orders: str = "divides"):
    """Yield every homomorphism G -> H.

    Images are assigned to ``G.generators`` (restricted to elements whose order
    divides, or with ``image_orders="equal"`` equals, the generator's order) and
    propagated along a spanning tree; the hom law is then checked on all
    (element, generator) pairs, which suffices in a finite group.
    """
    gens = G.generators
    if image_orders == "equal":
        cands = [[y for y in H if H.element_order(y) == G.element_order(g)] for g in gens]
    else:
        cands = [[y for y in H if G.element_order(g) % H.element_order(y) == 0] for g in gens]
    total = prod(len(c) for c in cands)
    if total > budget:
        raise BudgetExceeded(f"{total} candidate assignments exceed budget {budget}")
    tree = _spanning_tree(G, gens)
    Gt, Ht = G.table, H.table
    for imgs in product(*cands):
        m = [0] * G.order
        for y, parent, j in tree:
            m[y] = Ht[m[parent]][imgs[j]]
        if all(m[Gt[x][g]] == Ht[m[x]][imgs[j]] for j, g in enumerate(gens) for x in range(G.order)):
            yield GroupHom(G, H, tuple(m))


def enumerate_homs(G: FiniteGroup, H: FiniteGroup, budget: int = HOM_BUDGET) -> list[GroupHom]:
    return list(iter_homs(G, H, budget))


def is_isomorphic(G: FiniteGroup, H: FiniteGroup, budget: int = HOM_BUDGET) -> GroupHom | None:
    if G.order != H.order or G.is_abelian() != H.is_abelian():
        return None
    if sorted(G.element_order(x) for x in G) != sorted(H.element_order(y) for y in H):
        return None
    for h in iter_homs(G, H, budget, image_orders="equal"):
        if h.is_injective():
            return h
    return None
