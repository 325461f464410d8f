"""The wreath product ``Set(B, A) ⋊ B`` and its split extension (kappa, pi, sigma).

Conventions, fixed once here and reused everywhere else:

* functions ``h: B -> A`` multiply pointwise;
* B acts on them by right translation, ``translate(h, c)(b) = h(b c)``;
* ``(h1, b1)(h2, b2) = (b -> h1(b) h2(b b1), b1 b2)``.

Function ``h`` has index ``sum h(b) |A|^(|B|-1-b)`` (lexicographic, first value
most significant) and the pair ``(h, b)`` has index ``index(h) * |B| + b``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, MismatchedBase
from .extensions import (
    Extension,
    SplitExtension,
    SplitExtMorphism,
    check_morphism,
    make_extension,
)
from .groups import FiniteGroup, GroupHom

TABLE_BUDGET = 2048


@dataclass(frozen=True)
class FunctionElement:
    B: FiniteGroup
    A: FiniteGroup
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.B.order:
            raise ValueError(f"function on {self.B.name} needs {self.B.order} values")

    def __call__(self, b: int) -> int:
        return self.values[b]


@dataclass(frozen=True)
class WreathElement:
    h: FunctionElement
    b: int

    def to_json(self) -> dict:
        return {"h": list(self.h.values), "b": self.b}


def encode_function(values, na: int) -> int:
    idx = 0
    for v in values:
        idx = idx * na + v
    return idx


def decode_function(idx: int, na: int, nb: int) -> tuple[int, ...]:
    out = [0] * nb
    for i in range(nb - 1, -1, -1):
        idx, out[i] = divmod(idx, na)
    return tuple(out)


def _digits(na: int, nb: int) -> np.ndarray:
    n = na**nb
    idx = np.arange(n)
    cols = [(idx // na ** (nb - 1 - i)) % na for i in range(nb)]
    return np.stack(cols, axis=1) if nb else np.zeros((1, 0), dtype=np.int64)


def _encode_rows(digits: np.ndarray, na: int) -> np.ndarray:
    nb = digits.shape[1]
    weights = na ** np.arange(nb - 1, -1, -1)
    return digits @ weights


def function_space(B: FiniteGroup, A: FiniteGroup, budget: int = TABLE_BUDGET) -> FiniteGroup:
    """The pointwise group ``Set(B, A)`` of order ``|A|^|B|``."""
    na, nb = A.order, B.order
    n = na**nb
    if n > budget:
        raise BudgetExceeded(f"|{A.name}|^|{B.name}| = {n} exceeds budget {budget}")
    D = _digits(na, nb)
    prod_digits = A.array[D[:, None, :], D[None, :, :]]
    tab = _encode_rows(prod_digits.reshape(n * n, nb), na).reshape(n, n)
    return FiniteGroup(tab, name=f"Set({B.name},{A.name})", check=False)


def translate(h: FunctionElement, c: int) -> FunctionElement:
    B = h.B
    return FunctionElement(B, h.A, tuple(h.values[B.mul(b, c)] for b in range(B.order)))


def translation_table(B: FiniteGroup, A: FiniteGroup) -> np.ndarray:
    # trans[f, c] = index of translate(f, c)
    na, nb = A.order, B.order
    D = _digits(na, nb)
    cols = []
    for c in range(nb):
        perm = [B.mul(b, c) for b in range(nb)]
        cols.append(_encode_rows(D[:, perm], na))
    return np.stack(cols, axis=1)


class WreathStructure:
    """``A ≀ B`` with kernel ``Set(B, A)``; the table ``W`` exists only within budget."""

    def __init__(self, A: FiniteGroup, B: FiniteGroup, budget: int = TABLE_BUDGET):
        self.A = A
        self.B = B
        na, nb = A.order, B.order
        self.order = na**nb * nb
        self.W: FiniteGroup | None = None
        self.kappa = self.pi = self.sigma = None
        self.split: SplitExtension | None = None
        if self.order > budget:
            return
        self.F = function_space(B, A, budget)
        nf = self.F.order
        trans = translation_table(B, A)
        idx = np.arange(nf * nb)
        H, Bi = idx // nb, idx % nb
        h2_shift = trans[H[None, :], Bi[:, None]]
        tab = self.F.array[H[:, None], h2_shift] * nb + B.array[Bi[:, None], Bi[None, :]]
        self.W = FiniteGroup(tab, name=f"{A.name}wr{B.name}")
        self.kappa = GroupHom(self.F, self.W, tuple(h * nb for h in range(nf)))
        self.pi = GroupHom(self.W, B, tuple(int(x) for x in Bi))
        self.sigma = GroupHom(B, self.W, tuple(range(nb)))
        ext = make_extension(self.F, self.W, B, self.kappa, self.pi)
        self.split = SplitExtension(ext, self.sigma)

    def __repr__(self):
        return f"WreathStructure({self.A.name} wr {self.B.name}, order={self.order})"

    @property
    def ext(self) -> Extension:
        return self.split.ext

    def function(self, values) -> FunctionElement:
        return FunctionElement(self.B, self.A, tuple(values))

    def index(self, x: WreathElement) -> int:
        return encode_function(x.h.values, self.A.order) * self.B.order + x.b

    def element(self, i: int) -> WreathElement:
        fidx, b = divmod(i, self.B.order)
        return WreathElement(self.function(decode_function(fidx, self.A.order, self.B.order)), b)

    def function_index(self, h: FunctionElement) -> int:
        return encode_function(h.values, self.A.order)

    def mul_elements(self, x: WreathElement, y: WreathElement) -> WreathElement:
        """Element-wise product; works whether or not the table is materialized."""
        A, B = self.A, self.B
        shifted = translate(y.h, x.b)
        vals = tuple(A.mul(u, v) for u, v in zip(x.h.values, shifted.values))
        return WreathElement(self.function(vals), B.mul(x.b, y.b))

    def identity(self) -> WreathElement:
        return WreathElement(self.function((0,) * self.B.order), 0)

    def kappa_of(self, h: FunctionElement) -> WreathElement:
        return WreathElement(h, 0)

    def sigma_of(self, b: int) -> WreathElement:
        return WreathElement(self.function((0,) * self.B.order), b)


def wreath_product(A: FiniteGroup, B: FiniteGroup, budget: int = TABLE_BUDGET) -> WreathStructure:
    W = WreathStructure(A, B, budget)
    if W.W is None:
        raise BudgetExceeded(f"|{A.name} wr {B.name}| = {W.order} exceeds budget {budget}")
    return W


def R_on_morphism(W_A: WreathStructure, W_C: WreathStructure, gamma: GroupHom) -> SplitExtMorphism:
    """``gamma ≀ B: (h, b) -> (gamma ∘ h, b)`` as a morphism of split extensions."""
    if W_A.B != W_C.B:
        raise MismatchedBase("wreath products over different B")
    if gamma.domain != W_A.A or gamma.codomain != W_C.A:
        raise MismatchedBase("gamma must map the kernel group of the source to that of the target")
    na, nb, nc = W_A.A.order, W_A.B.order, W_C.A.order
    phi_A = []
    for fidx in range(W_A.F.order):
        vals = decode_function(fidx, na, nb)
        phi_A.append(encode_function((gamma(v) for v in vals), nc))
    phi_G = tuple(phi_A[x // nb] * nb + x % nb for x in range(W_A.W.order))
    return check_morphism(
        W_A.split,
        W_C.split,
        GroupHom(W_A.F, W_C.F, tuple(phi_A)),
        GroupHom(W_A.W, W_C.W, phi_G),
        split=True,
    )


def compose_split_morphisms(second: SplitExtMorphism, first: SplitExtMorphism) -> SplitExtMorphism:
    """``second ∘ first`` (component-wise)."""
    return SplitExtMorphism(
        first.source,
        second.target,
        second.phi_A.after(first.phi_A),
        second.phi_G.after(first.phi_G),
    )
