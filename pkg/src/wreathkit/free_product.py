"""Words in the free product G+B and the presentation of ``Ker<f, 1_B>``.

A word is a tuple of letters ``("g", x)`` or ``("b", y)``. Kernel elements of
the fold map ``<f, 1_B>: G+B -> B`` are also written as *presentation words*:
sequences of generators ``(g, b)`` standing for ``b g (b f(g))^-1``, subject to

* ``(1, b) = 1``
* ``(g, b)(g', b f(g)) = (g g', b)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .errors import BudgetExceeded, ConventionError, DiagramFailure, NotInKernel
from .extensions import Extension, ExtMorphism, SplitExtension, check_morphism
from .groups import FiniteGroup, GroupHom, identity_hom

MAX_WORD_LENGTH = 8
MAX_PRES_GENERATORS = 6
WORD_BUDGET = 10**6

Letter = tuple[str, int]


@dataclass(frozen=True)
class FreeProduct:
    G: FiniteGroup
    B: FiniteGroup

    def factor(self, tag: str) -> FiniteGroup:
        return self.G if tag == "g" else self.B

    def word(self, letters: Sequence[Letter]) -> FPWord:
        return FPWord(tuple((t, int(x)) for t, x in letters), self)

    def parse(self, text: str) -> FPWord:
        """Parse ``"b:1 g:3"``-style literals."""
        letters = []
        for tok in text.split():
            m = re.fullmatch(r"([gb]):(\d+)", tok)
            if not m:
                raise ValueError(f"bad letter {tok!r}; expected g:IDX or b:IDX")
            tag, idx = m.group(1), int(m.group(2))
            if idx >= self.factor(tag).order:
                raise ValueError(f"{tok!r} is outside the factor")
            letters.append((tag, idx))
        return self.word(letters)

    def mul(self, u: FPWord, v: FPWord) -> FPWord:
        return reduce_word(FPWord(u.letters + v.letters, self))

    def inverse(self, w: FPWord) -> FPWord:
        return FPWord(tuple((t, self.factor(t).inv(x)) for t, x in reversed(w.letters)), self)

    def reduced_words(self, length: int) -> Iterator[FPWord]:
        """All reduced (alternating, identity-free) words of exactly this length."""
        if length == 0:
            yield FPWord((), self)
            return
        nonid = {"g": range(1, self.G.order), "b": range(1, self.B.order)}
        for first in ("g", "b"):
            tags = [first if i % 2 == 0 else ("b" if first == "g" else "g") for i in range(length)]
            for xs in product(*(nonid[t] for t in tags)):
                yield FPWord(tuple(zip(tags, xs)), self)


@dataclass(frozen=True)
class FPWord:
    letters: tuple[Letter, ...]
    context: FreeProduct = field(compare=False, repr=False)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(f"{t}:{x}" for t, x in self.letters) or "1"

    def canonical_shape(self) -> list[tuple[int, int]]:
        """The reduced word as pairs ``(b_i, g_i)`` with ``b_1``/``g_n`` possibly 1."""
        letters = list(self.letters)
        if letters and letters[0][0] == "g":
            letters.insert(0, ("b", 0))
        if letters and letters[-1][0] == "b":
            letters.append(("g", 0))
        return [(letters[i][1], letters[i + 1][1]) for i in range(0, len(letters), 2)]


def reduce_word(w: FPWord) -> FPWord:
    """Merge adjacent letters from the same factor and drop identities."""
    fp = w.context
    out: list[Letter] = []
    for tag, x in w.letters:
        if out and out[-1][0] == tag:
            x = fp.factor(tag).mul(out.pop()[1], x)
        if x != 0:
            out.append((tag, x))
    return FPWord(tuple(out), fp)


def _fold(u: GroupHom, v: GroupHom, letters) -> int:
    H = u.codomain
    acc = 0
    for tag, x in letters:
        acc = H.mul(acc, u(x) if tag == "g" else v(x))
    return acc


def copair_eval(u: GroupHom, v: GroupHom, w: FPWord) -> int:
    """Evaluate ``<u, v>: G+B -> H`` on a word."""
    if u.codomain != v.codomain:
        raise ValueError("copairing needs a common codomain")
    value = _fold(u, v, w.letters)
    if value != _fold(u, v, reduce_word(w).letters):
        raise ConventionError("copairing does not factor through reduction", witness=str(w))
    return value


def fold_map(E: Extension, w: FPWord) -> int:
    return copair_eval(E.f, identity_hom(E.B), w)


def in_kernel(E: Extension, w: FPWord) -> bool:
    return fold_map(E, w) == 0


def enumerate_kernel_words(
    E: Extension, maxlen: int, max_length: int = MAX_WORD_LENGTH, budget: int = WORD_BUDGET
) -> list[FPWord]:
    """Reduced kernel words of length <= maxlen, shortest first."""
    if maxlen > max_length:
        raise BudgetExceeded(f"maxlen {maxlen} exceeds the configured bound {max_length}")
    fp = FreeProduct(E.G, E.B)
    ng, nb = E.G.order - 1, E.B.order - 1
    total = sum(ng ** ((n + 1) // 2) * nb ** (n // 2) + nb ** ((n + 1) // 2) * ng ** (n // 2) for n in range(maxlen + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} reduced words exceed budget {budget}")
    ident = identity_hom(E.B)
    return [w for n in range(maxlen + 1) for w in fp.reduced_words(n) if _fold(E.f, ident, w.letters) == 0]


@dataclass(frozen=True)
class PresWord:
    gens: tuple[tuple[int, int], ...]
    ext: Extension = field(compare=False, repr=False)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        return " ".join(f"({g},{b})" for g, b in self.gens) or "1"


def pres_word(E: Extension, gens) -> PresWord:
    return PresWord(tuple((int(g), int(b)) for g, b in gens), E)


def parse_pres_word(E: Extension, text: str) -> PresWord:
    pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", text)
    if not text.strip() in ("", "1") and not pairs:
        raise ValueError(f"bad presentation word {text!r}")
    return pres_word(E, pairs)


def _first_redex(E: Extension, gens) -> tuple[str, int] | None:
    B, f = E.B, E.f
    for i, (g, b) in enumerate(gens):
        if g == 0:
            return ("unit", i)
        if i + 1 < len(gens) and gens[i + 1][1] == B.mul(b, f(g)):
            return ("merge", i)
    return None


def pres_normal_form(p: PresWord) -> PresWord:
    """Rewrite leftmost-first with the two relations until neither applies."""
    E = p.ext
    gens = list(p.gens)
    while (redex := _first_redex(E, gens)) is not None:
        kind, i = redex
        if kind == "unit":
            del gens[i]
        else:
            (g, b), (g2, _) = gens[i], gens[i + 1]
            gens[i : i + 2] = [(E.G.mul(g, g2), b)]
    return PresWord(tuple(gens), E)


def pres_mul(p: PresWord, q: PresWord) -> PresWord:
    return pres_normal_form(PresWord(p.gens + q.gens, p.ext))


def pres_inverse(p: PresWord) -> PresWord:
    # (g, b)^-1 = (g^-1, b f(g)) because (g, b)(g^-1, b f(g)) = (1, b) = 1
    E = p.ext
    return pres_normal_form(
        PresWord(tuple((E.G.inv(g), E.B.mul(b, E.f(g))) for g, b in reversed(p.gens)), E)
    )


def pres_to_word(p: PresWord) -> FPWord:
    """Send each generator ``(g, b)`` to ``b g (b f(g))^-1`` and reduce."""
    E = p.ext
    fp = FreeProduct(E.G, E.B)
    letters: list[Letter] = []
    for g, b in p.gens:
        letters += [("b", b), ("g", g), ("b", E.B.inv(E.B.mul(b, E.f(g))))]
    w = reduce_word(FPWord(tuple(letters), fp))
    if not in_kernel(E, w):
        raise ConventionError("image of a presentation word left the kernel", witness=str(p))
    return w


def word_to_pres(E: Extension, w: FPWord) -> PresWord:
    """Read ``b_1 g_1 ... b_n g_n`` as ``(g_1, c_1) ... (g_n, c_n)`` with running prefix ``c_i``."""
    w = reduce_word(w)
    if not in_kernel(E, w):
        raise NotInKernel(f"{w} is not in the kernel of <f, 1_B>")
    B = E.B
    gens = []
    prefix = 0
    for b, g in w.canonical_shape():
        prefix = B.mul(prefix, b)
        gens.append((g, prefix))
        prefix = B.mul(prefix, E.f(g))
    return pres_normal_form(PresWord(tuple(gens), E))


def enumerate_pres_words(E: Extension, max_gens: int, max_allowed: int = MAX_PRES_GENERATORS) -> Iterator[PresWord]:
    if max_gens > max_allowed:
        raise BudgetExceeded(f"{max_gens} generators exceed the configured bound {max_allowed}")
    gens = [(g, b) for g in range(E.G.order) for b in range(E.B.order)]
    for n in range(max_gens + 1):
        for combo in product(gens, repeat=n):
            yield PresWord(combo, E)


class LData:
    """The split extension L(E): ``KL(E) -> G+B -> B`` with splitting by B-letters."""

    def __init__(self, E: Extension):
        self.E = E
        self.fp = FreeProduct(E.G, E.B)

    def fold(self, w: FPWord) -> int:
        return fold_map(self.E, w)

    def iota1(self, g: int) -> FPWord:
        return reduce_word(self.fp.word([("g", g)]))

    def iota2(self, b: int) -> FPWord:
        return reduce_word(self.fp.word([("b", b)]))

    def kernel_inclusion(self, p: PresWord) -> FPWord:
        return pres_to_word(p)


def L_of_extension(E: Extension) -> LData:
    return LData(E)


@dataclass(frozen=True)
class LambdaUnit:
    """The unit ``E -> P L(E)`` tabulated on the finite groups G and A."""

    E: Extension
    on_G: tuple[FPWord, ...]
    on_A: tuple[PresWord, ...]


def lambda_unit(E: Extension) -> LambdaUnit:
    L = LData(E)
    on_G = tuple(L.iota1(g) for g in range(E.G.order))
    on_A = tuple(word_to_pres(E, L.iota1(E.k(a))) for a in range(E.A.order))
    for a, p in enumerate(on_A):
        if pres_to_word(p) != on_G[E.k(a)]:
            raise ConventionError("unit does not commute with the kernel inclusions", witness=a)
    return LambdaUnit(E, on_G, on_A)


@dataclass(frozen=True)
class TransposedMorphism:
    """A morphism of split extensions ``L(E) -> S``.

    It is determined by its restriction ``u: G -> H`` to the first factor; the
    middle map is the copairing ``<u, t>`` and the kernel map sends a
    presentation word to ``l^-1`` of the middle map applied to its word.
    """

    E: Extension
    S: SplitExtension
    u: GroupHom

    def middle(self, w: FPWord) -> int:
        return copair_eval(self.u, self.S.s, w)

    def kernel(self, p: PresWord) -> int:
        y = self.middle(pres_to_word(p))
        linv = self.S.ext.k_inverse()
        if y not in linv:
            raise DiagramFailure("kernel word does not land in the kernel of S", witness=str(p))
        return linv[y]


def adjunction_transpose(E: Extension, S: SplitExtension, phi: ExtMorphism, maxlen: int = 4) -> TransposedMorphism:
    """Forward direction: ``phi: E -> P(S)`` becomes ``L(E) -> S`` with middle ``<phi_G, t>``.

    The squares are validated on every reduced word of length <= maxlen.
    """
    check_morphism(E, S.ext, phi.phi_A, phi.phi_G)
    tm = TransposedMorphism(E, S, phi.phi_G)
    fp = FreeProduct(E.G, E.B)
    for n in range(maxlen + 1):
        for w in fp.reduced_words(n):
            if S.f(tm.middle(w)) != fold_map(E, w):
                raise DiagramFailure("g ∘ <phi_G, t> != <f, 1_B>", witness=str(w))
    for b in range(E.B.order):
        if tm.middle(fp.word([("b", b)])) != S.s(b):
            raise DiagramFailure("transpose does not respect the splittings", witness=b)
    for w in enumerate_kernel_words(E, maxlen):
        tm.kernel(word_to_pres(E, w))
    return tm


def transpose_back(tm: TransposedMorphism) -> ExtMorphism:
    """Backward direction: precompose with the unit ``E -> P L(E)``."""
    E, S = tm.E, tm.S
    unit = lambda_unit(E)
    phi_G = tuple(tm.middle(w) for w in unit.on_G)
    phi_A = tuple(tm.kernel(p) for p in unit.on_A)
    return check_morphism(E, S.ext, GroupHom(E.A, S.A, phi_A), GroupHom(E.G, S.G, phi_G))


def counit(S: SplitExtension, maxlen: int = 4) -> TransposedMorphism:
    """``epsilon_S: L P(S) -> S``, the transpose of the identity; middle map ``<1_G, s>``."""
    E = S.ext
    ident = ExtMorphism(E, E, identity_hom(E.A), identity_hom(E.G))
    return adjunction_transpose(E, S, ident, maxlen)


def triangle_check(S: SplitExtension, maxlen: int = 4) -> bool:
    """``P(epsilon_S) ∘ lambda_{P(S)} = 1`` on G and on A."""
    eps = counit(S, maxlen)
    back = transpose_back(eps)
    return back.phi_G == identity_hom(S.G) and back.phi_A == identity_hom(S.A)
