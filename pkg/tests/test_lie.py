import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from wreathkit.errors import DegreeOverflow
from wreathkit.lie import (
    PBW,
    LieWreathElement,
    check_universality,
    coproduct_split,
    h_prime,
    lie_kk_embed,
    lie_lift,
    lie_unit,
    make_lie,
    make_lie_module,
    monomials,
    pbw_straighten,
    verify_lie_embedding,
    wreath_bracket,
)
from wreathkit.lie.algebra import AntisymmetryFailure, JacobiFailure, abelian_lie
from wreathkit.lie.coinduced import check_unit, lie_coinduced, trivial_lie_module
from wreathkit.lie.embedding import convention_probe, convolution, embedding_matrix
from wreathkit.lie.enveloping import right_translate, table_from, zero_table
from wreathkit.lie.fixtures import (
    adjoint_module,
    affine_line,
    heisenberg,
    heisenberg_beck_module,
    lie_fixtures,
    nonabelian_kernel,
    scalar_module,
    solvable_base,
)
from wreathkit.lie.linalg import rank
from wreathkit.report import FAIL, INFO, PASS

F = Fraction
B2 = make_lie(2, [(0, 1, [0, 1])])
# a faithful matrix representation of B2: [r0, r1] = r1
REP = ([[1, 0], [0, 0]], [[0, 1], [0, 0]])


def matmul(P, Q):
    return [[sum(F(P[i][k]) * Q[k][j] for k in range(len(Q))) for j in range(len(Q[0]))] for i in range(len(P))]


def rep_of_word(word):
    out = [[F(1), F(0)], [F(0), F(1)]]
    for i in word:
        out = matmul(out, REP[i])
    return out


def rep_of_element(u):
    out = [[F(0)] * 2 for _ in range(2)]
    for m, c in u.terms.items():
        M = rep_of_word(m)
        out = [[out[i][j] + c * M[i][j] for j in range(2)] for i in range(2)]
    return out


# Lie algebra checks


def test_make_lie_examples():
    h3 = make_lie(3, [(0, 1, [0, 0, 1])])
    assert h3.bracket((1, 0, 0), (0, 1, 0)) == (0, 0, 1)
    assert h3.bracket((0, 1, 0), (1, 0, 0)) == (0, 0, -1)
    assert abelian_lie(2).is_abelian()
    with pytest.raises(AntisymmetryFailure):
        make_lie(3, [(0, 1, [0, 0, 1]), (1, 0, [0, 0, 1])])


def test_jacobi_violation_rejected():
    # [x,y]=x, [y,z]=y, [z,x]=z fails Jacobi
    with pytest.raises(JacobiFailure):
        make_lie(3, [(0, 1, [1, 0, 0]), (1, 2, [0, 1, 0]), (2, 0, [0, 0, 1])])


def test_fixtures_validate():
    names = set(lie_fixtures())
    assert names == {"h3", "aff1", "solvable", "nonabelian_kernel", "abelian"}


# enveloping algebra


def test_straighten_examples():
    assert str(pbw_straighten(B2, (1, 0), 2)) == "-1*b2 + 1*b1b2"
    u = pbw_straighten(B2, (1, 1, 0), 3)
    assert dict(u.terms) == {(0, 1, 1): 1, (1, 1): -2}


def test_straighten_abelian_sorts():
    K3 = abelian_lie(3)
    u = pbw_straighten(K3, (2, 0, 1, 0), 4)
    assert dict(u.terms) == {(0, 0, 1, 2): 1}


def test_truncation_drops_high_degree():
    u = pbw_straighten(B2, (1, 0), 1)
    assert dict(u.terms) == {(1,): -1}


@given(st.lists(st.integers(0, 1), max_size=6))
def test_straightening_matches_matrix_representation(word):
    u = pbw_straighten(B2, word, len(word))
    assert rep_of_element(u) == rep_of_word(word)


@pytest.mark.parametrize("B", [B2, nonabelian_kernel().ext.G, solvable_base().ext.G])
def test_straightening_confluent(B):
    left, right = PBW(B, "leftmost"), PBW(B, "rightmost")
    for n in range(5):
        for w in product(range(B.dim), repeat=n):
            assert left.straighten(w, n) == right.straighten(w, n)


def test_coproduct_examples():
    assert coproduct_split(()) == {((), ()): 1}
    assert coproduct_split((0,)) == {((), (0,)): 1, ((0,), ()): 1}
    assert coproduct_split((0, 1)) == {((), (0, 1)): 1, ((0,), (1,)): 1, ((1,), (0,)): 1, ((0, 1), ()): 1}
    # repeated letters produce multiplicities
    assert coproduct_split((0, 0))[((0,), (0,))] == 2
    assert sum(coproduct_split((0, 1, 1)).values()) == 8


def test_dual_table_degree_guard():
    h = zero_table(2, 1, 2)
    with pytest.raises(DegreeOverflow):
        h((0, 0, 1))
    with pytest.raises(DegreeOverflow):
        h.truncate(3)
    assert monomials(2, 2) == [(), (0,), (1,), (0, 0), (0, 1), (1, 1)]


# the embedding


def test_h_prime_h3_is_z_at_empty_only():
    fx = heisenberg()
    h = h_prime(fx.ext, fx.section, (1,), 3)
    for m in monomials(2, 3):
        assert h(m) == ((1,) if m == () else (0,))


def test_h_prime_aff1_constant():
    fx = affine_line()
    h = h_prime(fx.ext, fx.section, (1,), 4)
    assert all(h(m) == (1,) for m in monomials(1, 4))
    assert h_prime(fx.ext, fx.section, (0,), 4).is_zero()


def test_lie_kk_embed_h3():
    fx = heisenberg()
    E, s = fx.ext, fx.section
    z = lie_kk_embed(E, s, (0, 0, 1), 2)
    assert z.b == (0, 0) and z.h == h_prime(E, s, (1,), 2)
    x = lie_kk_embed(E, s, (1, 0, 0), 2)
    assert x.h.is_zero() and x.b == (1, 0)


@pytest.mark.parametrize("name", list(lie_fixtures()))
def test_pi_part_is_f(name):
    fx = lie_fixtures()[name]
    E = fx.ext
    for i in range(E.G.dim):
        assert lie_kk_embed(E, fx.section, E.G.basis(i), 2).b == E.f(E.G.basis(i))


def test_aff1_bracket_example():
    fx = affine_line()
    E, s, d = fx.ext, fx.section, 4
    b = lie_kk_embed(E, s, (1, 0), d)
    a = lie_kk_embed(E, s, (0, 1), d)
    assert b.h.is_zero()
    got = wreath_bracket(E, b, a)
    assert got == lie_kk_embed(E, s, E.G.bracket((1, 0), (0, 1)), d - 1)
    assert all(got.h(m) == (1,) for m in monomials(1, d - 1))


def test_abelian_kernel_convolution_vanishes():
    fx = affine_line()
    rng = random.Random(3)
    h1 = table_from(1, 1, 3, lambda m: (F(rng.randint(-5, 5)),))
    h2 = table_from(1, 1, 3, lambda m: (F(rng.randint(-5, 5)),))
    assert convolution(fx.ext, h1, h2, 3).is_zero()


rational = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@given(st.data())
def test_bracket_antisymmetric(data):
    fx = data.draw(st.sampled_from([solvable_base(), nonabelian_kernel(), heisenberg()]))
    E, d = fx.ext, 2
    nb, na = E.B.dim, E.A.dim

    def element():
        vals = data.draw(st.lists(rational, min_size=na * len(monomials(nb, d)), max_size=na * len(monomials(nb, d))))
        it = iter(vals)
        h = table_from(nb, na, d, lambda m: tuple(next(it) for _ in range(na)))
        return LieWreathElement(h, tuple(data.draw(st.lists(rational, min_size=nb, max_size=nb))))

    u, v = element(), element()
    assert wreath_bracket(E, u, v) == wreath_bracket(E, v, u).scaled(-1)


@pytest.mark.parametrize("name", ["aff1", "solvable", "nonabelian_kernel", "abelian"])
def test_split_fixtures_pass_all(name):
    fx = lie_fixtures()[name]
    rep = verify_lie_embedding(fx.ext, fx.section, 3)
    assert rep.split_tier and rep.ok
    assert {c.status for c in rep.checks} == {PASS}


def test_h3_hom_law_informational():
    fx = heisenberg()
    rep = verify_lie_embedding(fx.ext, fx.section, 3)
    assert not rep.split_tier and rep.ok
    for cid in ("lie.linearity", "lie.injectivity", "lie.pi_compat", "lie.kernel_restriction"):
        assert rep.status(cid) == PASS
    law = rep.check("lie.hom_law")
    assert law.status == INFO and law.status != FAIL
    assert any(w["monomial"] == [] and w["got"] == ["0"] and w["want"] == ["1"] for w in law.witnesses)


def test_embedding_injective_rank():
    for fx in lie_fixtures().values():
        assert rank(tuple(zip(*embedding_matrix(fx.ext, fx.section, 2)))) == fx.ext.G.dim


@pytest.mark.parametrize("name", ["aff1", "solvable", "nonabelian_kernel"])
def test_convention_probe(name):
    fx = lie_fixtures()[name]
    probe = convention_probe(fx.ext, fx.section, 3)
    assert probe["right+"] == 0
    assert probe["right-"] > 0


def test_translation_is_a_lie_action():
    # b.(c.h) - c.(b.h) = [b,c].h, the Lie counterpart of the group right translation
    pbw = PBW(B2)
    rng = random.Random(7)
    h = table_from(2, 1, 4, lambda m: (F(rng.randint(-9, 9)),))
    e0, e1 = (F(1), F(0)), (F(0), F(1))
    lhs = right_translate(pbw, e0, right_translate(pbw, e1, h)) + right_translate(
        pbw, e1, right_translate(pbw, e0, h)
    ).scaled(-1)
    rhs = right_translate(pbw, B2.bracket(e0, e1), h).truncate(2)
    assert lhs == rhs


# coinduction


def test_scalar_unit():
    h = lie_unit(scalar_module(), 4, (3,))
    assert all(h(m) == (3,) for m in monomials(1, 4))


def test_trivial_unit():
    mod = trivial_lie_module(abelian_lie(2), 1)
    h = lie_unit(mod, 3, (5,))
    assert all(h(m) == ((5,) if m == () else (0,)) for m in monomials(2, 3))


def test_heisenberg_beck_round_trip():
    mod = heisenberg_beck_module()
    lift = lie_lift(mod, [[1]], 3, (1,))
    assert lift == lie_unit(mod, 3, (1,))
    assert check_universality(mod, [[1]], 3).ok


@pytest.mark.parametrize(
    "mod,gamma",
    [
        (scalar_module(), [[2]]),
        (heisenberg_beck_module(), [[1], [-1]]),
        (adjoint_module(B2), [[1, 0], [0, 1]]),
        (adjoint_module(B2), [[0, 3]]),
    ],
)
def test_universality(mod, gamma):
    rep = check_universality(mod, gamma, 3)
    assert rep.ok and rep.nullity == 0
    u = check_unit(mod, 3)
    assert u.injective and not u.equivariance_defects


def test_coinduced_action_matches_translation():
    C = lie_coinduced(B2, 1, 3)
    rng = random.Random(1)
    h = table_from(2, 1, 3, lambda m: (F(rng.randint(-3, 3)),))
    assert C.act_basis(1, h) == right_translate(PBW(B2), (0, 1), h)


def test_non_module_rejected():
    from wreathkit.errors import NotAModule

    with pytest.raises(NotAModule):
        make_lie_module(B2, 1, [[[0]], [[1]]])
