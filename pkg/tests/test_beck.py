import pytest

from wreathkit.beck import (
    beck_unit,
    beck_universal,
    beck_universal_all,
    check_beck_morphism,
    coinduced,
    coinduced_on_map,
    equivariant_maps,
    make_beck_module,
    trivial_module,
)
from wreathkit.errors import NotAbelian, NotAHom
from wreathkit.fixtures import beck_fixtures, s3, z3_inversion
from wreathkit.groups import cyclic, iter_homs, zero_hom
from wreathkit.wreath import decode_function, translate, wreath_product


def test_coinduced_z2_z3_swaps_coordinates():
    C = coinduced(cyclic(2), cyclic(3))
    assert C.M.order == 9
    for x in range(9):
        h0, h1 = divmod(x, 3)
        assert C.act(1, x) == h1 * 3 + h0


def test_coinduced_over_trivial_group():
    C = coinduced(cyclic(1), cyclic(3))
    assert C.M.order == 3
    assert C.rho == ((0, 1, 2),)


def test_coinduced_is_an_action_on_z3_z2():
    B = cyclic(3)
    C = coinduced(B, cyclic(2))
    for b1 in B:
        for b2 in B:
            for m in C.M:
                assert C.act(B.mul(b1, b2), m) == C.act(b1, C.act(b2, m))


def test_coinduced_matches_wreath_kernel_translation():
    A, B = cyclic(2), cyclic(3)
    C = coinduced(B, A)
    W = wreath_product(A, B)
    for x in C.M:
        h = W.function(decode_function(x, A.order, B.order))
        for b in B:
            assert C.act(b, x) == W.function_index(translate(h, b))


def test_coinduced_rejects_nonabelian():
    with pytest.raises(NotAbelian):
        coinduced(cyclic(2), s3().G)


def test_inversion_unit():
    u = beck_unit(z3_inversion())
    # (rho[0](1), rho[1](1)) = (1, 2)
    assert decode_function(u(1), 3, 2) == (1, 2)
    assert decode_function(u(2), 3, 2) == (2, 1)
    assert u.map.is_injective()


def test_trivial_action_unit_is_constant():
    mod = trivial_module(cyclic(3), cyclic(2))
    u = beck_unit(mod)
    for m in mod.M:
        assert decode_function(u(m), 2, 3) == (m, m, m)


def test_unit_injective_on_all_fixtures():
    mods = beck_fixtures()
    assert len(mods) == 43
    for mod in mods:
        assert beck_unit(mod).map.is_injective()


def test_identity_gamma_lifts_to_unit():
    mod = z3_inversion()
    gamma = next(h for h in iter_homs(mod.M, mod.M) if h.map == (0, 1, 2))
    res = beck_universal(mod, gamma)
    assert res.lift.map == beck_unit(mod).map
    assert res.satisfiers == 1


def test_zero_gamma_lifts_to_zero():
    mod = z3_inversion()
    res = beck_universal(mod, zero_hom(mod.M, cyclic(2)))
    assert set(res.lift.map.map) == {0}


def test_round_trip_over_all_gammas():
    mod = z3_inversion()
    results = beck_universal_all(mod, cyclic(3))
    assert len(results) == 3
    for res, gamma in zip(results, iter_homs(mod.M, cyclic(3))):
        assert tuple(decode_function(y, 3, 2)[0] for y in res.lift.map.map) == gamma.map
        assert res.satisfiers == 1 and res.equivariant_count == 3


@pytest.mark.parametrize("A", [cyclic(2), cyclic(3)])
def test_adjunction_count_on_fixtures(A):
    for mod in beck_fixtures(3):
        if A.order ** mod.B.order > 64:
            continue
        maps = equivariant_maps(mod, coinduced(mod.B, A))
        assert len(maps) == len(list(iter_homs(mod.M, A)))


def test_naturality_of_unit():
    # negation commutes with inversion, so it is a module map Z3 -> Z3
    mod = z3_inversion()
    mu = check_beck_morphism(mod, mod, [0, 2, 1])
    left = [coinduced_on_map(mod.B, mu.map)(beck_unit(mod)(m)) for m in mod.M]
    right = [beck_unit(mod)(mu(m)) for m in mod.M]
    assert left == right


def test_non_equivariant_map_rejected():
    B = cyclic(2)
    swap = make_beck_module(B, cyclic(3), [[0, 1, 2], [0, 2, 1]])
    triv = trivial_module(B, cyclic(3))
    with pytest.raises(NotAHom):
        check_beck_morphism(swap, triv, [0, 1, 2])
