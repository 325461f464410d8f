from itertools import product

import pytest
from hypothesis import given, strategies as st

from wreathkit.errors import BudgetExceeded
from wreathkit.groups import cyclic, direct_product, hom_check, is_isomorphic, make_group
from wreathkit.wreath import (
    R_on_morphism,
    WreathStructure,
    decode_function,
    encode_function,
    translate,
    wreath_product,
)


def naive_wreath(A, B):
    """Oracle: pairs (h, b) multiplied straight from the defining rule."""
    funcs = list(product(range(A.order), repeat=B.order))
    elements = [(h, b) for h in funcs for b in range(B.order)]

    def mul(x, y):
        (h1, b1), (h2, b2) = x, y
        return tuple(A.mul(h1[c], h2[B.mul(c, b1)]) for c in range(B.order)), B.mul(b1, b2)

    return elements, mul


@pytest.mark.parametrize(
    "A,B",
    [
        (cyclic(2), cyclic(2)),
        (cyclic(3), cyclic(2)),
        (cyclic(2), cyclic(3)),
        (make_group(permutations=[[1, 2, 0], [1, 0, 2]]), cyclic(2)),
    ],
)
def test_table_matches_naive_rule(A, B):
    W = wreath_product(A, B)
    elements, mul = naive_wreath(A, B)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            assert elements[W.W.mul(i, j)] == mul(x, y)


def test_orders():
    assert wreath_product(cyclic(2), cyclic(2)).W.order == 8
    assert wreath_product(cyclic(3), cyclic(2)).W.order == 18
    assert wreath_product(cyclic(2), cyclic(3)).W.order == 24


def test_z2_wr_z2_is_d4():
    D4 = make_group(permutations=[[1, 2, 3, 0], [0, 3, 2, 1]])
    assert is_isomorphic(wreath_product(cyclic(2), cyclic(2)).W, D4) is not None


def test_kernel_is_pointwise_group():
    W = wreath_product(cyclic(2), cyclic(2))
    assert is_isomorphic(W.F, direct_product(cyclic(2), cyclic(2))) is not None


def test_function_index_convention():
    assert encode_function((1, 0), 2) == 2
    assert decode_function(2, 2, 2) == (1, 0)
    assert decode_function(5, 3, 2) == (1, 2)


def test_budget():
    with pytest.raises(BudgetExceeded):
        wreath_product(cyclic(3), cyclic(6))
    W = WreathStructure(cyclic(3), cyclic(6))
    assert W.W is None and W.order == 3**6 * 6
    x = W.element(5 * 6 + 1)
    y = W.mul_elements(x, x)
    assert y.b == 2


@pytest.mark.parametrize("A,B", [(cyclic(2), cyclic(3)), (cyclic(3), cyclic(3)), (cyclic(3), cyclic(2))])
def test_translation_is_a_right_action(A, B):
    W = wreath_product(A, B)
    for fidx in range(W.F.order):
        h = W.function(decode_function(fidx, A.order, B.order))
        assert translate(h, 0) == h
        for b1 in B:
            for b2 in B:
                assert translate(translate(h, b1), b2) == translate(h, B.mul(b1, b2))


@pytest.mark.parametrize("A,B", [(cyclic(2), cyclic(2)), (cyclic(3), cyclic(3))])
def test_sigma_hom_and_conjugation_is_translation(A, B):
    W = wreath_product(A, B)
    G = W.W
    for b1 in B:
        for b2 in B:
            assert G.mul(W.sigma(b1), W.sigma(b2)) == W.sigma(B.mul(b1, b2))
    # sigma(b) kappa(h) sigma(b)^-1 = kappa(x -> h(x b))
    for fidx in range(W.F.order):
        h = W.function(decode_function(fidx, A.order, B.order))
        for b in B:
            conj = G.mul(G.mul(W.sigma(b), W.kappa(fidx)), G.inv(W.sigma(b)))
            assert conj % B.order == 0
            assert conj // B.order == W.function_index(translate(h, b))


def test_R_on_morphism_is_split_morphism():
    W2 = wreath_product(cyclic(3), cyclic(2))
    gamma = hom_check(cyclic(3), cyclic(3), [0, 2, 1])
    m = R_on_morphism(W2, W2, gamma)
    assert m.is_mono


@given(st.integers(2, 3), st.integers(1, 3), st.data())
def test_mul_elements_agrees_with_table(na, nb, data):
    W = wreath_product(cyclic(na), cyclic(nb))
    i = data.draw(st.integers(0, W.W.order - 1))
    j = data.draw(st.integers(0, W.W.order - 1))
    assert W.index(W.mul_elements(W.element(i), W.element(j))) == W.W.mul(i, j)
