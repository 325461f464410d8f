"""The eleven acceptance criteria, one test each.

Each test records a title; conftest prints a PASS/FAIL line per criterion at
the end of the run.
"""

import json
import subprocess
import sys
import time

import pytest

from wreathkit.beck import beck_unit, beck_universal_all
from wreathkit.crude import compose_recover, crude_mul, upsilon
from wreathkit.embedding import eta_split, kk_embed, universal_factorization, verify_embedding
from wreathkit.extensions import check_morphism, extension_from_maps, sections
from wreathkit.fixtures import KLEIN_SHEAR, beck_fixtures, d4_split, extension_fixtures, klein, s3, z4_over_z2
from wreathkit.free_product import enumerate_kernel_words, enumerate_pres_words, pres_normal_form, pres_to_word, word_to_pres
from wreathkit.groups import GroupHom, cyclic, identity_hom, is_isomorphic, iter_homs, make_group
from wreathkit.lie import check_universality, make_lie, pbw_straighten, verify_lie_embedding
from wreathkit.lie.coinduced import check_unit
from wreathkit.lie.fixtures import adjoint_module, affine_line, heisenberg, heisenberg_beck_module, scalar_module
from wreathkit.report import INFO, PASS
from wreathkit.wreath import R_on_morphism, compose_split_morphisms, translate, wreath_product


@pytest.fixture
def title(record_property):
    def set_title(text):
        record_property("criterion", text)

    return set_title


def test_criterion_01(title):
    title("Z2 -> Z4 -> Z2 embeds into Z2 wr Z2 for all 4 sections, image order 4, < 1 s")
    start = time.perf_counter()
    E = z4_over_z2()
    W = wreath_product(E.A, E.B)
    secs = sections(E)
    assert len(secs) == 4 and W.W.order == 8
    for s in secs:
        m = kk_embed(E, s, W)
        rep = verify_embedding(m)
        assert rep.injective_A and rep.injective_G and rep.diagram_ok
        assert len(set(m.phi_G.map)) == 4
    assert time.perf_counter() - start < 1.0


def test_criterion_02(title):
    title("Z2 wr Z2 is D4, |Z3 wr Z2| = 18, S3 embeds with image of order 6")
    D4 = make_group(permutations=[[1, 2, 3, 0], [0, 3, 2, 1]])
    assert is_isomorphic(wreath_product(cyclic(2), cyclic(2)).W, D4) is not None
    assert wreath_product(cyclic(3), cyclic(2)).W.order == 18
    eta = eta_split(s3())
    assert eta.is_mono and len(set(eta.phi_G.map)) == 6


def test_criterion_03(title):
    title("split-case equivariance on S3 and D4, exhaustive")
    failures = 0
    for S in (s3(), d4_split()):
        W = wreath_product(S.A, S.B)
        eta = eta_split(S, W)
        nb = S.B.order
        for a in S.A:
            h = W.element(eta.phi_A(a) * nb).h
            for b in S.B:
                failures += W.function_index(translate(h, b)) != eta.phi_A(S.conjugation_action(a, b))
    assert failures == 0


def test_criterion_04(title):
    title("universality on S3: 3/3 round trips over Hom(Z3, Z3), uniqueness count 1")
    S = s3()
    W = wreath_product(S.A, S.B)
    eta = eta_split(S, W)
    trips = 0
    for gamma in iter_homs(S.A, S.A):
        alpha = compose_split_morphisms(R_on_morphism(W, W, gamma), eta)
        bar, count = universal_factorization(S, alpha, W, W)
        assert bar.map == gamma.map and count == 1
        trips += 1
    assert trips == 3


def _presentation_mismatches(E, maxlen, maxgens):
    bad = sum(pres_to_word(word_to_pres(E, w)) != w for w in enumerate_kernel_words(E, maxlen))
    bad += sum(word_to_pres(E, pres_to_word(p)) != pres_normal_form(p) for p in enumerate_pres_words(E, maxgens))
    return bad


def test_criterion_05(title):
    title("kernel presentation: phi/psi inverse over (Z2, Z2) at 8/4 and (Z4, Z2) at 6/3")
    Z2 = cyclic(2)
    assert _presentation_mismatches(extension_from_maps(cyclic(1), Z2, Z2, [0], [0, 1]), 8, 4) == 0
    assert _presentation_mismatches(z4_over_z2(), 6, 3) == 0


def test_criterion_06(title):
    title("chi well defined (|G|^2 |B| instances) and recovers the classical embedding")
    for name, E in extension_fixtures().items():
        if E.G.order > 8:
            continue
        W = wreath_product(E.A, E.B)
        for s in sections(E):
            cert = compose_recover(E, s, W)
            assert cert.relation_instances == E.G.order**2 * E.B.order
            assert cert.composite == list(kk_embed(E, s, W).phi_G.map), name


def test_criterion_07(title):
    title("crude unit is an injective homomorphism on every fixture")
    for E in extension_fixtures().values():
        ups = upsilon(E)
        G = E.G
        assert len(set(ups)) == G.order
        assert all(crude_mul(E, ups[g], ups[h]) == ups[G.mul(g, h)] for g in G for h in G)


def test_criterion_08(title):
    title("two distinct morphisms of the Z2 x Z2 extension share a kernel component")
    E = klein()
    m1 = check_morphism(E, E, identity_hom(E.A), identity_hom(E.G))
    m2 = check_morphism(E, E, identity_hom(E.A), GroupHom(E.G, E.G, KLEIN_SHEAR))
    assert m1.phi_A == m2.phi_A and m1.phi_G != m2.phi_G


def test_criterion_09(title):
    title("Beck unit injective and equivariant for |M|, |B| <= 4; every gamma lifts uniquely")
    mods = beck_fixtures(4)
    assert mods
    for mod in mods:
        assert beck_unit(mod).map.is_injective()
        results = beck_universal_all(mod, mod.M)
        assert all(r.satisfiers == 1 for r in results)
        assert len(results) == len(list(iter_homs(mod.M, mod.M)))


def test_criterion_10(title):
    title("Lie: aff(1) passes at d = 3, h3 law informational, coinduction unique, straightening exact")
    fx = affine_line()
    rep = verify_lie_embedding(fx.ext, fx.section, 3)
    assert rep.split_tier and all(c.status == PASS for c in rep.checks)
    fx = heisenberg()
    rep = verify_lie_embedding(fx.ext, fx.section, 3)
    for cid in ("lie.linearity", "lie.injectivity", "lie.pi_compat"):
        assert rep.status(cid) == PASS
    law = rep.check("lie.hom_law")
    assert law.status == INFO and any(w["monomial"] == [] for w in law.witnesses)
    for mod, gamma in ((scalar_module(), [[1]]), (heisenberg_beck_module(), [[1]])):
        assert check_universality(mod, gamma, 2).ok and check_unit(mod, 2).injective
    B = affine_line().ext.G
    assert check_universality(adjoint_module(B), [[1, 0], [0, 1]], 2).ok
    B2 = make_lie(2, [(0, 1, [0, 1])])
    assert dict(pbw_straighten(B2, (1, 0), 2).terms) == {(0, 1): 1, (1,): -1}
    assert dict(pbw_straighten(B2, (1, 1, 0), 3).terms) == {(0, 1, 1): 1, (1, 1): -2}


def test_criterion_11(title):
    title("`wreathkit suite` exits 0 in under 60 s")
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "wreathkit", "suite"], capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
    summary = json.loads(proc.stdout)["summary"]
    assert summary["fail"] == 0
    assert elapsed < 60
