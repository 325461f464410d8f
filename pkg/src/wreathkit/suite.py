"""The acceptance checks, one function per criterion, each returning a Check."""

from __future__ import annotations

import time
from typing import Callable

from .beck import beck_unit, beck_universal_all
from .crude import compose_recover, crude_mul, upsilon
from .embedding import eta_split, kk_embed, universal_factorization, verify_embedding
from .errors import AlgebraError, ConventionError, DiagramFailure
from .extensions import check_morphism, sections
from .fixtures import (
    KLEIN_SHEAR,
    beck_fixtures,
    d4_split,
    extension_fixtures,
    free_product_fixture,
    klein,
    s3,
    z4_over_z2,
)
from .free_product import enumerate_kernel_words, enumerate_pres_words, pres_normal_form, pres_to_word, word_to_pres
from .groups import GroupHom, cyclic, identity_hom, is_isomorphic, iter_homs, make_group
from .lie.coinduced import check_universality
from .lie.embedding import verify_lie_embedding
from .lie.enveloping import pbw_straighten
from .lie.fixtures import adjoint_module, affine_line, heisenberg, heisenberg_beck_module, scalar_module, solvable_base
from .report import Check, FAIL, INFO, PASS, Report
from .wreath import R_on_morphism, compose_split_morphisms, wreath_product

SUITE_TIME_LIMIT = 60.0


def _check(id: str, anchor: str, ok: bool, witnesses=(), detail: str = "") -> Check:
    return Check(id, anchor, PASS if ok else FAIL, list(witnesses), detail)


def criterion_1() -> Check:
    start = time.perf_counter()
    E = z4_over_z2()
    W = wreath_product(E.A, E.B)
    bad = []
    orders = []
    for s in sections(E):
        m = kk_embed(E, s, W)
        rep = verify_embedding(m)
        orders.append(rep.image_order)
        if not (rep.ok and rep.image_order == 4 and W.W.order == 8):
            bad.append({"section": list(s.map), "report": rep.to_json()})
    elapsed = time.perf_counter() - start
    ok = not bad and len(orders) == 4 and elapsed < 1.0
    return _check(
        "c1.kk_embedding",
        "Kaluzhnin-Krasner embedding of Z2 -> Z4 -> Z2 into Z2 wr Z2, every section",
        ok,
        bad,
        f"{len(orders)} sections, image orders {orders}, {elapsed:.3f} s",
    )


def criterion_2() -> Check:
    Z2, Z3 = cyclic(2), cyclic(3)
    W22 = wreath_product(Z2, Z2)
    D4 = make_group(permutations=[[1, 2, 3, 0], [0, 3, 2, 1]], name="D4")
    iso = is_isomorphic(W22.W, D4)
    W32 = wreath_product(Z3, Z2)
    S = s3()
    eta = eta_split(S, W32)
    image = len(set(eta.phi_G.map))
    ok = iso is not None and W22.W.order == 8 and W32.W.order == 18 and eta.is_mono and image == 6
    wit = [] if ok else [{"iso": iso is not None, "order_Z3wrZ2": W32.W.order, "image": image}]
    return _check(
        "c2.wreath_identification",
        "Z2 wr Z2 is D4; |Z3 wr Z2| = 18; S3 embeds by the split unit",
        ok,
        wit,
        f"isomorphism {list(iso.map) if iso else None}, image of S3 has order {image}",
    )


def criterion_3() -> Check:
    bad = []
    pairs = 0
    for name, S in (("s3", s3()), ("d4", d4_split())):
        W = wreath_product(S.A, S.B)
        rep = verify_embedding(eta_split(S, W), wreath=W)
        pairs += S.A.order * S.B.order
        if not rep.equivariant:
            bad.append({"fixture": name, "witnesses": rep.witnesses})
    return _check(
        "c3.split_equivariance",
        "split case: translating phi_A(a) by b equals phi_A(a^b)",
        not bad,
        bad,
        f"{pairs} (a, b) pairs",
    )


def criterion_4() -> Check:
    S = s3()
    W_A = wreath_product(S.A, S.B)
    C = cyclic(3)
    W_C = wreath_product(C, S.B)
    eta = eta_split(S, W_A)
    bad = []
    rounds = 0
    for gamma in iter_homs(S.A, C):
        alpha = compose_split_morphisms(R_on_morphism(W_A, W_C, gamma), eta)
        try:
            bar, count = universal_factorization(S, alpha, W_C, W_A)
        except ConventionError as exc:
            bad.append({"gamma": list(gamma.map), "error": str(exc)})
            continue
        if bar.map != gamma.map or count != 1:
            bad.append({"gamma": list(gamma.map), "recovered": list(bar.map), "count": count})
        else:
            rounds += 1
    return _check(
        "c4.universality",
        "universal property of the wreath product: alpha factors uniquely through the unit",
        not bad and rounds == 3,
        bad,
        f"{rounds}/3 round trips",
    )


def _presentation_roundtrip(E, maxlen: int, maxgens: int) -> tuple[int, int, list]:
    mismatches = []
    words = enumerate_kernel_words(E, maxlen)
    for w in words:
        if pres_to_word(word_to_pres(E, w)) != w:
            mismatches.append({"word": str(w)})
    npres = 0
    for p in enumerate_pres_words(E, maxgens):
        npres += 1
        if word_to_pres(E, pres_to_word(p)) != pres_normal_form(p):
            mismatches.append({"pres": str(p)})
    return len(words), npres, mismatches


def criterion_5() -> Check:
    bad = []
    details = []
    for name, E, maxlen, maxgens in (
        ("G=B=Z2", free_product_fixture(), 8, 4),
        ("Z4 over Z2", z4_over_z2(), 6, 3),
    ):
        nw, npres, mism = _presentation_roundtrip(E, maxlen, maxgens)
        details.append(f"{name}: {nw} kernel words, {npres} presentation words")
        bad += [dict(m, fixture=name) for m in mism]
    return _check(
        "c5.presentation",
        "presentation of the kernel of the fold map: phi and psi are mutually inverse",
        not bad,
        bad[:10],
        "; ".join(details),
    )


def criterion_6() -> Check:
    bad = []
    instances = 0
    pairs = 0
    for name, E in extension_fixtures().items():
        if E.G.order > 8:
            continue
        W = wreath_product(E.A, E.B)
        for s in sections(E):
            pairs += 1
            try:
                cert = compose_recover(E, s, W)
                instances += cert.relation_instances
            except (AlgebraError, ConventionError) as exc:
                bad.append({"fixture": name, "section": list(s.map), "error": str(exc)})
    return _check(
        "c6.chi_recovery",
        "chi is well defined and recovers the classical embedding formula",
        not bad,
        bad,
        f"{pairs} (extension, section) pairs, {instances} relation instances",
    )


def criterion_7() -> Check:
    bad = []
    products = 0
    for name, E in extension_fixtures().items():
        ups = upsilon(E)
        if len(set(ups)) != E.G.order:
            bad.append({"fixture": name, "error": "not injective"})
        G = E.G
        for g in G:
            for h in G:
                products += 1
                if crude_mul(E, ups[g], ups[h]) != ups[G.mul(g, h)]:
                    bad.append({"fixture": name, "pair": [g, h]})
    return _check(
        "c7.crude_unit",
        "crude embedding into KL(E) wr B is an injective homomorphism",
        not bad,
        bad[:10],
        f"{products} products over {len(extension_fixtures())} fixtures",
    )


def criterion_8() -> Check:
    E = klein()
    ident_A = identity_hom(E.A)
    accepted = []
    for label, mapping in (("identity", tuple(range(E.G.order))), ("beta", KLEIN_SHEAR)):
        try:
            check_morphism(E, E, ident_A, GroupHom(E.G, E.G, mapping))
            accepted.append(label)
        except DiagramFailure:
            pass
    zero_rejected = False
    try:
        check_morphism(E, E, GroupHom(E.A, E.A, (0, 0)), identity_hom(E.G))
    except DiagramFailure:
        zero_rejected = True
    ok = accepted == ["identity", "beta"] and KLEIN_SHEAR != tuple(range(4)) and zero_rejected
    return _check(
        "c8.non_faithful",
        "the kernel functor is not faithful: two morphisms share their kernel component",
        ok,
        [] if ok else [{"accepted": accepted, "zero_rejected": zero_rejected}],
        f"accepted {accepted}, beta = {list(KLEIN_SHEAR)}",
    )


def criterion_9() -> Check:
    bad = []
    modules = 0
    gammas = 0
    for mod in beck_fixtures():
        modules += 1
        tag = {"B": mod.B.name, "M": mod.M.name, "rho": [list(r) for r in mod.rho]}
        try:
            beck_unit(mod)
            results = beck_universal_all(mod, mod.M)
        except (AlgebraError, ConventionError) as exc:
            bad.append(dict(tag, error=str(exc)))
            continue
        gammas += len(results)
        bad += [dict(tag, satisfiers=r.satisfiers) for r in results if r.satisfiers != 1]
    return _check(
        "c9.beck_modules",
        "abelian split embedding: the coinduced module is universal for Beck modules",
        not bad,
        bad[:10],
        f"{modules} modules, {gammas} gammas round-tripped",
    )


def criterion_10() -> Check:
    bad = []
    fx = affine_line()
    rep = verify_lie_embedding(fx.ext, fx.section, 3)
    if not (rep.ok and all(c.status == PASS for c in rep.checks)):
        bad.append({"fixture": "aff1", "checks": [c.to_json() for c in rep.checks]})
    fx = heisenberg()
    rep = verify_lie_embedding(fx.ext, fx.section, 3)
    for id in ("lie.linearity", "lie.injectivity", "lie.pi_compat"):
        if rep.status(id) != PASS:
            bad.append({"fixture": "h3", "check": id})
    law = rep.check("lie.hom_law")
    if law.status != INFO or not any(w["monomial"] == [] for w in law.witnesses):
        bad.append({"fixture": "h3", "hom_law": law.to_json()})
    B = solvable_base().ext.B
    for name, mod, gamma in (
        ("scalar", scalar_module(), [[1]]),
        ("h3 Beck", heisenberg_beck_module(), [[1]]),
        ("adjoint", adjoint_module(B), [[1, 0], [0, 1]]),
        ("adjoint to K", adjoint_module(B), [[2, -3]]),
    ):
        u = check_universality(mod, gamma, 3)
        if not u.ok:
            bad.append({"module": name, "universality": u.__dict__})
    s1 = pbw_straighten(B, (1, 0), 3)
    s2 = pbw_straighten(B, (1, 1, 0), 3)
    if dict(s1.terms) != {(0, 1): 1, (1,): -1}:
        bad.append({"straighten": "b2b1", "got": str(s1)})
    if dict(s2.terms) != {(0, 1, 1): 1, (1, 1): -2}:
        bad.append({"straighten": "b2b2b1", "got": str(s2)})
    return _check(
        "c10.lie",
        "Lie wreath embedding, coinduced module and PBW straightening",
        not bad,
        bad,
        f"b2b1 -> {s1}; b2b2b1 -> {s2}; h3 defect informational",
    )


CRITERIA: list[Callable[[], Check]] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
]


def run_suite(command: list[str] | None = None) -> Report:
    report = Report(command or ["suite"])
    start = time.perf_counter()
    timings = {}
    for crit in CRITERIA:
        t0 = time.perf_counter()
        try:
            check = crit()
        except Exception as exc:  # a crash is a failed criterion, not a crashed suite
            check = Check(crit.__name__, "crashed", FAIL, [{"error": f"{type(exc).__name__}: {exc}"}])
        timings[check.id] = round(time.perf_counter() - t0, 3)
        report.checks.append(check)
    elapsed = time.perf_counter() - start
    report.add(
        "c11.suite_time",
        f"full suite finishes in under {SUITE_TIME_LIMIT:.0f} s",
        elapsed < SUITE_TIME_LIMIT,
        detail=f"{elapsed:.2f} s",
    )
    report.data["timings"] = timings
    return report
