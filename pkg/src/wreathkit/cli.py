"""Command line entry point: ``wreathkit <subcommand> ...``.

Exit status is 0 when every check passes, 1 when any check fails and 2 on
unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .beck import beck_unit, beck_universal, equivariant_maps, coinduced
from .crude import compose_recover, crude_mul, upsilon
from .embedding import eta_split, kk_embed, universal_factorization, verify_embedding
from .errors import AlgebraError, ConventionError, SchemaError
from .extensions import is_split, make_section, make_split_extension, sections
from .fixtures import extension_fixtures, z3_inversion
from .free_product import enumerate_kernel_words, enumerate_pres_words, pres_normal_form, pres_to_word, word_to_pres
from .groups import HOM_BUDGET, hom_check, is_isomorphic, iter_homs
from .io import (
    build_beck,
    build_extension,
    build_group,
    build_lie_extension,
    build_lie_section,
    group_to_json,
    parse_input,
    parse_text,
)
from .lie.embedding import convention_probe, lie_kk_embed, verify_lie_embedding
from .lie.fixtures import lie_fixtures
from .report import EXIT_INPUT, Report
from .suite import run_suite
from .wreath import TABLE_BUDGET, R_on_morphism, compose_split_morphisms, wreath_product


class InputError(Exception):
    pass


def _is_file(arg: str) -> bool:
    return Path(arg).is_file()


def _load_extension(arg: str):
    fixtures = extension_fixtures()
    if not _is_file(arg) and arg in fixtures:
        return fixtures[arg]
    return build_extension(parse_input(arg, "extension"))


def _load_group(arg: str):
    if _is_file(arg):
        return build_group(parse_input(arg, "group").data)
    return build_group(parse_text(json.dumps(arg), "group").data)


def _load_section(E, arg: str | None):
    if arg is None:
        return sections(E)[0]
    if _is_file(arg):
        data = parse_input(arg, "section").data
    else:
        data = parse_text(arg, "section").data
    if isinstance(data, int):
        all_sections = sections(E)
        if data >= len(all_sections):
            raise InputError(f"section index {data} out of range; there are {len(all_sections)} sections")
        return all_sections[data]
    return make_section(E, data["map"] if isinstance(data, dict) else data)


def cmd_group(args, report: Report) -> None:
    G = _load_group(args.group)
    report.data["group"] = {
        "name": G.name,
        "order": G.order,
        "abelian": G.is_abelian(),
        "generators": list(G.generators),
        "element_orders": [G.element_order(x) for x in G],
    }
    again = build_group(json.loads(json.dumps(group_to_json(G))))
    report.add("group.roundtrip", "multiplication table survives a JSON round trip", again.table == G.table)
    if args.compare:
        H = _load_group(args.compare)
        iso = is_isomorphic(G, H, args.budget or HOM_BUDGET)
        report.data["isomorphism"] = list(iso.map) if iso else None
        report.add("group.isomorphic", f"{G.name} is isomorphic to {H.name}", iso is not None)


def cmd_wreath(args, report: Report) -> None:
    A, B = _load_group(args.A), _load_group(args.B)
    W = wreath_product(A, B, args.budget or TABLE_BUDGET)
    report.data["wreath"] = {"A": A.name, "B": B.name, "order": W.W.order}
    # sigma is a homomorphism and kappa lands in the kernel of pi
    sigma_ok = all(W.W.mul(W.sigma(b1), W.sigma(b2)) == W.sigma(B.mul(b1, b2)) for b1 in B for b2 in B)
    report.add("wreath.sigma_hom", "sigma: B -> A wr B is a homomorphism", sigma_ok)
    report.add(
        "wreath.exact",
        "Set(B, A) -> A wr B -> B is a split extension",
        all(W.pi(W.kappa(h)) == 0 for h in range(W.F.order)) and W.W.order == A.order ** B.order * B.order,
    )
    if args.compare:
        H = _load_group(args.compare)
        iso = is_isomorphic(W.W, H, args.budget or HOM_BUDGET)
        report.data["isomorphism"] = list(iso.map) if iso else None
        report.add("wreath.isomorphic", f"A wr B is isomorphic to {H.name}", iso is not None)


def cmd_embed(args, report: Report) -> None:
    E = _load_extension(args.extension)
    s = _load_section(E, args.section)
    W = wreath_product(E.A, E.B, args.budget or TABLE_BUDGET)
    m = kk_embed(E, s, W)
    rep = verify_embedding(m)
    report.data["section"] = list(s.map)
    report.data["phi_G"] = [W.element(x).to_json() for x in m.phi_G.map]
    report.data["embedding"] = rep.to_json()
    report.data["injective"] = rep.injective_A and rep.injective_G
    report.add("embed.injective", "the Kaluzhnin-Krasner map is injective", rep.injective_A and rep.injective_G)
    report.add("embed.diagram", "it is a morphism of extensions into the wreath product", rep.diagram_ok)
    hom = is_split(E)
    if hom is not None and tuple(s.map) == hom.map:
        S = make_split_extension(E, hom)
        srep = verify_embedding(eta_split(S, W), wreath=W)
        report.add("embed.equivariant", "split case: the kernel map is B-equivariant", bool(srep.equivariant), srep.witnesses)


def cmd_verify_universality(args, report: Report) -> None:
    E = _load_extension(args.extension)
    s = _load_section(E, args.section) if args.section else None
    hom = hom_check(E.B, E.G, s.map) if s else is_split(E)
    if hom is None:
        raise InputError("the extension does not split; universality needs a split extension")
    S = make_split_extension(E, hom)
    C = _load_group(args.target) if args.target else S.A
    W_A = wreath_product(S.A, S.B, args.budget or TABLE_BUDGET)
    W_C = wreath_product(C, S.B, args.budget or TABLE_BUDGET)
    eta = eta_split(S, W_A)
    rounds = []
    for gamma in iter_homs(S.A, C, args.budget or HOM_BUDGET):
        alpha = compose_split_morphisms(R_on_morphism(W_A, W_C, gamma), eta)
        bar, count = universal_factorization(S, alpha, W_C, W_A)
        rounds.append({"gamma": list(gamma.map), "recovered": list(bar.map), "count": count})
    ok = all(r["gamma"] == r["recovered"] and r["count"] == 1 for r in rounds)
    report.data["round_trips"] = rounds
    report.add(
        "universality.round_trips",
        "every alpha = R(gamma) eta factors through a unique gamma",
        ok,
        [r for r in rounds if r["gamma"] != r["recovered"] or r["count"] != 1],
        f"{len(rounds)} homs {S.A.name} -> {C.name}",
    )


def cmd_beck_universal(args, report: Report) -> None:
    if not _is_file(args.module) and args.module == "z3_inversion":
        mod = z3_inversion()
    else:
        mod = build_beck(parse_input(args.module, "beck"))
    unit = beck_unit(mod)
    report.add("beck.unit", "the unit into the coinduced module is an injective module map", unit.map.is_injective())
    target = _load_group(args.target) if args.target else mod.M
    budget = args.budget or HOM_BUDGET
    if args.gamma:
        gdata = parse_input(args.gamma, "gamma").data if _is_file(args.gamma) else parse_text(args.gamma, "gamma").data
        if isinstance(gdata, dict):
            if "target" in gdata:
                target = build_group(gdata["target"])
            gdata = gdata["map"]
        gammas = [hom_check(mod.M, target, gdata)]
    else:
        gammas = list(iter_homs(mod.M, target, budget))
    candidates = equivariant_maps(mod, coinduced(mod.B, target), budget)
    results = []
    for gamma in gammas:
        r = beck_universal(mod, gamma, budget, candidates)
        results.append({"gamma": list(gamma.map), "lift": list(r.lift.map.map), "satisfiers": r.satisfiers})
    report.data["results"] = results
    report.data["equivariant_maps"] = len(candidates)
    report.add(
        "beck.universal",
        "each gamma lifts to exactly one module map into the coinduced module",
        all(r["satisfiers"] == 1 for r in results),
        detail=f"{len(results)} gammas",
    )


def cmd_free_kernel(args, report: Report) -> None:
    E = _load_extension(args.extension)
    words = enumerate_kernel_words(E, args.maxlen)
    bad = [str(w) for w in words if pres_to_word(word_to_pres(E, w)) != w]
    report.data["kernel_words"] = len(words)
    report.data["sample"] = [{"word": str(w), "pres": str(word_to_pres(E, w))} for w in words[:20]]
    report.add("free.phi_psi", "phi after psi is the identity on reduced kernel words", not bad, bad[:10])
    pres = list(enumerate_pres_words(E, args.maxgens))
    bad = [str(p) for p in pres if word_to_pres(E, pres_to_word(p)) != pres_normal_form(p)]
    report.data["pres_words"] = len(pres)
    report.add("free.psi_phi", "psi after phi is the normal form on presentation words", not bad, bad[:10])


def cmd_crude(args, report: Report) -> None:
    E = _load_extension(args.extension)
    chosen = [_load_section(E, args.section)] if args.section else sections(E)
    W = wreath_product(E.A, E.B, args.budget or TABLE_BUDGET)
    ups = upsilon(E)
    G = E.G
    bad = [[g, h] for g in G for h in G if crude_mul(E, ups[g], ups[h]) != ups[G.mul(g, h)]]
    report.add("crude.homomorphism", "the crude unit is a homomorphism", not bad, bad[:10])
    report.add("crude.injective", "the crude unit is injective", len(set(ups)) == G.order)
    failures = []
    instances = 0
    for s in chosen:
        try:
            instances += compose_recover(E, s, W).relation_instances
        except ConventionError as exc:
            failures.append({"section": list(s.map), "error": str(exc), "witness": exc.witness})
    report.add(
        "crude.chi_recovery",
        "chi is well defined and recovers the classical formula",
        not failures,
        failures,
        f"{len(chosen)} sections, {instances} relation instances",
    )


def cmd_lie_embed(args, report: Report) -> None:
    fixtures = lie_fixtures()
    if not _is_file(args.extension) and args.extension in fixtures:
        fx = fixtures[args.extension]
        E, s = fx.ext, fx.section
        if args.section:
            s = build_lie_section(E, parse_input(args.section, "lie-section"))
    else:
        E = build_lie_extension(parse_input(args.extension, "lie-extension"))
        if not args.section:
            raise InputError("--section is required for an extension read from a file")
        s = build_lie_section(E, parse_input(args.section, "lie-section"))
    d = args.degree
    rep = verify_lie_embedding(E, s, d)
    report.extend(rep.checks)
    report.data["split_tier"] = rep.split_tier
    report.data["degree"] = d
    report.data["embedding"] = [lie_kk_embed(E, s, E.G.basis(i), d).to_json() for i in range(E.G.dim)]
    report.data["convention_probe"] = convention_probe(E, s, d)


def cmd_suite(args, report: Report) -> Report:
    return run_suite(report.command)


COMMANDS = {
    "group": cmd_group,
    "wreath": cmd_wreath,
    "embed": cmd_embed,
    "verify-universality": cmd_verify_universality,
    "beck-universal": cmd_beck_universal,
    "free-kernel": cmd_free_kernel,
    "crude": cmd_crude,
    "lie-embed": cmd_lie_embed,
    "suite": cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="also write the JSON report to this file")
    common.add_argument("--text", action="store_true", help="print a readable summary instead of JSON")
    common.add_argument("--budget", type=int, help="enumeration / table size budget")

    p = argparse.ArgumentParser(prog="wreathkit", description="Wreath product embeddings, verified on small instances.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", parents=[common], help="validate a group and report its invariants")
    g.add_argument("group", help="group JSON file or Zn")
    g.add_argument("--compare", help="second group to test for isomorphism")

    w = sub.add_parser("wreath", parents=[common], help="build A wr B")
    w.add_argument("--A", required=True)
    w.add_argument("--B", required=True)
    w.add_argument("--compare", help="group to test A wr B against for isomorphism")

    e = sub.add_parser("embed", parents=[common], help="the embedding of an extension into A wr B")
    e.add_argument("--extension", required=True, help="extension JSON or fixture name")
    e.add_argument("--section", help="section index, JSON list, or JSON file")

    u = sub.add_parser("verify-universality", parents=[common], help="factor R(gamma) eta back through gamma")
    u.add_argument("--extension", required=True)
    u.add_argument("--section", help="homomorphic section; found by search when omitted")
    u.add_argument("--target", help="group C for gamma: A -> C (default A)")

    b = sub.add_parser("beck-universal", parents=[common], help="lift gamma: M -> A into the coinduced module")
    b.add_argument("--module", required=True, help="Beck module JSON or z3_inversion")
    b.add_argument("--gamma", help="hom M -> A as a JSON list or file; all homs when omitted")
    b.add_argument("--target", help="group A (default: M)")

    f = sub.add_parser("free-kernel", parents=[common], help="presentation of the fold-map kernel")
    f.add_argument("--extension", required=True)
    f.add_argument("--maxlen", type=int, default=6)
    f.add_argument("--maxgens", type=int, default=3)

    c = sub.add_parser("crude", parents=[common], help="crude embedding and chi")
    c.add_argument("--extension", required=True)
    c.add_argument("--section")

    lie = sub.add_parser("lie-embed", parents=[common], help="truncated Lie wreath embedding")
    lie.add_argument("--extension", required=True, help="Lie extension JSON or fixture name")
    lie.add_argument("--section", help="section matrix JSON")
    lie.add_argument("--degree", type=int, default=3)

    sub.add_parser("suite", parents=[common], help="run every acceptance check on the built-in fixtures")
    return p


def run(argv: list[str] | None = None) -> tuple[int, Report | None]:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    report = Report(["wreathkit", *argv])
    try:
        out = COMMANDS[args.command](args, report)
        if out is not None:
            report = out
    except (SchemaError, AlgebraError, InputError) as exc:
        print(f"wreathkit: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT, None
    except ConventionError as exc:
        report.add("convention", "internal convention check", False, [exc.witness], str(exc))
    text = report.text() if args.text else report.dumps()
    print(text)
    if args.out:
        Path(args.out).write_text(report.dumps() + "\n")
    return report.exit_code, report


def main(argv: list[str] | None = None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
