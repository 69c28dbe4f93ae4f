"""Command-line interface.

Graphs travel between subcommands as graph6 text on stdin/stdout, so
commands compose with ordinary shell pipes::

    prismatic prism --name paley:5 | prismatic aut

Analysis subcommands print machine-readable JSON reports.  Exit status is
nonzero only for input errors (bad graph6, unknown constructor, missing
flags); mathematical "no" answers are ordinary results with exit 0.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from itertools import combinations

from .families import named_graph
from .graphio import parse_graph6, write_graph6
from .graphs import Graph, build_graph, complementary_prism
from .morphisms import (
    BudgetExhausted,
    antimorphism_facts,
    automorphism_group,
    compute_core,
    find_antimorphisms,
    find_isomorphisms,
    has_regular_subgroup,
    is_self_complementary,
    verify_retraction,
)
from .prisms import (
    classify_core_case,
    detect_family,
    not_lex_product_check,
    prism_predicates,
    ratio_class,
    structured_prism_aut,
)
from .spectral import (
    numeric_spectrum,
    prism_spectrum_closed_form,
    srg_analysis,
    theta_bounds,
)
from .structural import (
    cheeger_brute_force,
    cheeger_closed_form,
    hamiltonian,
    invariants,
    kneser_facts,
    prism_ham_constructions,
)


class InputError(Exception):
    """Bad user input (unknown name, malformed graph6, missing flag)."""


def _json_default(obj):
    if isinstance(obj, Fraction):
        return {"numerator": obj.numerator, "denominator": obj.denominator, "str": str(obj)}
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, "__dataclass_fields__"):
        return {k: getattr(obj, k) for k in obj.__dataclass_fields__}
    return str(obj)


def emit(report: dict) -> None:
    json.dump(report, sys.stdout, default=_json_default, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def load_graph(args) -> Graph:
    sources = [s for s in (getattr(args, "name", None), getattr(args, "g6", None)) if s]
    if len(sources) > 1:
        raise InputError("give at most one of --name / --g6")
    if getattr(args, "name", None):
        try:
            return named_graph(args.name)
        except (KeyError, ValueError) as e:
            raise InputError(f"unknown constructor {args.name!r}: {e}") from e
    if getattr(args, "g6", None):
        try:
            return parse_graph6(args.g6)
        except ValueError as e:
            raise InputError(f"bad graph6: {e}") from e
    data = sys.stdin.readline().strip()
    if not data:
        raise InputError("no graph given: use --name, --g6, or pipe graph6 on stdin")
    try:
        return parse_graph6(data)
    except ValueError as e:
        raise InputError(f"bad graph6 on stdin: {e}") from e


def budget_from(args) -> int | None:
    if getattr(args, "budget_nodes", None) is not None:
        return args.budget_nodes
    env = os.environ.get("PRISMATIC_BUDGET")
    return int(env) if env else None


def detect_prism_layout(g: Graph) -> Graph | None:
    """Recognize the standard prism labeling (base, complement, matching).

    Returns the base graph when vertices 0..n-1 induce a graph whose
    complement is induced by n..2n-1 and the only cross edges are the
    identity matching; None otherwise.
    """
    if g.n == 0 or g.n % 2:
        return None
    n = g.n // 2
    for v in range(n):
        for u in range(n):
            if g.has_edge(v, n + u) != (v == u):
                return None
    side1 = g.induced(range(n))
    side2 = g.induced(range(n, 2 * n))
    if side2.adj != side1.complement().adj:
        return None
    return side1


# ---------------------------------------------------------------------------
# Subcommands.
# ---------------------------------------------------------------------------


def cmd_construct(args) -> int:
    g = load_graph(args)
    if args.json:
        emit({
            "command": "construct",
            "n": g.n,
            "edges": g.edge_count(),
            "graph6": write_graph6(g),
        })
    else:
        print(write_graph6(g))
    return 0


def cmd_prism(args) -> int:
    g = load_graph(args)
    pg = complementary_prism(g)
    if args.json:
        emit({"command": "prism", "n": pg.n, "edges": pg.edge_count(), "graph6": write_graph6(pg)})
    else:
        print(write_graph6(pg))
    return 0


def cmd_aut(args) -> int:
    g = load_graph(args)
    group = automorphism_group(g)
    report = {
        "command": "aut",
        "n": g.n,
        "order": group.order,
        "orbits": [sorted(o) for o in group.orbits],
        "transitive": group.is_transitive(),
    }
    base = detect_prism_layout(g)
    if base is not None:
        structured = structured_prism_aut(base)
        if structured.order != group.order:
            raise AssertionError("structured prism group disagrees with brute force")
        base_group = automorphism_group(base)
        rc = ratio_class(base)
        if base_group.order * rc.value != group.order:
            raise AssertionError("ratio classification disagrees with group orders")
        report["prism_of"] = {
            "n": base.n,
            "base_aut_order": base_group.order,
            "ratio": rc.value,
            "ratio_reason": rc.reason,
            "structure": structured.structure_label,
        }
    emit(report)
    return 0


def cmd_antimorph(args) -> int:
    g = load_graph(args)
    antis = find_antimorphisms(g, limit=args.limit)
    report = {
        "command": "antimorph",
        "n": g.n,
        "self_complementary": bool(antis),
        "found": len(antis),
    }
    if antis:
        order, fixed = antimorphism_facts(antis[0], g)
        report["first"] = {
            "image": list(antis[0].image),
            "order": order,
            "fixed_points": sorted(fixed),
        }
    emit(report)
    return 0


def cmd_core(args) -> int:
    g = load_graph(args)
    base = None
    if args.prism:
        base = g
        g = complementary_prism(base)
    try:
        rep = compute_core(g, budget=budget_from(args))
    except BudgetExhausted:
        emit({"command": "core", "status": "unknown", "note": "budget exhausted before any retraction"})
        return 0
    report = {
        "command": "core",
        "n": g.n,
        "status": rep.status,
        "core_size": len(rep.core_vertices),
        "core_vertices": sorted(rep.core_vertices),
        "is_core_itself": rep.is_core_itself,
    }
    if base is not None and rep.status == "ok" and base.n != 2:
        case = classify_core_case(base, rep)
        report["case"] = case.case
        if case.V1 or case.V2 or case.V3:
            report["partition"] = {"V1": case.V1, "V2": case.V2, "V3": case.V3}
    emit(report)
    return 0


def cmd_classify(args) -> int:
    g = load_graph(args)
    matches = detect_family(g)
    group = structured_prism_aut(g)
    rc = ratio_class(g)
    preds = prism_predicates(g)
    report = {
        "command": "classify",
        "n": g.n,
        "family_matches": [
            {
                "kind": m.kind,
                "inner_size": m.inner.n,
                "inner_vertices": m.inner_vertices,
                "outer": m.outer,
            }
            for m in matches
        ],
        "self_complementary": is_self_complementary(g),
        "prism_aut_order": group.order,
        "prism_aut_structure": group.structure_label,
        "ratio": rc.value,
        "ratio_reason": rc.reason,
        "prism_vertex_transitive": preds.vertex_transitive,
        "prism_is_cayley": preds.is_cayley,
        "prism_diameter": preds.diameter,
    }
    if 2 * g.n <= 16:
        report["prism_not_lex_product"] = not_lex_product_check(complementary_prism(g))
    emit(report)
    return 0


def cmd_cheeger(args) -> int:
    g = load_graph(args)
    if args.prism:
        rep = cheeger_closed_form(g)
        report = {
            "command": "cheeger",
            "of": "complementary prism",
            "base_n": g.n,
            "value": rep.value,
            "method": rep.method,
            "witness_S": rep.witness[0],
            "witness_T": rep.witness[1],
        }
        if args.brute or 2 * g.n <= 16:
            brute = cheeger_brute_force(complementary_prism(g))
            report["brute_force_value"] = brute.value
            if brute.value != rep.value:
                raise AssertionError("closed form disagrees with brute force")
    else:
        rep = cheeger_brute_force(g)
        report = {
            "command": "cheeger",
            "n": g.n,
            "value": rep.value,
            "method": rep.method,
            "witness_S": rep.witness[0],
            "witness_T": rep.witness[1],
        }
    emit(report)
    return 0


def cmd_spectrum(args) -> int:
    g = load_graph(args)
    report = {"command": "spectrum", "n": g.n}
    numeric = numeric_spectrum(g)
    report["numeric"] = [[round(v, 12), m] for v, m in numeric.multiplicity_pairs()]
    if args.prism_closed_form:
        closed = prism_spectrum_closed_form(g)
        report["prism_closed_form"] = [[round(v, 12), m] for v, m in closed.multiplicity_pairs()]
        prism_numeric = numeric_spectrum(complementary_prism(g))
        diff = max(
            abs(a - b)
            for a, b in zip(closed.eigenvalues, prism_numeric.eigenvalues)
        )
        report["prism_numeric_max_diff"] = diff
        if diff > args.tolerance:
            raise AssertionError(f"closed form and numeric spectra differ by {diff}")
    emit(report)
    return 0


def cmd_srg(args) -> int:
    g = load_graph(args)
    rep = srg_analysis(g)
    report = {
        "command": "srg",
        "n": g.n,
        "strongly_regular": rep.srg_params is not None,
        "one_walk_regular": bool(rep.one_walk_regular),
    }
    if rep.srg_params:
        p = rep.srg_params
        report["parameters"] = [p.n, p.k, p.lam, p.mu]
    if not rep.one_walk_regular:
        w = rep.one_walk_regular
        report["witness"] = {"power": w.power, "kind": w.kind, "entries": list(w.entries)}
    if rep.edge_witness is not None:
        w = rep.edge_witness
        report["edge_witness"] = {"power": w.power, "kind": w.kind, "entries": list(w.entries)}
    if rep.srg_sc_eigen:
        report["self_complementary_eigenvalues"] = list(rep.srg_sc_eigen)
    emit(report)
    return 0


def cmd_theta(args) -> int:
    g = load_graph(args)
    upper, complement_lower = theta_bounds(g)
    emit({
        "command": "theta",
        "n": g.n,
        "upper_bound": upper,
        "complement_lower_bound": complement_lower,
    })
    return 0


def cmd_hamilton(args) -> int:
    g = load_graph(args)
    report = {"command": "hamilton", "n": g.n, "mode": args.mode}
    budget = budget_from(args)
    try:
        if args.constructions:
            rep = prism_ham_constructions(g, budget=budget)
            report["prism_p8_path"] = rep.p8_path
            report["prism_ham_connected_pairs"] = (
                len(rep.ham_connected) if rep.ham_connected else 0
            )
            report["notes"] = list(rep.notes)
        elif args.mode == "path_between":
            if args.endpoints is None:
                raise InputError("path_between needs --endpoints U,V")
            u, v = (int(x) for x in args.endpoints.split(","))
            report["witness"] = hamiltonian(g, "path_between", u, v, budget=budget)
        elif args.mode == "connected":
            got = hamiltonian(g, "connected", budget=budget)
            report["hamiltonian_connected"] = got is not None
            if got:
                report["pairs"] = len(got)
        else:
            report["witness"] = hamiltonian(g, args.mode, budget=budget)
    except BudgetExhausted:
        report["status"] = "unknown"
        report["note"] = "search budget exhausted"
    emit(report)
    return 0


def cmd_invariants(args) -> int:
    g = load_graph(args)
    rep = invariants(g)
    report = {
        "command": "invariants",
        "n": g.n,
        "alpha": rep.alpha,
        "omega": rep.omega,
        "chi": rep.chi,
        "kappa": rep.kappa,
        "exact": rep.exact,
        "witnesses": {
            "independent_set": rep.witnesses["independent_set"],
            "clique": rep.witnesses["clique"],
            "coloring": rep.witnesses["coloring"],
            "cut": rep.witnesses["cut"],
        },
    }
    emit(report)
    return 0


# ---------------------------------------------------------------------------
# Fixture verification and the cross-oracle sweep.
# ---------------------------------------------------------------------------


def _verify_exa1() -> dict:
    from .families import exa1_antimorphism, exa1_graph, exa1_prism_retraction
    from .graphs import complete_graph

    g = exa1_graph()
    sigma = exa1_antimorphism()
    order, fixed = antimorphism_facts(sigma, g)
    prism = complementary_prism(g)
    psi = exa1_prism_retraction()
    image = sorted(set(psi))
    if not verify_retraction(prism, psi, image):
        raise AssertionError("published exa1 retraction failed verification")
    rep = compute_core(prism, seed_endomorphisms=[psi])
    case = classify_core_case(g, rep)
    core_graph = prism.induced(sorted(rep.core_vertices))
    is_k5 = bool(find_isomorphisms(core_graph, complete_graph(5), limit=1))
    return {
        "fixture": "exa1",
        "antimorphism": {"order": order, "fixed_points": sorted(fixed)},
        "retraction_verified": True,
        "core_size": len(rep.core_vertices),
        "core_is_k5": is_k5,
        "case": case.case,
    }


def _verify_mysterious505() -> dict:
    from .families import mysterious505, mysterious505_prism_retraction

    t0 = time.time()
    fix = mysterious505()
    g = fix.graph
    degs = set(g.degrees())
    prism = complementary_prism(g)
    psi = mysterious505_prism_retraction(fix)
    image = sorted(set(psi))
    if not verify_retraction(prism, psi, image):
        raise AssertionError("published 505 retraction failed verification")
    kn = kneser_facts()
    return {
        "fixture": "mysterious505",
        "n": g.n,
        "regular": degs == {194},
        "connected": g.is_connected(),
        "complement_connected": g.complement().is_connected(),
        "retraction_verified": True,
        "retract_size": len(image),
        "kneser": {
            "omega": kn.omega_kneser,
            "ekr_clique": kn.ekr_clique_size,
            "min_rule_proper": kn.min_rule_coloring_proper,
        },
        "seconds": round(time.time() - t0, 2),
    }


def _verify_petersen() -> dict:
    from .families import petersen_graph
    from .graphs import cycle_graph

    pet = petersen_graph()
    prism = complementary_prism(cycle_graph(5))
    iso = bool(find_isomorphisms(prism, pet, limit=1))
    brute = automorphism_group(prism)
    structured = structured_prism_aut(cycle_graph(5))
    rc = ratio_class(cycle_graph(5))
    core = compute_core(pet)
    return {
        "fixture": "petersen",
        "prism_of_c5_isomorphic": iso,
        "aut_order_brute": brute.order,
        "aut_order_structured": structured.order,
        "ratio": rc.value,
        "is_core": core.is_core_itself,
    }


def _verify_f9() -> dict:
    from .families import figure_f9
    from .structural import vertex_connectivity

    out = {"fixture": "figure_f9"}
    for i in (1, 2, 3, 4):
        g = figure_f9(i)
        antis = find_antimorphisms(g, limit=1)
        order, fixed = antimorphism_facts(antis[0], g)
        entry = {
            "self_complementary": bool(antis),
            "antimorphism_order": order,
            "fixed_points": len(fixed),
        }
        rep = srg_analysis(g)
        if rep.srg_params:
            p = rep.srg_params
            entry["srg"] = [p.n, p.k, p.lam, p.mu]
        if not rep.one_walk_regular:
            entry["walk_regularity_witness_power"] = rep.one_walk_regular.power
        entry["kappa"] = vertex_connectivity(g)[0]
        out[f"f9_{i}"] = entry
    return out


FIXTURE_CHECKS = {
    "exa1": _verify_exa1,
    "mysterious505": _verify_mysterious505,
    "petersen": _verify_petersen,
    "f9": _verify_f9,
}


def cmd_verify_fixture(args) -> int:
    if args.fixture not in FIXTURE_CHECKS:
        raise InputError(
            f"unknown fixture {args.fixture!r}; choose from {sorted(FIXTURE_CHECKS)}"
        )
    emit(FIXTURE_CHECKS[args.fixture]())
    return 0


def _all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def cmd_sweep(args) -> int:
    """Cross-oracle battery over every labeled graph on <= max-n vertices."""
    checked = 0
    t0 = time.time()
    for n in range(1, args.max_n + 1):
        for g in _all_graphs(n):
            prism = complementary_prism(g)
            structured = structured_prism_aut(g)
            brute = automorphism_group(prism)
            if structured.order != brute.order:
                raise AssertionError(f"aut order mismatch on {g.adj}")
            if {p.image for p in structured.elements} != {p.image for p in brute.elements}:
                raise AssertionError(f"aut group mismatch on {g.adj}")
            rc = ratio_class(g)
            base_order = automorphism_group(g).order
            if rc.value not in (1, 2, 4, 12) or base_order * rc.value != brute.order:
                raise AssertionError(f"ratio classification failed on {g.adj}")
            if not detect_family(g):
                half = g.n
                for p in brute.elements:
                    diagonal = all(p.image[v] < half for v in range(half))
                    swap = all(p.image[v] >= half for v in range(half))
                    if not (diagonal or swap):
                        raise AssertionError(f"automorphism dichotomy failed on {g.adj}")
            closed = cheeger_closed_form(g)
            brute_h = cheeger_brute_force(prism)
            if closed.value != brute_h.value:
                raise AssertionError(f"Cheeger mismatch on {g.adj}")
            checked += 1
    emit({
        "command": "sweep",
        "max_n": args.max_n,
        "graphs_checked": checked,
        "failures": 0,
        "seconds": round(time.time() - t0, 1),
    })
    return 0


# ---------------------------------------------------------------------------
# Argument parsing.
# ---------------------------------------------------------------------------


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--name", help="named constructor, e.g. paley:9, cycle:5, mysterious505")
    p.add_argument("--g6", help="graph6 string (otherwise read from stdin)")


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=int, default=None, help="search node budget")
    p.add_argument("--threads", type=int, default=1, help="reserved; searches are single-threaded")
    p.add_argument("--json", action="store_true", help="JSON report even for graph-emitting commands")
    p.add_argument("--tolerance", type=float, default=1e-9, help="numeric comparison tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prismatic",
        description="complementary prisms: constructions, automorphisms, cores, spectra, expansion",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _add_input_flags(p)
        _add_common_flags(p)
        p.set_defaults(fn=fn)
        return p

    add("construct", cmd_construct, help="emit a named graph as graph6")
    add("prism", cmd_prism, help="emit the complementary prism as graph6")
    add("aut", cmd_aut, help="automorphism group; recognizes prism labelings")
    p = add("antimorph", cmd_antimorph, help="antimorphisms (isomorphisms onto the complement)")
    p.add_argument("--limit", type=int, default=None, help="stop after this many")
    p = add("core", cmd_core, help="compute the core by retraction descent")
    p.add_argument("--prism", action="store_true", help="take the prism of the input first")
    add("classify", cmd_classify, help="family membership, ratio class, prism predicates")
    p = add("cheeger", cmd_cheeger, help="Cheeger number (closed form for prisms)")
    p.add_argument("--prism", action="store_true", help="closed form for the prism of the input")
    p.add_argument("--brute", action="store_true", help="force the brute-force cross-check")
    p = add("spectrum", cmd_spectrum, help="adjacency spectrum by cyclic Jacobi")
    p.add_argument("--prism-closed-form", action="store_true",
                   help="also compute the prism spectrum closed form and cross-check")
    add("srg", cmd_srg, help="strong regularity and 1-walk-regularity analysis")
    add("theta", cmd_theta, help="Lovasz theta eigenvalue bound for regular graphs")
    p = add("hamilton", cmd_hamilton, help="Hamiltonian path/cycle searches and constructions")
    p.add_argument("--mode", default="path", choices=["path", "cycle", "path_between", "connected"])
    p.add_argument("--endpoints", help="U,V for path_between")
    p.add_argument("--constructions", action="store_true",
                   help="spliced prism Hamiltonian constructions for the input base graph")
    add("invariants", cmd_invariants, help="alpha, omega, chi, kappa with witnesses")
    p = sub.add_parser("verify-fixture", help="run a fixture's verification battery")
    p.add_argument("fixture", help="exa1, mysterious505, petersen, or f9")
    _add_common_flags(p)
    p.set_defaults(fn=cmd_verify_fixture)
    p = sub.add_parser("sweep", help="cross-oracle battery over all small graphs")
    p.add_argument("--max-n", type=int, default=5)
    _add_common_flags(p)
    p.set_defaults(fn=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
