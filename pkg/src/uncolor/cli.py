"""Command-line front end: generate family graphs, measure uncolorability,
verify certificates, and survey a corpus directory against the invariants
the measures are known to satisfy.

Exit codes: 0 success, 1 invariant violation or failed verification,
2 usage or parse error, 3 budget exhausted with unknowns.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators as gens
from .coloring import (
    EXACT,
    PartialEdgeColoring,
    SearchBudget,
    chromatic_index,
    coloring_certificate,
    edge_deletion_certificate,
    parity_signature,
    resistance,
    try_total_coloring,
    verify,
)
from .factorization import INFINITE, oddness, two_factor
from .multigraph import (
    GraphFormatError,
    MultiGraph,
    VertexBudgetError,
    delete,
    format_mg,
    is_s_graph,
    load_mg,
    max_degree,
    save_mg,
)
from .vertex_measures import (
    ReinsertionTrace,
    RuleStep,
    r_v,
    r_v_prime,
    replay_trace,
    vertex_deletion_certificate,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


# ---------------------------------------------------------------------------
# gen


def _sum_part(token: str) -> tuple[MultiGraph, int]:
    name, *params = token.split(":")
    if name == "complete":
        return gens.complete_graph(int(params[0])), 0
    if name == "bipartite":
        return gens.complete_bipartite(int(params[0]), int(params[1])), 0
    if name == "meredith":
        return gens.meredith(int(params[0]))
    raise ValueError(f"unknown sum part '{token}'")


def _generate(args) -> tuple[MultiGraph, str]:
    fam = args.family
    p = args.params
    if fam == "complete":
        return gens.complete_graph(int(p[0])), f"complete n={p[0]}"
    if fam == "cycle":
        return gens.cycle_graph(int(p[0])), f"cycle n={p[0]}"
    if fam == "bipartite":
        return gens.complete_bipartite(int(p[0]), int(p[1])), f"bipartite {p[0]}x{p[1]}"
    if fam == "petersen":
        return gens.petersen(), "petersen"
    if fam == "meredith":
        g, e = gens.meredith(int(p[0]))
        return g, f"meredith s={p[0]} designated-edge={e}"
    if fam == "sum":
        part, count = p[0], int(p[1])
        g, e = _sum_part(part)
        out = gens.sum_construction([(g, e)] * count)
        return out.graph, f"ring sum of {count} x {part}"
    if fam == "ok":
        k, s = int(p[0]), int(p[1])
        return gens.meredith_ring(2 * k + 1, s), f"meredith ring copies={2 * k + 1} s={s}"
    if fam == "triangle-chain":
        return gens.triangle_chain(int(p[0])), f"triangle chain k={p[0]}"
    if fam == "odd-delta":
        return gens.odd_delta(int(p[0])), f"odd-delta extremal k={p[0]}"
    if fam == "join2":
        g1, _ = load_mg(p[0])
        g2, _ = load_mg(p[2])
        joined, _ = gens.two_edge_join(g1, int(p[1]), g2, int(p[3]))
        return joined, f"two-edge join of {p[0]}#{p[1]} and {p[2]}#{p[3]}"
    raise ValueError(f"unknown family '{fam}'")


def cmd_gen(args) -> int:
    try:
        g, note = _generate(args)
    except (ValueError, IndexError, GraphFormatError, OSError) as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_USAGE
    comment = f"generator: {note}"
    if args.output:
        save_mg(args.output, g, [comment])
        print(f"wrote {args.output} ({g.n} vertices, {g.m} edges)")
    else:
        sys.stdout.write(format_mg(g, [comment]))
    return EXIT_OK


# ---------------------------------------------------------------------------
# measure


def _budget(args) -> SearchBudget:
    return SearchBudget(nodes=args.node_budget, time_limit_s=args.time_limit_s)


def _oddness_value_json(value) -> int | str | None:
    if value is None:
        return None
    if value == INFINITE:
        return "infinite"
    return int(value)


def measure_graph(
    g: MultiGraph,
    which: set[str],
    budget: SearchBudget,
    subset_budget: int = 5_000_000,
    rv_cap: int | None = None,
) -> dict:
    """Run the requested measures; returns a report dict with certificates
    attached in-memory (caller decides where to write them)."""
    simple = len({(min(u, v), max(u, v)) for u, v in g.edges}) == g.m
    report: dict = {
        "schema": 1,
        "n": g.n,
        "m": g.m,
        "delta": max_degree(g),
        "regular": g.is_regular(),
        "simple": simple,
        "measures": {},
    }
    certs: dict[str, dict] = {}
    if "chi" in which:
        res = chromatic_index(g, budget)
        entry = {
            "status": res.status,
            "value": res.value,
            "lower": res.lower_bound,
            "upper": res.upper_bound,
        }
        if res.coloring is not None:
            certs["chi"] = coloring_certificate(res.coloring)
        report["measures"]["chi"] = entry
    if "r" in which:
        res = resistance(g, budget)
        entry = {
            "status": res.status,
            "value": res.value,
            "lower": res.lower_bound,
            "upper": res.upper_bound,
        }
        if res.deleted is not None:
            certs["r"] = edge_deletion_certificate(res.deleted)
            certs["r-coloring"] = coloring_certificate(res.coloring)
        report["measures"]["r"] = entry
    if "rv" in which:
        res = r_v(g, budget, subset_budget, max_size=rv_cap)
        report["measures"]["r_v"] = {
            "status": res.status,
            "value": res.value,
            "lower": res.lower_bound,
            "upper": res.upper_bound,
        }
        if res.witness is not None:
            certs["rv"] = vertex_deletion_certificate(res)
    if "rvp" in which:
        res = r_v_prime(g, budget, subset_budget, max_size=rv_cap)
        report["measures"]["r_v_prime"] = {
            "status": res.status,
            "value": res.value,
            "lower": res.lower_bound,
            "upper": res.upper_bound,
        }
        if res.witness is not None:
            certs["rvp"] = vertex_deletion_certificate(res)
    if "oddness" in which:
        if g.is_regular():
            res = oddness(g, budget)
            report["measures"]["oddness"] = {
                "status": res.status,
                "value": _oddness_value_json(res.value),
            }
            if res.factorization is not None:
                certs["oddness"] = res.factorization.certificate()
        else:
            report["measures"]["oddness"] = {
                "status": "not-applicable",
                "value": None,
            }
    report["certificates"] = certs
    return report


_MEASURE_LABELS = {
    "chi": "chi'",
    "r": "r",
    "r_v": "r_v",
    "r_v_prime": "r'_v",
    "oddness": "oddness",
}


def _print_measure_table(name: str, report: dict) -> None:
    head = (
        f"{name}: n={report['n']} m={report['m']} delta={report['delta']}"
        f" regular={report['regular']}"
    )
    print(head)
    for key, label in _MEASURE_LABELS.items():
        if key not in report["measures"]:
            continue
        entry = report["measures"][key]
        value = entry["value"]
        shown = "?" if value is None else value
        note = ""
        if entry["status"] not in (EXACT, "not-applicable") and "lower" in entry:
            note = f"  (in [{entry['lower']}, {entry['upper']}])"
        elif entry["status"] == "not-applicable":
            shown = "-"
        print(f"  {label:8s} {shown}{note}")


def cmd_measure(args) -> int:
    try:
        g, _ = load_mg(args.graph)
    except (GraphFormatError, OSError) as exc:
        print(f"measure: {exc}", file=sys.stderr)
        return EXIT_USAGE
    which = set()
    if args.all or not (args.chi or args.r or args.rv or args.rvp or args.oddness):
        which = {"chi", "r", "rv", "rvp", "oddness"}
    else:
        for flag, key in (
            (args.chi, "chi"), (args.r, "r"), (args.rv, "rv"),
            (args.rvp, "rvp"), (args.oddness, "oddness"),
        ):
            if flag:
                which.add(key)
    report = measure_graph(
        g, which, _budget(args), args.subset_budget, args.rv_cap
    )
    stem = Path(args.graph).stem
    report["name"] = stem
    cert_dir = Path(args.cert_dir) if args.cert_dir else Path(args.graph).parent
    cert_dir.mkdir(parents=True, exist_ok=True)
    paths = {}
    for key, cert in report["certificates"].items():
        path = cert_dir / f"{stem}.{key}.cert.json"
        path.write_text(json.dumps(cert, indent=2) + "\n", encoding="utf-8")
        paths[key] = str(path)
    report["certificates"] = paths
    report_path = cert_dir / f"{stem}.report.json"
    report_path.write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        _print_measure_table(stem, report)
        print(f"report: {report_path}")
    unknown = any(
        entry["status"] not in (EXACT, "not-applicable")
        for entry in report["measures"].values()
    )
    return EXIT_UNKNOWN if unknown else EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _verify_coloring(g: MultiGraph, data: dict) -> tuple[bool, str]:
    colors = data.get("colors")
    if not isinstance(colors, list) or len(colors) != g.m:
        return False, f"certificate covers {len(colors or [])} edges, graph has {g.m}"
    try:
        col = PartialEdgeColoring(int(data["palette"]), tuple(colors))
    except ValueError as exc:
        return False, str(exc)
    report = verify(g, col)
    if not report.proper:
        e1, e2 = report.violations[0]
        u = set(g.edges[e1]) & set(g.edges[e2])
        return False, f"edges {e1} and {e2} share vertex {min(u)} and a color"
    return True, f"proper, {report.uncolored_count} uncolored"


def _verify_edge_deletion(g: MultiGraph, data: dict, budget: SearchBudget) -> tuple[bool, str]:
    edges = data.get("edges", [])
    try:
        rest = delete(g, edges=edges).graph
    except ValueError as exc:
        return False, str(exc)
    status, _ = try_total_coloring(rest, max_degree(g), budget)
    if status == "sat":
        return True, f"deleting {len(edges)} edges leaves a Delta(G)-colorable graph"
    if status == "unsat":
        return False, "remainder is not Delta(G)-colorable"
    raise TimeoutError("verification undecided within budget")


def _verify_factorization(g: MultiGraph, data: dict) -> tuple[bool, str]:
    try:
        factors = [two_factor(g, ids) for ids in data.get("two_factors", [])]
    except ValueError as exc:
        return False, f"not a partition: {exc}"
    one = data.get("one_factor")
    seen: list[int] = [e for f in factors for e in f.edge_ids]
    if one is not None:
        covered: set[int] = set()
        for e in one:
            u, v = g.edges[e]
            if u in covered or v in covered:
                return False, f"one-factor repeats vertex on edge {e}"
            covered.update((u, v))
        if covered != set(range(g.n)):
            return False, "one-factor is not spanning"
        seen.extend(one)
    if sorted(seen) != list(range(g.m)):
        return False, "not a partition of the edge set"
    o = sum(f.odd_cycles for f in factors)
    if o != data.get("odd_cycles"):
        return False, f"odd cycle count is {o}, certificate says {data.get('odd_cycles')}"
    return True, f"valid factorization with {o} odd cycles"


def _verify_vertex_deletion(g: MultiGraph, data: dict, budget: SearchBudget) -> tuple[bool, str]:
    vertices = data.get("vertices", [])
    mode = data.get("mode")
    try:
        rest = delete(g, vertices=vertices).graph
    except ValueError as exc:
        return False, str(exc)
    if mode == "delta":
        status, _ = try_total_coloring(rest, max_degree(g), budget)
        if status == "unknown":
            raise TimeoutError("verification undecided within budget")
        ok = status == "sat"
        return ok, (
            "remainder colorable with Delta(G) colors" if ok
            else "remainder needs more than Delta(G) colors"
        )
    if mode == "class1":
        res = chromatic_index(rest, budget)
        if res.status != EXACT:
            raise TimeoutError("verification undecided within budget")
        ok = res.value == max_degree(rest)
        return ok, (
            "remainder is class 1" if ok
            else f"remainder has chromatic index {res.value} > {max_degree(rest)}"
        )
    return False, f"unknown vertex-deletion mode '{mode}'"


def _verify_trace(g: MultiGraph, data: dict) -> tuple[bool, str]:
    base = PartialEdgeColoring(int(data["palette"]), tuple(data["base"]))
    steps = tuple(
        RuleStep(
            rule=s["rule"], edge=s["edge"], alpha=s["alpha"], beta=s.get("beta"),
            gamma=s.get("gamma"), partner=s.get("partner"),
            cleared=s.get("cleared"), walk=tuple(s.get("walk", ())),
        )
        for s in data["steps"]
    )
    trace = ReinsertionTrace(int(data["vertex"]), int(data["palette"]), steps, 0)
    try:
        final = replay_trace(g, base, trace)
    except AssertionError as exc:
        return False, f"replay failed: {exc}"
    if list(final.colors) != list(data["final"]):
        return False, "replayed coloring differs from the recorded final coloring"
    if not verify(g, final).proper:
        return False, "replayed coloring is not proper"
    return True, f"trace replays to the recorded coloring in {len(steps)} steps"


def cmd_verify(args) -> int:
    try:
        g, _ = load_mg(args.graph)
        data = json.loads(Path(args.certificate).read_text(encoding="utf-8"))
    except (GraphFormatError, OSError, json.JSONDecodeError) as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    kind = data.get("kind")
    budget = _budget(args)
    try:
        if kind == "coloring":
            ok, reason = _verify_coloring(g, data)
        elif kind == "edge-deletion":
            ok, reason = _verify_edge_deletion(g, data, budget)
        elif kind == "factorization":
            ok, reason = _verify_factorization(g, data)
        elif kind == "vertex-deletion":
            ok, reason = _verify_vertex_deletion(g, data, budget)
        elif kind == "reinsertion-trace":
            ok, reason = _verify_trace(g, data)
        else:
            print(f"verify: unknown certificate kind '{kind}'", file=sys.stderr)
            return EXIT_USAGE
    except TimeoutError as exc:
        print(f"UNDECIDED: {exc}")
        return EXIT_UNKNOWN
    print(("PASS: " if ok else "FAIL: ") + reason)
    return EXIT_OK if ok else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# survey


def _ceil_two_thirds(delta: int) -> int:
    return -(-2 * delta // 3)


def survey_graph(g: MultiGraph, budget: SearchBudget, rv_cap: int,
                 s_graph_budget: int = 22) -> dict:
    """All invariant cells for one graph: each maps to 'ok', 'FAIL: ...'
    or None when not applicable / not decided within budget."""
    report = measure_graph(g, {"chi", "r", "oddness"}, budget, rv_cap=None)
    rv = r_v(g, budget, max_size=rv_cap)
    rvp = r_v_prime(g, budget, max_size=rv_cap)
    delta = report["delta"]
    regular = report["regular"]
    simple = report["simple"]
    chi = report["measures"]["chi"]
    r = report["measures"]["r"]
    xi = report["measures"]["oddness"]
    r_val = r["value"] if r["status"] == EXACT else None
    chi_val = chi["value"] if chi["status"] == EXACT else None
    xi_val = None
    xi_inf = False
    if xi["status"] == EXACT:
        if xi["value"] == "infinite":
            xi_inf = True
        else:
            xi_val = xi["value"]
    cells: dict[str, str | None] = {}

    def put(name: str, ok: bool | None, detail: str = "") -> None:
        cells[name] = None if ok is None else ("ok" if ok else f"FAIL {detail}")

    s = delta if regular else None
    even_order = g.n % 2 == 0
    # r <= oddness when both known and oddness finite
    if regular and r_val is not None and xi_val is not None:
        put("r<=xi", r_val <= xi_val, f"r={r_val} xi={xi_val}")
    else:
        put("r<=xi", None)
    # class-1 equivalence: r = 0 iff xi = 0 iff chi = s
    if regular and s is not None and s >= 2 and r_val is not None \
            and chi_val is not None and (xi_val is not None or xi_inf):
        flags = {r_val == 0, xi_val == 0 if xi_val is not None else False, chi_val == s}
        put("class1-equiv", len(flags) == 1, f"r={r_val} xi={xi['value']} chi={chi_val}")
    else:
        put("class1-equiv", None)
    if regular and even_order and r_val is not None:
        put("r!=1", r_val != 1, f"r={r_val}")
    else:
        put("r!=1", None)
    if regular and even_order and r_val is not None and (xi_val is not None or xi_inf):
        xi_is_2 = xi_val == 2
        put("r2<=>xi2", (r_val == 2) == xi_is_2, f"r={r_val} xi={xi['value']}")
    else:
        put("r2<=>xi2", None)
    if regular and not even_order and g.n > 0 and r_val is not None:
        ok = 2 * r_val >= s and (xi_val is None or 2 * xi_val >= s)
        put("odd-order>=s/2", ok, f"r={r_val} xi={xi_val} s={s}")
    else:
        put("odd-order>=s/2", None)
    # oddness parity on s-graphs, when the s-graph test fits the budget
    cell = None
    if regular and s and s >= 1:
        try:
            sg = is_s_graph(g, vertex_budget=s_graph_budget)
            if sg.is_s_graph and xi_val is not None:
                cell = xi_val % 2 == 0
        except VertexBudgetError:
            cell = None
    put("s-graph-xi-even", cell, f"xi={xi_val}")
    # parity signature of the chromatic-index certificate
    if chi["status"] == EXACT:
        cert = report["certificates"].get("chi")
        col = PartialEdgeColoring(cert["palette"], tuple(cert["colors"]))
        try:
            parity_signature(g, col)
            put("parity-signature", True)
        except (ValueError, AssertionError) as exc:
            put("parity-signature", False, str(exc))
    else:
        put("parity-signature", None)
    # maximum colorable subgraph degree bounds
    if r["status"] == EXACT:
        deleted = report["certificates"]["r"]["edges"]
        h = delete(g, edges=deleted).graph
        dh = max_degree(h)
        ok = dh >= _ceil_two_thirds(delta) and (not simple or dh == delta)
        put("max-subgraph-delta", ok, f"delta(H)={dh} delta={delta}")
    else:
        put("max-subgraph-delta", None)
    # ratio bound, when the vertex measures resolved under the cap
    if r_val is not None and rv.status == EXACT and rvp.status == EXACT:
        bound = delta // 2
        ok = (r_val <= rv.value * bound or rv.value == 0 and r_val == 0) and (
            r_val <= rvp.value * bound or rvp.value == 0 and r_val == 0
        )
        put("ratio<=floor(delta/2)", ok, f"r={r_val} rv={rv.value} rvp={rvp.value}")
    else:
        put("ratio<=floor(delta/2)", None)
    # capped vertex-deletion searches are an intentional screen, so only the
    # full-effort measures count as budget-exhausted
    undecided = any(
        report["measures"][key]["status"] not in (EXACT, "not-applicable")
        for key in ("chi", "r", "oddness")
    )
    return {
        "cells": cells,
        "report": report,
        "r_v": rv,
        "r_v_prime": rvp,
        "undecided": undecided,
    }


def cmd_survey(args) -> int:
    root = Path(args.directory)
    files = sorted(root.glob("*.mg"))
    if not files:
        print(f"survey: no .mg files in {root}", file=sys.stderr)
        return EXIT_USAGE
    budget = _budget(args)
    failures = 0
    unknowns = 0
    unreadable = []
    names = []
    all_cells: list[dict] = []
    for path in files:
        try:
            g, _ = load_mg(path)
        except (GraphFormatError, OSError) as exc:
            unreadable.append((path.name, str(exc)))
            continue
        out = survey_graph(g, budget, args.rv_cap)
        names.append(path.stem)
        all_cells.append(out["cells"])
        if out["undecided"]:
            unknowns += 1
    if not all_cells:
        for name, err in unreadable:
            print(f"unreadable {name}: {err}", file=sys.stderr)
        return EXIT_USAGE
    columns = list(all_cells[0].keys())
    width = max(len(n) for n in names) + 2
    print("graph".ljust(width) + "  ".join(f"{c:>20s}" for c in columns))
    for name, cells in zip(names, all_cells):
        row = []
        for c in columns:
            val = cells[c]
            shown = "-" if val is None else ("ok" if val == "ok" else "FAIL")
            if val not in (None, "ok"):
                failures += 1
            row.append(f"{shown:>20s}")
        print(name.ljust(width) + "  ".join(row))
        for c in columns:
            val = cells[c]
            if val not in (None, "ok"):
                print(f"    {name}.{c}: {val}")
    for name, err in unreadable:
        print(f"unreadable {name}: {err}", file=sys.stderr)
    if failures:
        return EXIT_VIOLATION
    return EXIT_UNKNOWN if unknowns else EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def _add_budget_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--node-budget", type=int, default=50_000_000,
                     help="search node limit per solver run")
    sub.add_argument("--subset-budget", type=int, default=5_000_000,
                     help="vertex-subset limit for deletion searches")
    sub.add_argument("--time-limit-s", type=float, default=None,
                     help="wall-clock limit per solver run")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uncolor",
        description="Measures of edge-uncolorability for loop-free multigraphs",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_gen = subs.add_parser("gen", help="generate a family graph")
    p_gen.add_argument("family", choices=[
        "complete", "cycle", "bipartite", "petersen", "meredith", "sum",
        "ok", "triangle-chain", "odd-delta", "join2",
    ])
    p_gen.add_argument("params", nargs="*")
    p_gen.add_argument("-o", "--output", default=None)
    p_gen.set_defaults(func=cmd_gen)

    p_meas = subs.add_parser("measure", help="compute measures for a graph file")
    p_meas.add_argument("graph")
    p_meas.add_argument("--all", action="store_true")
    p_meas.add_argument("--chi", action="store_true")
    p_meas.add_argument("--r", action="store_true")
    p_meas.add_argument("--rv", action="store_true")
    p_meas.add_argument("--rvp", action="store_true")
    p_meas.add_argument("--oddness", action="store_true")
    p_meas.add_argument("--rv-cap", type=int, default=None,
                        help="cap the vertex-deletion search size")
    p_meas.add_argument("--cert-dir", default=None)
    p_meas.add_argument("--json", action="store_true")
    _add_budget_flags(p_meas)
    p_meas.set_defaults(func=cmd_measure)

    p_ver = subs.add_parser("verify", help="re-validate a certificate")
    p_ver.add_argument("graph")
    p_ver.add_argument("certificate")
    _add_budget_flags(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_sur = subs.add_parser("survey", help="check invariants over a corpus dir")
    p_sur.add_argument("directory")
    p_sur.add_argument("--rv-cap", type=int, default=2,
                       help="vertex-deletion search size cap per graph")
    _add_budget_flags(p_sur)
    p_sur.set_defaults(func=cmd_survey)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
