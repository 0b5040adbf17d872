"""Exact vertex-deletion measures and the vertex-reinsertion recoloring
pipeline.

A deleted vertex is reinserted into a properly colored remainder by three
recoloring rules, scanned in order and restarted after every application:

  1. an uncolored edge at the center whose far end shares a missing color
     gets that color;
  2. an uncolored edge whose alternating walk from the far end does not
     return to the center gets colored after swapping the walk;
  3. two uncolored center edges whose far ends share a missing color both
     have walks returning through the center's unique edge of that color;
     recoloring one, clearing that shared edge and swapping the other walk
     unlocks rule 1.

Rules 1 and 2 each color one center edge and rule 3 always enables a rule-1
step, so the loop terminates; when nothing applies, every uncolored center
edge lies on an odd alternating cycle through a private colored center edge,
which caps the uncolored edges at the center by half its degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .coloring import (
    EXACT,
    UNKNOWN,
    PartialEdgeColoring,
    ResistanceResult,
    SearchBudget,
    _counting_sets,
    _obstruction_library,
    chromatic_index,
    resistance,
    try_total_coloring,
    verify,
)
from .multigraph import (
    EnumerationBudgetError,
    MultiGraph,
    components,
    delete,
    max_degree,
    vertex_set,
)

MODE_CLASS1 = "class1"
MODE_DELTA = "delta"


# ---------------------------------------------------------------------------
# reinsertion rules


@dataclass(frozen=True)
class RuleStep:
    rule: int
    edge: int
    alpha: int
    beta: int | None = None
    gamma: int | None = None
    partner: int | None = None
    cleared: int | None = None
    walk: tuple[int, ...] = ()


@dataclass(frozen=True)
class ReinsertionTrace:
    vertex: int
    palette: int
    steps: tuple[RuleStep, ...]
    uncolored_at_vertex: int

    def certificate(
        self, base: PartialEdgeColoring, final: PartialEdgeColoring
    ) -> dict:
        return {
            "kind": "reinsertion-trace",
            "vertex": self.vertex,
            "palette": self.palette,
            "base": list(base.colors),
            "steps": [
                {
                    "rule": s.rule,
                    "edge": s.edge,
                    "alpha": s.alpha,
                    "beta": s.beta,
                    "gamma": s.gamma,
                    "partner": s.partner,
                    "cleared": s.cleared,
                    "walk": list(s.walk),
                }
                for s in self.steps
            ],
            "final": list(final.colors),
        }


def _missing(g: MultiGraph, colors: list, palette: int, v: int) -> set[int]:
    used = {colors[e] for e, _ in g.incident(v) if colors[e] is not None}
    return set(range(1, palette + 1)) - used


def _edge_colored(g: MultiGraph, colors: list, v: int, c: int) -> int:
    for e, _ in g.incident(v):
        if colors[e] == c:
            return e
    return -1


def _walk_on(
    g: MultiGraph, colors: list, start: int, present: int, absent: int
) -> tuple[list[int], int]:
    """Maximal alternating walk leaving `start` on the color it has."""
    edges = []
    cur = start
    want, other = present, absent
    while True:
        e = _edge_colored(g, colors, cur, want)
        if e < 0:
            return edges, cur
        edges.append(e)
        cur = g.other_end(e, cur)
        want, other = other, want


def _swap_walk(colors: list, walk: Sequence[int], a: int, b: int) -> None:
    for e in walk:
        colors[e] = b if colors[e] == a else a


def reinsert_vertex(
    g: MultiGraph, v: int, col: PartialEdgeColoring
) -> tuple[PartialEdgeColoring, ReinsertionTrace]:
    """Color as many edges at v as the rules allow.

    Requires a proper coloring in which every edge at v is uncolored.
    Guarantees on return: uncolored edges away from v are untouched in
    number, and at most floor(deg(v)/2) edges at v stay uncolored.
    """
    report = verify(g, col)
    if not report.proper:
        raise ValueError("reinsertion requires a proper partial coloring")
    for e, _ in g.incident(v):
        if col.colors[e] is not None:
            raise ValueError(f"edge {e} at vertex {v} is already colored")
    palette = col.palette
    colors: list = list(col.colors)
    away_uncolored = sum(
        1 for e, (x, y) in enumerate(g.edges)
        if colors[e] is None and v not in (x, y)
    )
    steps: list[RuleStep] = []

    def pending() -> list[tuple[int, int]]:
        return [(e, w) for e, w in g.incident(v) if colors[e] is None]

    def rule1() -> bool:
        miss_v = _missing(g, colors, palette, v)
        for e, u in pending():
            shared = miss_v & _missing(g, colors, palette, u)
            if shared:
                a = min(shared)
                colors[e] = a
                steps.append(RuleStep(1, e, a))
                return True
        return False

    def rule2() -> bool:
        miss_v = sorted(_missing(g, colors, palette, v))
        for e, u in pending():
            miss_u = sorted(_missing(g, colors, palette, u))
            for a in miss_v:
                for b in miss_u:
                    walk, terminal = _walk_on(g, colors, u, a, b)
                    if terminal != v:
                        _swap_walk(colors, walk, a, b)
                        colors[e] = a
                        steps.append(RuleStep(2, e, a, beta=b, walk=tuple(walk)))
                        return True
        return False

    def rule3() -> bool:
        miss_v = _missing(g, colors, palette, v)
        pend = pending()
        for (e, u), (f, w) in itertools.combinations(pend, 2):
            if u == w:
                continue
            shared = _missing(g, colors, palette, u) & _missing(g, colors, palette, w)
            for a in sorted(shared):
                ce = _edge_colored(g, colors, v, a)
                if ce < 0:
                    continue  # rule 1 handles a missing at v
                far = g.other_end(ce, v)
                if far in (u, w):
                    continue
                b = min(miss_v)
                c = b
                colors[ce] = None
                colors[f] = a
                walk, terminal = _walk_on(g, colors, u, b, a)
                _swap_walk(colors, walk, a, b)
                steps.append(
                    RuleStep(3, f, a, beta=b, gamma=c, partner=e, cleared=ce,
                             walk=tuple(walk))
                )
                return True
        return False

    guard = 4 * g.degree(v) + 8
    while guard:
        guard -= 1
        if rule1() or rule2() or rule3():
            continue
        break
    if not guard:
        raise RuntimeError("reinsertion rules failed to terminate")

    final = PartialEdgeColoring(palette, tuple(colors))
    out_report = verify(g, final)
    if not out_report.proper:
        raise RuntimeError("reinsertion produced an improper coloring")
    still_away = sum(
        1 for e, (x, y) in enumerate(g.edges)
        if colors[e] is None and v not in (x, y)
    )
    if still_away != away_uncolored:
        raise RuntimeError("reinsertion changed uncolored edges away from the vertex")
    at_v = [(e, u) for e, u in g.incident(v) if colors[e] is None]
    if len(at_v) > g.degree(v) // 2:
        raise RuntimeError("reinsertion exceeded the half-degree bound")
    # termination conditions: every remaining walk returns, and missing sets
    # of distinct uncolored neighbors are disjoint
    miss_v = _missing(g, colors, palette, v)
    for e, u in at_v:
        for a in miss_v:
            for b in _missing(g, colors, palette, u):
                _, terminal = _walk_on(g, colors, u, a, b)
                if terminal != v:
                    raise RuntimeError("terminated with an applicable rule 2")
    for (e, u), (f, w) in itertools.combinations(at_v, 2):
        if u != w and _missing(g, colors, palette, u) & _missing(g, colors, palette, w):
            raise RuntimeError("terminated with an applicable rule 3")
    trace = ReinsertionTrace(v, palette, tuple(steps), len(at_v))
    return final, trace


def replay_trace(
    g: MultiGraph, col: PartialEdgeColoring, trace: ReinsertionTrace
) -> PartialEdgeColoring:
    """Re-apply a trace step by step, asserting each rule's preconditions."""
    v = trace.vertex
    palette = trace.palette
    colors: list = list(col.colors)
    for s in trace.steps:
        miss_v = _missing(g, colors, palette, v)
        if s.rule == 1:
            u = g.other_end(s.edge, v)
            assert colors[s.edge] is None
            assert s.alpha in miss_v
            assert s.alpha in _missing(g, colors, palette, u)
            colors[s.edge] = s.alpha
        elif s.rule == 2:
            u = g.other_end(s.edge, v)
            assert colors[s.edge] is None
            assert s.alpha in miss_v
            assert s.beta in _missing(g, colors, palette, u)
            walk, terminal = _walk_on(g, colors, u, s.alpha, s.beta)
            assert tuple(walk) == s.walk and terminal != v
            _swap_walk(colors, walk, s.alpha, s.beta)
            colors[s.edge] = s.alpha
        else:
            u = g.other_end(s.partner, v)
            w = g.other_end(s.edge, v)
            assert colors[s.partner] is None and colors[s.edge] is None
            assert u != w, "rule 3 needs two distinct uncolored neighbors"
            assert s.alpha in _missing(g, colors, palette, u)
            assert s.alpha in _missing(g, colors, palette, w)
            assert s.beta in miss_v and s.gamma in miss_v
            assert colors[s.cleared] == s.alpha
            assert v in g.edges[s.cleared]
            colors[s.cleared] = None
            colors[s.edge] = s.alpha
            walk, _ = _walk_on(g, colors, u, s.beta, s.alpha)
            assert tuple(walk) == s.walk
            _swap_walk(colors, walk, s.alpha, s.beta)
    return PartialEdgeColoring(palette, tuple(colors))


# ---------------------------------------------------------------------------
# rebuild pipeline


@dataclass(frozen=True)
class ReinsertStep:
    graph: MultiGraph
    vertex: int
    before: PartialEdgeColoring
    after: PartialEdgeColoring
    trace: ReinsertionTrace


@dataclass(frozen=True)
class RebuildResult:
    coloring: PartialEdgeColoring
    upper_bound: int
    steps: tuple[ReinsertStep, ...]


def rebuild(
    g: MultiGraph, order: Sequence[int], budget: SearchBudget | None = None
) -> RebuildResult:
    """Delete the listed vertices, color the remainder exactly with Delta(G)
    colors, then reinsert the vertices one at a time.  The final uncolored
    count is a verified upper bound on the resistance, at most
    len(order) * floor(Delta(G)/2)."""
    order = list(order)
    if len(set(order)) != len(order):
        raise ValueError("reinsertion order repeats a vertex")
    vertex_set(g, order)
    palette = max_degree(g)
    base = delete(g, vertices=order)
    status, col0 = try_total_coloring(base.graph, palette, budget)
    if status == "unsat":
        raise ValueError("remainder is not colorable with Delta(G) colors")
    if status == UNKNOWN:
        raise EnumerationBudgetError("remainder coloring undecided within budget")
    master: dict[int, int] = {}
    for old, new in base.edge_map.items():
        c = col0.colors[new]
        if c is not None:
            master[old] = c
    steps = []
    for i in range(1, len(order) + 1):
        part = delete(g, vertices=order[i:])
        local: list = [None] * part.graph.m
        for old, new in part.edge_map.items():
            if old in master:
                local[new] = master[old]
        before = PartialEdgeColoring(palette, tuple(local))
        v_local = part.vertex_map[order[i - 1]]
        after, trace = reinsert_vertex(part.graph, v_local, before)
        steps.append(ReinsertStep(part.graph, v_local, before, after, trace))
        master = {
            old: after.colors[new]
            for old, new in part.edge_map.items()
            if after.colors[new] is not None
        }
    final = PartialEdgeColoring(
        palette, tuple(master.get(e) for e in range(g.m))
    )
    upper = final.uncolored_count
    assert upper <= len(order) * (palette // 2)
    assert verify(g, final).proper
    return RebuildResult(final, upper, tuple(steps))


# ---------------------------------------------------------------------------
# vertex-deletion measures


@dataclass(frozen=True)
class VertexMeasureResult:
    status: str
    value: int | None
    witness: tuple[int, ...] | None
    mode: str
    lower_bound: int
    upper_bound: int


def _kill_library(g: MultiGraph, comp: Sequence[int]):
    """Screens for deletion subsets that provably leave an uncolorable rest.

    Subgraph entries carry an exact small-subgraph chromatic index; counting
    entries carry odd vertex sets with their interior edge count.  A subset
    disjoint from a surviving entry cannot work if the entry's requirement
    exceeds the relevant palette.
    """
    delta_g = max_degree(g)
    subgraphs = []
    for verts, edges in _obstruction_library(g, comp, delta_g):
        sub = delete(g, vertices=[u for u in range(g.n) if u not in verts]).graph
        chi = chromatic_index(sub)
        if chi.status == EXACT:
            subgraphs.append((verts, chi.value))
    # palette-independent counting entries: evaluate the threshold per subset
    counting = []
    seen = set()
    for palette_probe in (delta_g, max(delta_g - 1, 1)):
        for verts, edges, _ in _counting_sets(g, comp, palette_probe):
            if verts not in seen:
                seen.add(verts)
                counting.append((verts, len(edges), len(verts)))
    subgraphs.sort(key=lambda kv: (len(kv[0]), min(kv[0])))
    return subgraphs, counting


def _delta_after(g: MultiGraph, comp: Sequence[int], removed: set[int]) -> int:
    loss: dict[int, int] = {}
    for v in removed:
        for _, w in g.incident(v):
            if w not in removed:
                loss[w] = loss.get(w, 0) + 1
    best = 0
    for v in comp:
        if v in removed:
            continue
        d = g.degree(v) - loss.get(v, 0)
        if d > best:
            best = d
    return best


def _component_measure(
    g: MultiGraph,
    comp: Sequence[int],
    mode: str,
    delta_g: int,
    budget: SearchBudget,
    subset_budget: int,
    max_size: int | None,
) -> VertexMeasureResult:
    comp_list = sorted(comp)
    outside = [v for v in range(g.n) if v not in set(comp_list)]
    has_edges = any(g.degree(v) for v in comp_list)
    if not has_edges:
        return VertexMeasureResult(EXACT, 0, (), mode, 0, 0)
    subgraphs, counting = _kill_library(g, comp_list)
    examined = 0
    cap = len(comp_list) if max_size is None else min(max_size, len(comp_list))
    for t in range(cap + 1):
        saw_unknown = False
        for subset in itertools.combinations(comp_list, t):
            examined += 1
            if examined > subset_budget:
                return VertexMeasureResult(UNKNOWN, None, None, mode, t, len(comp_list))
            removed = set(subset)
            # kill screen: a surviving requirement above the palette in force
            threshold = delta_g if mode == MODE_DELTA else None
            delta_rem = None
            killed = False
            for verts, chi in subgraphs:
                if verts.isdisjoint(removed):
                    if threshold is not None:
                        bar = threshold
                    else:
                        if delta_rem is None:
                            delta_rem = _delta_after(g, comp_list, removed)
                        bar = delta_rem
                    if chi > bar:
                        killed = True
                        break
            if not killed:
                for verts, m_in, size in counting:
                    if verts.isdisjoint(removed):
                        if threshold is not None:
                            bar = threshold
                        else:
                            if delta_rem is None:
                                delta_rem = _delta_after(g, comp_list, removed)
                            bar = delta_rem
                        if m_in > bar * ((size - 1) // 2):
                            killed = True
                            break
            if killed:
                continue
            rest = delete(g, vertices=outside + list(subset)).graph
            target = delta_g if mode == MODE_DELTA else max_degree(rest)
            status, _ = try_total_coloring(rest, target, budget, quick=True)
            if status == "sat":
                return VertexMeasureResult(
                    EXACT, t, tuple(subset), mode, t, t
                )
            if status == UNKNOWN:
                saw_unknown = True
        if saw_unknown:
            return VertexMeasureResult(UNKNOWN, None, None, mode, t, len(comp_list))
    return VertexMeasureResult(UNKNOWN, None, None, mode, cap + 1, len(comp_list))


def _vertex_measure(
    g: MultiGraph,
    mode: str,
    budget: SearchBudget | None,
    subset_budget: int,
    max_size: int | None,
) -> VertexMeasureResult:
    budget = budget or SearchBudget()
    delta_g = max_degree(g)
    total = 0
    witness: list[int] = []
    lower = 0
    upper = 0
    status = EXACT
    for comp in components(g):
        res = _component_measure(
            g, comp, mode, delta_g, budget, subset_budget, max_size
        )
        lower += res.lower_bound
        upper += res.upper_bound
        if res.status != EXACT:
            status = UNKNOWN
            continue
        total += res.value
        witness.extend(res.witness)
    if status != EXACT:
        return VertexMeasureResult(UNKNOWN, None, None, mode, lower, upper)
    return VertexMeasureResult(EXACT, total, tuple(sorted(witness)), mode, total, total)


def r_v(
    g: MultiGraph,
    budget: SearchBudget | None = None,
    subset_budget: int = 5_000_000,
    max_size: int | None = None,
) -> VertexMeasureResult:
    """Minimum vertices to delete so the remainder is class 1 (its chromatic
    index equals its own maximum degree; edgeless counts as class 1).
    Subsets are tried by size, lexicographically within a size."""
    return _vertex_measure(g, MODE_CLASS1, budget, subset_budget, max_size)


def r_v_prime(
    g: MultiGraph,
    budget: SearchBudget | None = None,
    subset_budget: int = 5_000_000,
    max_size: int | None = None,
) -> VertexMeasureResult:
    """Minimum vertices to delete so the remainder is colorable with the
    *original* graph's maximum degree; never exceeds r_v."""
    return _vertex_measure(g, MODE_DELTA, budget, subset_budget, max_size)


def vertex_deletion_certificate(result: VertexMeasureResult) -> dict:
    return {
        "kind": "vertex-deletion",
        "mode": result.mode,
        "vertices": list(result.witness or ()),
    }


# ---------------------------------------------------------------------------
# ratio report


@dataclass(frozen=True)
class RatioReport:
    delta: int
    bound: int
    resistance: ResistanceResult
    vertex_class1: VertexMeasureResult
    vertex_delta: VertexMeasureResult
    partial: bool

    def ratios(self) -> dict[str, Fraction | None]:
        """r over each vertex measure; None when undefined or not exact."""
        out: dict[str, Fraction | None] = {}
        for key, res in (("r_v", self.vertex_class1), ("r_v_prime", self.vertex_delta)):
            if self.partial or not res.value:
                out[key] = None
            else:
                out[key] = Fraction(self.resistance.value, res.value)
        return out


def ratio_report(g: MultiGraph, budget: SearchBudget | None = None) -> RatioReport:
    """Resistance against both vertex-deletion measures; checks the
    floor(Delta/2) ratio bound whenever all three values are exact."""
    delta = max_degree(g)
    bound = delta // 2
    res = resistance(g, budget)
    rv = r_v(g, budget)
    rvp = r_v_prime(g, budget)
    partial = res.status != EXACT or rv.status != EXACT or rvp.status != EXACT
    if not partial:
        if rvp.value > rv.value:
            raise RuntimeError("delta-mode measure exceeded class-1 measure")
        if res.value > rv.value * bound or res.value > rvp.value * bound:
            raise RuntimeError("ratio bound violated")
    return RatioReport(delta, bound, res, rv, rvp, partial)
