"""Partial proper edge colorings, alternating-walk machinery, and the exact
solvers for chromatic index and resistance.

Solver layout: a static saturation-style edge order feeds a backtracking
search over per-vertex free-color bitmasks.  Before searching, sound lower
bounds are harvested from two sources: odd vertex sets whose interior edge
count exceeds what a matching per color can hold, and small uncolorable
subgraphs certified by the searcher itself on induced balls.  Iterative
deepening on the number of uncolored edges starts at that certified lower
bound, while a deterministic greedy-plus-Kempe-repair heuristic supplies
upper-bound certificates, so the exhaustive levels are usually skipped.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .multigraph import (
    EnumerationBudgetError,
    MultiGraph,
    components,
    delete,
    max_degree,
)

DEFAULT_NODE_BUDGET = 50_000_000

EXACT = "exact"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchBudget:
    """Explicit solver limits; exceeding them yields 'unknown', never a guess."""

    nodes: int = DEFAULT_NODE_BUDGET
    time_limit_s: float | None = None


class _OutOfBudget(Exception):
    pass


class _SearchState:
    __slots__ = ("nodes", "limit", "deadline")

    def __init__(self, budget: SearchBudget):
        self.nodes = 0
        self.limit = budget.nodes
        self.deadline = (
            time.monotonic() + budget.time_limit_s
            if budget.time_limit_s is not None
            else None
        )


# ---------------------------------------------------------------------------
# coloring type, verification, Kempe walks


@dataclass(frozen=True)
class PartialEdgeColoring:
    """Per-EdgeId assignment of colors 1..palette, None when uncolored.

    Arbitrary assignments are representable; properness is what `verify`
    checks, independently of whatever solver produced the coloring.
    """

    palette: int
    colors: tuple[int | None, ...]

    def __post_init__(self):
        for e, c in enumerate(self.colors):
            if c is not None and not (1 <= c <= self.palette):
                raise ValueError(f"edge {e}: color {c} outside palette 1..{self.palette}")

    @property
    def uncolored_count(self) -> int:
        return sum(1 for c in self.colors if c is None)

    def uncolored(self) -> tuple[int, ...]:
        return tuple(e for e, c in enumerate(self.colors) if c is None)

    def used_at(self, g: MultiGraph, v: int) -> frozenset[int]:
        return frozenset(
            self.colors[e] for e, _ in g.incident(v) if self.colors[e] is not None
        )

    def missing_at(self, g: MultiGraph, v: int) -> frozenset[int]:
        """The missing-color set at v: palette minus colors on incident edges."""
        return frozenset(range(1, self.palette + 1)) - self.used_at(g, v)

    def recolored(self, changes: dict[int, int | None]) -> "PartialEdgeColoring":
        updated = list(self.colors)
        for e, c in changes.items():
            updated[e] = c
        return PartialEdgeColoring(self.palette, tuple(updated))


def total_coloring(palette: int, colors: Iterable[int]) -> PartialEdgeColoring:
    return PartialEdgeColoring(palette, tuple(colors))


@dataclass(frozen=True)
class VerifyReport:
    proper: bool
    uncolored_count: int
    missing: tuple[frozenset[int], ...]
    violations: tuple[tuple[int, int], ...]


def verify(g: MultiGraph, col: PartialEdgeColoring) -> VerifyReport:
    """Independent properness re-check; never trusts solver state."""
    if len(col.colors) != g.m:
        raise ValueError(f"coloring has {len(col.colors)} entries for {g.m} edges")
    violations = []
    for v in range(g.n):
        seen: dict[int, int] = {}
        for e, _ in g.incident(v):
            c = col.colors[e]
            if c is None:
                continue
            if c in seen:
                violations.append((min(seen[c], e), max(seen[c], e)))
            else:
                seen[c] = e
    missing = tuple(col.missing_at(g, v) for v in range(g.n))
    return VerifyReport(
        proper=not violations,
        uncolored_count=col.uncolored_count,
        missing=missing,
        violations=tuple(sorted(set(violations))),
    )


WALK_ELSEWHERE = "path-ending-elsewhere"
WALK_FORBIDDEN = "returns-to-forbidden-vertex"


@dataclass(frozen=True)
class KempeWalk:
    """Maximal two-color alternating walk.

    `edge_colors` records the color of each walk edge when the walk was
    computed, so a swap can detect staleness.
    """

    start: int
    alpha: int
    beta: int
    edges: tuple[int, ...]
    edge_colors: tuple[int, ...]
    terminal: int
    shape: str


def kempe_walk(
    g: MultiGraph,
    col: PartialEdgeColoring,
    start: int,
    alpha: int,
    beta: int,
    forbidden: int | None = None,
) -> KempeWalk:
    """Maximal alpha-beta alternating walk through `start`.

    The walk leaves on whichever of the two colors is present at `start` and
    is empty when neither is.  When both are present, the walk covers the
    whole alternating component through `start`: either the full cycle, or
    the path extended backward through the start's other edge, so that
    swapping it always preserves properness.
    """
    if alpha == beta:
        raise ValueError("walk colors must differ")
    for c in (alpha, beta):
        if not (1 <= c <= col.palette):
            raise ValueError(f"color {c} outside palette 1..{col.palette}")

    used: set[int] = set()

    def edge_with(v: int, color: int) -> int:
        for e, _ in g.incident(v):
            if e not in used and col.colors[e] == color:
                return e
        return -1

    def trace(first: int) -> tuple[list[int], list[int], int]:
        edges: list[int] = []
        recorded: list[int] = []
        cur = start
        want = first
        while True:
            e = edge_with(cur, want)
            if e < 0:
                return edges, recorded, cur
            used.add(e)
            edges.append(e)
            recorded.append(want)
            cur = g.other_end(e, cur)
            want = beta if want == alpha else alpha

    present = col.used_at(g, start)
    if alpha not in present and beta not in present:
        return KempeWalk(start, alpha, beta, (), (), start,
                         WALK_FORBIDDEN if forbidden == start else WALK_ELSEWHERE)
    first = alpha if alpha in present else beta
    edges, recorded, terminal = trace(first)
    other = beta if first == alpha else alpha
    if other in present and terminal != start:
        back_edges, back_recorded, _ = trace(other)
        edges = back_edges[::-1] + edges
        recorded = back_recorded[::-1] + recorded
    shape = WALK_FORBIDDEN if forbidden is not None and terminal == forbidden else WALK_ELSEWHERE
    return KempeWalk(start, alpha, beta, tuple(edges), tuple(recorded), terminal, shape)


def kempe_swap(g: MultiGraph, col: PartialEdgeColoring, walk: KempeWalk) -> PartialEdgeColoring:
    """Exchange the walk's two colors along it; properness is preserved."""
    for e, c in zip(walk.edges, walk.edge_colors):
        if col.colors[e] != c:
            raise ValueError(f"stale walk: edge {e} no longer colored {c}")
    changes = {
        e: (walk.beta if c == walk.alpha else walk.alpha)
        for e, c in zip(walk.edges, walk.edge_colors)
    }
    return col.recolored(changes)


def parity_signature(g: MultiGraph, col: PartialEdgeColoring) -> tuple[int, ...]:
    """Per-color count of vertices missing that color, for a total coloring.

    Each count a_i equals n - 2|E_i| and therefore has the parity of n.
    """
    report = verify(g, col)
    if report.uncolored_count:
        raise ValueError("parity signature requires a total coloring")
    if not report.proper:
        raise ValueError("parity signature requires a proper coloring")
    class_size = [0] * (col.palette + 1)
    for c in col.colors:
        class_size[c] += 1
    signature = []
    for i in range(1, col.palette + 1):
        a_i = sum(1 for v in range(g.n) if i in report.missing[v])
        assert a_i == g.n - 2 * class_size[i]
        assert a_i % 2 == g.n % 2
        signature.append(a_i)
    return tuple(signature)


# ---------------------------------------------------------------------------
# certificates


def coloring_certificate(col: PartialEdgeColoring) -> dict:
    return {"kind": "coloring", "palette": col.palette, "colors": list(col.colors)}


def coloring_from_certificate(data: dict, m: int) -> PartialEdgeColoring:
    if data.get("kind") != "coloring":
        raise ValueError("not a coloring certificate")
    colors = data["colors"]
    if len(colors) != m:
        raise ValueError(f"certificate covers {len(colors)} edges, graph has {m}")
    return PartialEdgeColoring(int(data["palette"]), tuple(colors))


def edge_deletion_certificate(edges: Sequence[int]) -> dict:
    return {"kind": "edge-deletion", "edges": sorted(edges)}


# ---------------------------------------------------------------------------
# search core


def _component_edges(g: MultiGraph, comp: Sequence[int]) -> list[int]:
    comp_set = set(comp)
    return [e for e, (u, _) in enumerate(g.edges) if u in comp_set]


def _edge_order(g: MultiGraph, comp_edges: Sequence[int]) -> list[int]:
    """Static search order: grow from a max-degree seed, always appending the
    edge with the most already-ordered incident edges (saturation), ties by
    lowest EdgeId.  Keeps the order connected so conflicts surface early."""
    if not comp_edges:
        return []
    remaining = set(comp_edges)
    count_at = [0] * g.n
    seed = max(
        comp_edges,
        key=lambda e: (g.degree(g.edges[e][0]) + g.degree(g.edges[e][1]), -e),
    )
    order = []

    def push(e: int) -> None:
        order.append(e)
        remaining.discard(e)
        u, v = g.edges[e]
        count_at[u] += 1
        count_at[v] += 1

    push(seed)
    while remaining:
        best = max(
            remaining,
            key=lambda e: (count_at[g.edges[e][0]] + count_at[g.edges[e][1]], -e),
        )
        push(best)
    return order


def _solve(
    g: MultiGraph,
    palette: int,
    order: Sequence[int],
    skip_budget: int,
    families: Sequence[tuple[tuple[int, ...], int]],
    state: _SearchState,
) -> list[int] | None:
    """Backtracking search for a proper partial coloring of the ordered edges
    with at most `skip_budget` uncolored.  Colors are tried ascending and the
    skip option last, so the first solution is the deterministic one.

    `families` are edge sets with a demanded minimum of final uncolored edges
    inside each; they prune branches that can no longer meet a demand.
    Colors are interchangeable, so each assignment may use at most one color
    nobody has used yet (the lowest); this breaks the relabeling symmetry.
    Returns per-edge color bitmasks (0 = uncolored) or None when unsatisfiable.
    """
    if sys.getrecursionlimit() < len(order) + 200:
        sys.setrecursionlimit(len(order) + 500)
    n_slots = g.m
    full = (1 << palette) - 1
    free = [full] * g.n
    col = [0] * n_slots
    eu = [0] * n_slots
    ev = [0] * n_slots
    for e in order:
        eu[e], ev[e] = g.edges[e]
    in_use = 0  # colors appearing anywhere in the partial coloring
    use_count = [0] * (palette + 1)

    k = len(families)
    demand = [d for _, d in families]
    unc = [0] * k
    fut = [0] * k
    obs_of: dict[int, list[int]] = {}
    for j, (eids, _) in enumerate(families):
        fut[j] = len(eids)
        for e in eids:
            obs_of.setdefault(e, []).append(j)
    need_total = sum(demand)
    if need_total > skip_budget:
        return None
    empty: list[int] = []
    end = len(order)
    solution: list[int] | None = None

    def rec(pos: int, skips_left: int) -> bool:
        nonlocal need_total, solution, in_use
        if pos == end:
            solution = col.copy()
            return True
        state.nodes += 1
        if state.nodes >= state.limit:
            raise _OutOfBudget
        if state.deadline is not None and state.nodes % 8192 == 0:
            if time.monotonic() > state.deadline:
                raise _OutOfBudget
        e = order[pos]
        u = eu[e]
        v = ev[e]
        ob = obs_of.get(e, empty)
        feasible = True
        for j in ob:
            fut[j] -= 1
            if fut[j] < demand[j] - unc[j]:
                feasible = False
        if feasible:
            fresh = full & ~in_use
            avail = free[u] & free[v] & (in_use | (fresh & -fresh))
            while avail:
                bit = avail & (-avail)
                avail ^= bit
                free[u] ^= bit
                free[v] ^= bit
                col[e] = bit
                idx = bit.bit_length()
                use_count[idx] += 1
                if use_count[idx] == 1:
                    in_use |= bit
                if rec(pos + 1, skips_left):
                    return True
                use_count[idx] -= 1
                if use_count[idx] == 0:
                    in_use &= ~bit
                free[u] |= bit
                free[v] |= bit
            col[e] = 0
        for j in ob:
            fut[j] += 1
        if skips_left:
            for j in ob:
                fut[j] -= 1
                unc[j] += 1
                if unc[j] <= demand[j]:
                    need_total -= 1
            if need_total <= skips_left - 1:
                if rec(pos + 1, skips_left - 1):
                    return True
            for j in ob:
                fut[j] += 1
                unc[j] -= 1
                if unc[j] < demand[j]:
                    need_total += 1
        return False

    if rec(0, skip_budget):
        return solution
    return None


def _merge_component_colors(
    palette: int, per_comp: Iterable[list[int]], m: int
) -> PartialEdgeColoring:
    merged: list[int | None] = [None] * m
    for arr in per_comp:
        for e, bit in enumerate(arr):
            if bit:
                merged[e] = bit.bit_length()
    return PartialEdgeColoring(palette, tuple(merged))


# ---------------------------------------------------------------------------
# lower-bound machinery


def _induced_edge_ids(g: MultiGraph, verts: frozenset[int] | set[int]) -> tuple[int, ...]:
    return tuple(e for e, (u, v) in enumerate(g.edges) if u in verts and v in verts)


def _ball(g: MultiGraph, v: int, radius: int) -> frozenset[int]:
    seen = {v}
    frontier = [v]
    for _ in range(radius):
        nxt = []
        for u in frontier:
            for _, w in g.incident(u):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def _bridge_edges(g: MultiGraph, comp: Sequence[int]) -> set[int]:
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: set[int] = set()
    timer = 0
    for root in comp:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int, Iterable]] = [(root, -1, iter(g.incident(root)))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for e, w in it:
                if e == pe:
                    continue
                if w not in disc:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, iter(g.incident(w))))
                    advanced = True
                    break
                if disc[w] < low[v]:
                    low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if low[v] > disc[pv]:
                        bridges.add(pe)
    return bridges


def _bridge_blocks(g: MultiGraph, comp: Sequence[int]) -> list[frozenset[int]]:
    bridges = _bridge_edges(g, comp)
    if not bridges:
        return []
    seen: set[int] = set()
    blocks = []
    for start in comp:
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        block = {start}
        while stack:
            v = stack.pop()
            for e, w in g.incident(v):
                if e in bridges or w in seen:
                    continue
                seen.add(w)
                block.add(w)
                stack.append(w)
        blocks.append(frozenset(block))
    return blocks


def _counting_sets(
    g: MultiGraph, comp: Sequence[int], palette: int
) -> list[tuple[frozenset[int], tuple[int, ...], int]]:
    """Odd vertex sets X with more interior edges than palette * (|X|-1)/2;
    any proper partial coloring must leave at least the excess uncolored
    inside X, since each color class meets G[X] in a matching."""
    candidates: set[frozenset[int]] = set()
    if len(comp) % 2 == 1:
        candidates.add(frozenset(comp))
    for block in _bridge_blocks(g, comp):
        if len(block) % 2 == 1:
            candidates.add(block)
    out = []
    for verts in candidates:
        edges = _induced_edge_ids(g, verts)
        deficiency = len(edges) - palette * ((len(verts) - 1) // 2)
        if deficiency > 0:
            out.append((verts, edges, deficiency))
    out.sort(key=lambda item: (-item[2], min(item[0])))
    return out


def _uncolorable(
    g: MultiGraph, verts: frozenset[int], palette: int, node_cap: int
) -> bool:
    """True only when the induced subgraph provably has no total proper
    coloring with `palette` colors; conservative False on budget."""
    edges = _induced_edge_ids(g, verts)
    if not edges:
        return False
    if len(verts) % 2 == 1 and len(edges) > palette * ((len(verts) - 1) // 2):
        return True
    sub_deg: dict[int, int] = {}
    for e in edges:
        u, v = g.edges[e]
        sub_deg[u] = sub_deg.get(u, 0) + 1
        sub_deg[v] = sub_deg.get(v, 0) + 1
    if max(sub_deg.values()) > palette:
        return True
    order = _edge_order(g, list(edges))
    state = _SearchState(SearchBudget(nodes=node_cap))
    try:
        return _solve(g, palette, order, 0, (), state) is None
    except _OutOfBudget:
        return False


def _obstruction_library(
    g: MultiGraph,
    comp: Sequence[int],
    palette: int,
    cap_edges: int = 40,
    test_nodes: int = 200_000,
) -> list[tuple[frozenset[int], tuple[int, ...]]]:
    """Small induced subgraphs certified uncolorable with the given palette.

    Candidates are balls of radius 1 and 2; certified candidates are shrunk
    vertex by vertex while they stay uncolorable, which keeps the family
    members small and packable edge-disjointly.
    """
    comp_size = len(comp)
    candidates: dict[frozenset[int], tuple[int, ...]] = {}
    for v in sorted(comp):
        for radius in (1, 2):
            ball = _ball(g, v, radius)
            if len(ball) >= comp_size:
                continue
            edges = _induced_edge_ids(g, ball)
            if not (3 <= len(edges) <= cap_edges):
                continue
            candidates.setdefault(ball, edges)
    certified: dict[frozenset[int], tuple[int, ...]] = {}
    for verts in sorted(candidates, key=lambda s: (len(candidates[s]), sorted(s))):
        if any(prev <= verts for prev in certified):
            continue
        if not _uncolorable(g, verts, palette, test_nodes):
            continue
        cur = verts
        for v in sorted(verts):
            if len(cur) <= 3:
                break
            trial = cur - {v}
            if len(_induced_edge_ids(g, trial)) >= 2 and _uncolorable(
                g, trial, palette, test_nodes
            ):
                cur = trial
        certified.setdefault(cur, _induced_edge_ids(g, cur))
    return sorted(certified.items(), key=lambda kv: (min(kv[0]), len(kv[1])))


def _bound_families(
    g: MultiGraph, comp: Sequence[int], palette: int
) -> tuple[int, list[tuple[tuple[int, ...], int]]]:
    """Certified lower bound for uncolored edges plus the edge-disjoint
    demand families that realize it (usable as search pruning state)."""
    families: list[tuple[tuple[int, ...], int]] = []
    used: set[int] = set()
    lb = 0
    for _, edges, deficiency in _counting_sets(g, comp, palette):
        if used.isdisjoint(edges):
            families.append((edges, deficiency))
            used.update(edges)
            lb += deficiency
    for _, edges in _obstruction_library(g, comp, palette):
        if used.isdisjoint(edges):
            families.append((edges, 1))
            used.update(edges)
            lb += 1
    return lb, families


# ---------------------------------------------------------------------------
# heuristic upper bound


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        bit = mask & (-mask)
        out.append(bit)
        mask ^= bit
    return out


def _heuristic_colors(
    g: MultiGraph, palette: int, comp_edges: Sequence[int], order: Sequence[int],
    rounds: int = 60,
) -> list[int]:
    """Greedy coloring in search order, then bounded Kempe-chain repair.

    Deterministic: repair scans uncolored edges in EdgeId order and rotates
    its color-pair preference by round number.
    """
    col = [0] * g.m
    full = (1 << palette) - 1
    free = [full] * g.n
    for e in order:
        u, v = g.edges[e]
        avail = free[u] & free[v]
        if avail:
            bit = avail & (-avail)
            col[e] = bit
            free[u] ^= bit
            free[v] ^= bit

    def edge_with(vtx: int, bit: int) -> int:
        for eid, _ in g.incident(vtx):
            if col[eid] == bit:
                return eid
        return -1

    def chain_swap(start: int, a_bit: int, b_bit: int, stop: int) -> bool:
        """Swap the a/b chain leaving `start` on a_bit unless it ends at `stop`."""
        chain = []
        cur = start
        want = a_bit
        other = b_bit
        while True:
            eid = edge_with(cur, want)
            if eid < 0:
                break
            chain.append(eid)
            cur = g.other_end(eid, cur)
            want, other = other, want
        if cur == stop or not chain:
            return False
        touched = {start, cur}
        for eid in chain:
            col[eid] = b_bit if col[eid] == a_bit else a_bit
            x, y = g.edges[eid]
            touched.add(x)
            touched.add(y)
        for x in touched:
            used = 0
            for eid, _ in g.incident(x):
                used |= col[eid]
            free[x] = full & ~used
        return True

    for rnd in range(rounds):
        uncolored = [e for e in comp_edges if not col[e]]
        if not uncolored:
            break
        progress = False
        for e in uncolored:
            if col[e]:
                continue
            u, v = g.edges[e]
            avail = free[u] & free[v]
            if avail:
                bit = avail & (-avail)
                col[e] = bit
                free[u] ^= bit
                free[v] ^= bit
                progress = True
                continue
            fu = _bits(free[u])
            fv = _bits(free[v])
            if not fu or not fv:
                continue
            shift = rnd % max(len(fu), 1)
            fu = fu[shift:] + fu[:shift]
            done = False
            for a_bit in fu:
                for b_bit in fv:
                    if a_bit == b_bit:
                        continue
                    # make a_bit free at v: swap the a/b chain leaving v
                    if chain_swap(v, a_bit, b_bit, stop=u):
                        col[e] = a_bit
                        free[u] &= ~a_bit
                        free[v] &= ~a_bit
                        done = True
                        break
                    # symmetric: make b_bit free at u
                    if chain_swap(u, b_bit, a_bit, stop=v):
                        col[e] = b_bit
                        free[u] &= ~b_bit
                        free[v] &= ~b_bit
                        done = True
                        break
                if done:
                    break
            if done:
                progress = True
        if not progress:
            break
    return col


# ---------------------------------------------------------------------------
# public solvers


@dataclass(frozen=True)
class ChromaticIndexResult:
    status: str
    value: int | None
    coloring: PartialEdgeColoring | None
    lower_bound: int
    upper_bound: int
    nodes: int

    def certificate(self) -> dict | None:
        return coloring_certificate(self.coloring) if self.coloring else None


@dataclass(frozen=True)
class ResistanceResult:
    status: str
    value: int | None
    palette: int
    deleted: tuple[int, ...] | None
    coloring: PartialEdgeColoring | None
    lower_bound: int
    upper_bound: int
    nodes: int

    def deletion_certificate(self) -> dict | None:
        return edge_deletion_certificate(self.deleted) if self.deleted is not None else None

    def coloring_certificate(self) -> dict | None:
        return coloring_certificate(self.coloring) if self.coloring else None


def _greedy_chi(g: MultiGraph, comp_edges: Sequence[int]) -> tuple[int, list[int]]:
    """First-fit coloring in EdgeId order; returns (colors used, bitmask array)."""
    col = [0] * g.m
    used = [0] * g.n
    top = 0
    for e in comp_edges:
        u, v = g.edges[e]
        taken = used[u] | used[v]
        bit = 1
        while taken & bit:
            bit <<= 1
        col[e] = bit
        used[u] |= bit
        used[v] |= bit
        top = max(top, bit.bit_length())
    return top, col


def _chi_component(
    g: MultiGraph, comp: Sequence[int], state: _SearchState
) -> tuple[str, int, int, list[int] | None]:
    """(status, lower, upper, colors) for one component; exact when lower == upper."""
    comp_edges = _component_edges(g, comp)
    if not comp_edges:
        return EXACT, 0, 0, [0] * g.m
    delta_c = max(g.degree(v) for v in comp)
    greedy_val, greedy_col = _greedy_chi(g, comp_edges)
    order = _edge_order(g, comp_edges)
    c = delta_c
    try:
        while c < greedy_val:
            killed = bool(_counting_sets(g, comp, c))
            if not killed:
                killed = bool(_obstruction_library(g, comp, c))
            if not killed:
                sol = _solve(g, c, order, 0, (), state)
                if sol is not None:
                    return EXACT, c, c, sol
            c += 1
        return EXACT, greedy_val, greedy_val, greedy_col
    except _OutOfBudget:
        return UNKNOWN, c, greedy_val, None


def chromatic_index(g: MultiGraph, budget: SearchBudget | None = None) -> ChromaticIndexResult:
    """Exact chromatic index with a verifying total coloring.

    Tries palette sizes upward from the maximum degree per component;
    infeasible sizes are dismissed by counting or by exhaustive search.
    Budget exhaustion yields an explicit 'unknown' with bounds.
    """
    budget = budget or SearchBudget()
    state = _SearchState(budget)
    lower = 0
    upper = 0
    arrays = []
    status = EXACT
    for comp in components(g):
        st, lo, up, colors = _chi_component(g, comp, state)
        lower = max(lower, lo)
        upper = max(upper, up)
        if st != EXACT:
            status = UNKNOWN
        else:
            arrays.append(colors)
    if status == EXACT:
        coloring = _merge_component_colors(upper, arrays, g.m)
        return ChromaticIndexResult(EXACT, upper, coloring, upper, upper, state.nodes)
    return ChromaticIndexResult(UNKNOWN, None, None, lower, upper, state.nodes)


def _resistance_component(
    g: MultiGraph, palette: int, comp: Sequence[int], state: _SearchState
) -> tuple[str, int, int, list[int]]:
    """(status, lower, upper, colors) for one component; exact when lower == upper.
    The returned colors always realize the upper bound."""
    comp_edges = _component_edges(g, comp)
    if not comp_edges:
        return EXACT, 0, 0, [0] * g.m
    order = _edge_order(g, comp_edges)
    lb, families = _bound_families(g, comp, palette)
    hcol = _heuristic_colors(g, palette, comp_edges, order)
    ub = sum(1 for e in comp_edges if not hcol[e])
    assert lb <= ub, "lower-bound engine exceeded a verified coloring"
    if ub == lb:
        return EXACT, lb, ub, hcol
    t = lb
    try:
        while t < ub:
            sol = _solve(g, palette, order, t, families, state)
            if sol is not None:
                return EXACT, t, t, sol
            t += 1
        return EXACT, ub, ub, hcol
    except _OutOfBudget:
        return UNKNOWN, t, ub, hcol


def resistance(g: MultiGraph, budget: SearchBudget | None = None) -> ResistanceResult:
    """Minimum number of edges to leave uncolored in a proper partial coloring
    with palette Delta(G); exact by iterative deepening from a certified lower
    bound.  The deletion certificate is the uncolored edge set."""
    budget = budget or SearchBudget()
    palette = max_degree(g)
    state = _SearchState(budget)
    status = EXACT
    lower = 0
    upper = 0
    arrays = []
    for comp in components(g):
        st, lo, up, colors = _resistance_component(g, palette, comp, state)
        lower += lo
        upper += up
        if st != EXACT:
            status = UNKNOWN
        arrays.append(colors)
    coloring = _merge_component_colors(palette, arrays, g.m)
    deleted = coloring.uncolored()
    if status == EXACT:
        return ResistanceResult(EXACT, upper, palette, deleted, coloring, lower, upper, state.nodes)
    return ResistanceResult(UNKNOWN, None, palette, deleted, coloring, lower, upper, state.nodes)


def max_colorable_subgraph(g: MultiGraph, budget: SearchBudget | None = None) -> MultiGraph:
    """The graph minus the resistance deletion set: a maximum subgraph that is
    properly colorable with Delta(G) colors."""
    res = resistance(g, budget)
    if res.status != EXACT:
        raise EnumerationBudgetError("resistance undecided within budget")
    return delete(g, edges=res.deleted).graph


def try_total_coloring(
    g: MultiGraph,
    palette: int,
    budget: SearchBudget | None = None,
    quick: bool = False,
) -> tuple[str, PartialEdgeColoring | None]:
    """Decide whether g has a total proper coloring with the given palette.

    Returns ('sat', coloring), ('unsat', None) or ('unknown', None).  With
    `quick` the certified-obstruction screen is skipped and only counting
    plus plain search are used (callers that pre-screen use this).
    """
    if palette < 0:
        raise ValueError("palette must be nonnegative")
    if g.m == 0:
        return "sat", PartialEdgeColoring(palette, ())
    if max_degree(g) > palette:
        return "unsat", None
    budget = budget or SearchBudget()
    state = _SearchState(budget)
    arrays = []
    for comp in components(g):
        comp_edges = _component_edges(g, comp)
        if not comp_edges:
            arrays.append([0] * g.m)
            continue
        if _counting_sets(g, comp, palette):
            return "unsat", None
        if not quick and _obstruction_library(g, comp, palette):
            return "unsat", None
        order = _edge_order(g, comp_edges)
        try:
            sol = _solve(g, palette, order, 0, (), state)
        except _OutOfBudget:
            return UNKNOWN, None
        if sol is None:
            return "unsat", None
        arrays.append(sol)
    return "sat", _merge_component_colors(palette, arrays, g.m)
