"""Perfect-matching and 2-factor enumeration, exact oddness, and the
colorings derived from factorizations.

Oddness of an s-regular graph: the minimum total number of odd cycles over
all decompositions of the edge set into 2-factors (s even), minimized
further over deleted perfect matchings when s is odd; infinite when no such
decomposition exists.  The search extracts factors in a canonical order
(each factor must contain the lowest remaining EdgeId) so every partition is
visited exactly once, and prunes on the incumbent plus a parity floor: a
2-factor on an odd number of vertices always contains an odd cycle.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from .coloring import PartialEdgeColoring, SearchBudget
from .multigraph import (
    EnumerationBudgetError,
    MultiGraph,
    NotRegularError,
    components,
    delete,
)

INFINITE = math.inf

EXACT = "exact"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Cycle:
    """A cycle as parallel vertex/edge traversal sequences; edges[i] joins
    vertices[i] to vertices[(i+1) % length]."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def odd(self) -> bool:
        return len(self.edges) % 2 == 1


@dataclass(frozen=True)
class TwoFactor:
    """A spanning 2-regular edge set with its cycle decomposition."""

    edge_ids: tuple[int, ...]
    cycles: tuple[Cycle, ...]

    @property
    def odd_cycles(self) -> int:
        return sum(1 for c in self.cycles if c.odd)


@dataclass(frozen=True)
class TwoFactorization:
    """2-factors (plus one distinguished perfect matching when the degree is
    odd) that together partition the edge set."""

    two_factors: tuple[TwoFactor, ...]
    one_factor: tuple[int, ...] | None

    @property
    def odd_cycles(self) -> int:
        return sum(f.odd_cycles for f in self.two_factors)

    def certificate(self) -> dict:
        return {
            "kind": "factorization",
            "one_factor": list(self.one_factor) if self.one_factor is not None else None,
            "two_factors": [list(f.edge_ids) for f in self.two_factors],
            "odd_cycles": self.odd_cycles,
        }


def _cycles_of(g: MultiGraph, edge_ids: Sequence[int]) -> tuple[Cycle, ...]:
    """Deterministic cycle decomposition of a 2-regular edge set: each cycle
    starts at its smallest vertex and leaves on its lower incident EdgeId."""
    at: dict[int, list[int]] = {}
    for e in sorted(edge_ids):
        u, v = g.edges[e]
        at.setdefault(u, []).append(e)
        at.setdefault(v, []).append(e)
    for v, es in at.items():
        if len(es) != 2:
            raise ValueError(f"vertex {v} has {len(es)} selected edges, wanted 2")
    used: set[int] = set()
    cycles = []
    for start in sorted(at):
        first_options = [e for e in at[start] if e not in used]
        if not first_options:
            continue
        verts = [start]
        edges = []
        cur = start
        e = first_options[0]
        while True:
            used.add(e)
            edges.append(e)
            cur = g.other_end(e, cur)
            if cur == start:
                break
            verts.append(cur)
            e = next(x for x in at[cur] if x not in used)
        cycles.append(Cycle(tuple(verts), tuple(edges)))
    return tuple(cycles)


def two_factor(g: MultiGraph, edge_ids: Sequence[int]) -> TwoFactor:
    """Validate a spanning 2-regular edge set and derive its cycles."""
    ids = tuple(sorted(set(edge_ids)))
    if len(ids) != len(tuple(edge_ids)):
        raise ValueError("duplicate edge in 2-factor")
    cycles = _cycles_of(g, ids)
    covered = {v for c in cycles for v in c.vertices}
    if covered != set(range(g.n)):
        raise ValueError("2-factor is not spanning")
    return TwoFactor(ids, cycles)


def classify_factor(f: TwoFactor) -> str:
    """'odd' if all cycles odd, 'even' if all even, else 'mixed'."""
    flags = {c.odd for c in f.cycles}
    if flags == {True}:
        return "odd"
    if flags == {False} or not flags:
        return "even"
    return "mixed"


class _Ticker:
    __slots__ = ("nodes", "limit", "deadline")

    def __init__(self, budget: SearchBudget):
        self.nodes = 0
        self.limit = budget.nodes
        self.deadline = (
            time.monotonic() + budget.time_limit_s
            if budget.time_limit_s is not None
            else None
        )

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes >= self.limit:
            raise EnumerationBudgetError("enumeration node budget exceeded")
        if self.deadline is not None and self.nodes % 8192 == 0:
            if time.monotonic() > self.deadline:
                raise EnumerationBudgetError("enumeration time limit exceeded")


def enumerate_one_factors(
    g: MultiGraph, budget: SearchBudget | None = None
) -> Iterator[tuple[int, ...]]:
    """All perfect matchings, by backtracking over the lowest-index uncovered
    vertex, trying its incident edges in EdgeId order."""
    if g.n % 2 == 1:
        return
    ticker = _Ticker(budget or SearchBudget())
    cover = [False] * g.n
    chosen: list[int] = []

    def rec(lo: int) -> Iterator[tuple[int, ...]]:
        ticker.tick()
        v = lo
        while v < g.n and cover[v]:
            v += 1
        if v == g.n:
            yield tuple(sorted(chosen))
            return
        cover[v] = True
        for e, w in g.incident(v):
            if not cover[w]:
                cover[w] = True
                chosen.append(e)
                yield from rec(v + 1)
                chosen.pop()
                cover[w] = False
        cover[v] = False

    yield from rec(0)


def _two_factor_sets(
    g: MultiGraph,
    edge_pool: Sequence[int],
    forced: int | None,
    ticker: _Ticker,
) -> Iterator[list[int]]:
    """Spanning 2-regular subsets of the pool, optionally forced to contain
    one edge.  Plain include/exclude over the pool in EdgeId order with
    degree feasibility pruning."""
    pool = sorted(edge_pool)
    sel = [0] * g.n
    rem = [0] * g.n
    touched: set[int] = set()
    for e in pool:
        u, v = g.edges[e]
        rem[u] += 1
        rem[v] += 1
        touched.add(u)
        touched.add(v)
    if len(touched) < g.n or any(rem[v] < 2 for v in range(g.n)):
        return
    chosen: list[int] = []

    def rec(idx: int) -> Iterator[list[int]]:
        ticker.tick()
        if idx == len(pool):
            yield list(chosen)
            return
        e = pool[idx]
        u, v = g.edges[e]
        rem[u] -= 1
        rem[v] -= 1
        if sel[u] < 2 and sel[v] < 2 and sel[u] + rem[u] >= 1 and sel[v] + rem[v] >= 1:
            sel[u] += 1
            sel[v] += 1
            if sel[u] + rem[u] >= 2 and sel[v] + rem[v] >= 2:
                chosen.append(e)
                yield from rec(idx + 1)
                chosen.pop()
            sel[u] -= 1
            sel[v] -= 1
        if e != forced and sel[u] + rem[u] >= 2 and sel[v] + rem[v] >= 2:
            yield from rec(idx + 1)
        rem[u] += 1
        rem[v] += 1

    yield from rec(0)


def enumerate_two_factors(
    g: MultiGraph, budget: SearchBudget | None = None
) -> Iterator[TwoFactor]:
    """All 2-factors.  Cubic graphs use perfect-matching complements, which
    doubles as a cross-check route for the generic enumeration."""
    budget = budget or SearchBudget()
    if g.n > 0 and all(d == 3 for d in g.degrees()):
        all_ids = set(range(g.m))
        for matching in enumerate_one_factors(g, budget):
            rest = tuple(sorted(all_ids - set(matching)))
            yield TwoFactor(rest, _cycles_of(g, rest))
        return
    ticker = _Ticker(budget)
    for ids in _two_factor_sets(g, range(g.m), None, ticker):
        yield TwoFactor(tuple(ids), _cycles_of(g, ids))


@dataclass(frozen=True)
class OddnessResult:
    status: str
    value: int | float | None  # int, INFINITE, or None when unknown
    factorization: TwoFactorization | None
    lower_bound: int | float
    nodes: int

    @property
    def finite(self) -> bool:
        return isinstance(self.value, int)


def _component_oddness(
    h: MultiGraph, s: int, ticker: _Ticker
) -> tuple[int | float, tuple[tuple[int, ...], ...] | None, tuple[int, ...] | None]:
    """Exact minimum odd-cycle count over factorizations of one connected
    s-regular graph.  Returns (value, factor edge tuples, one-factor)."""
    if s == 2:
        ids = tuple(range(h.m))
        return sum(1 for c in _cycles_of(h, ids) if c.odd), (ids,), None

    best: list = [INFINITE, None]
    parity_floor_unit = 1 if h.n % 2 == 1 else 0

    def even_part(pool: list[int], remaining_s: int, acc: int, prefix: list) -> None:
        floor_here = acc + parity_floor_unit * (remaining_s // 2)
        if floor_here >= best[0]:
            return
        if remaining_s == 2:
            o = acc + sum(1 for c in _cycles_of(h, pool) if c.odd)
            if o < best[0]:
                best[0] = o
                best[1] = prefix + [tuple(sorted(pool))]
            return
        forced = min(pool)
        for ids in _two_factor_sets(h, pool, forced, ticker):
            o = sum(1 for c in _cycles_of(h, ids) if c.odd)
            picked = set(ids)
            rest = [e for e in pool if e not in picked]
            even_part(rest, remaining_s - 2, acc + o, prefix + [tuple(ids)])
            if best[0] <= floor_here:
                return  # the incumbent already meets this subtree's floor

    if s % 2 == 0:
        even_part(list(range(h.m)), s, 0, [])
        if best[1] is None:
            return INFINITE, None, None
        return best[0], tuple(best[1]), None

    best_matching: list = [None]

    def with_matching(matching: tuple[int, ...]) -> None:
        picked = set(matching)
        pool = [e for e in range(h.m) if e not in picked]
        before = best[0]
        even_part(pool, s - 1, 0, [])
        if best[0] < before:
            best_matching[0] = matching

    found_any = False
    overall_floor = parity_floor_unit * ((s - 1) // 2)
    for matching in enumerate_one_factors(h, SearchBudget(nodes=ticker.limit)):
        ticker.tick()
        found_any = True
        with_matching(matching)
        if best[0] <= overall_floor:
            break
    if not found_any or best[1] is None:
        return INFINITE, None, None
    return best[0], tuple(best[1]), best_matching[0]


def oddness(g: MultiGraph, budget: SearchBudget | None = None) -> OddnessResult:
    """Exact oddness with a witness factorization.

    Infinite is a first-class answer (no factorization / no perfect matching
    / degree at most 1), distinct from 'unknown' on budget exhaustion.
    Disconnected graphs are handled per component and summed.
    """
    if not g.is_regular():
        raise NotRegularError("oddness requires a regular graph")
    budget = budget or SearchBudget()
    s = g.degrees()[0] if g.n else 0
    if s <= 1:
        return OddnessResult(EXACT, INFINITE, None, INFINITE, 0)
    ticker = _Ticker(budget)
    total = 0
    factor_count = s // 2
    merged_factors: list[list[int]] = [[] for _ in range(factor_count)]
    merged_matching: list[int] = []
    try:
        for comp in components(g):
            keep = set(comp)
            removal = delete(g, vertices=[v for v in range(g.n) if v not in keep])
            h = removal.graph
            back = {new: old for old, new in removal.edge_map.items()}
            value, factors, matching = _component_oddness(h, s, ticker)
            if value is INFINITE or isinstance(value, float):
                return OddnessResult(EXACT, INFINITE, None, INFINITE, ticker.nodes)
            total += value
            assert factors is not None and len(factors) == factor_count
            for i, ids in enumerate(factors):
                merged_factors[i].extend(back[e] for e in ids)
            if s % 2 == 1:
                assert matching is not None
                merged_matching.extend(back[e] for e in matching)
    except EnumerationBudgetError:
        return OddnessResult(UNKNOWN, None, None, 0, ticker.nodes)
    witness = TwoFactorization(
        tuple(
            TwoFactor(tuple(sorted(ids)), _cycles_of(g, ids)) for ids in merged_factors
        ),
        tuple(sorted(merged_matching)) if s % 2 == 1 else None,
    )
    assert witness.odd_cycles == total
    return OddnessResult(EXACT, total, witness, total, ticker.nodes)


def _check_partition(g: MultiGraph, f: TwoFactorization) -> None:
    seen: list[int] = []
    for factor in f.two_factors:
        seen.extend(factor.edge_ids)
    if f.one_factor is not None:
        seen.extend(f.one_factor)
    if sorted(seen) != list(range(g.m)):
        raise ValueError("factorization does not partition the edge set")


def canonical_coloring(g: MultiGraph, f: TwoFactorization) -> PartialEdgeColoring:
    """Two fresh colors per 2-factor, one per optional matching: even cycles
    are colored fully, odd cycles leave exactly their closing edge uncolored,
    so the uncolored total is the factorization's odd-cycle count."""
    _check_partition(g, f)
    palette = 2 * len(f.two_factors) + (1 if f.one_factor is not None else 0)
    colors: list[int | None] = [None] * g.m
    for i, factor in enumerate(f.two_factors):
        c1, c2 = 2 * i + 1, 2 * i + 2
        for cycle in factor.cycles:
            stop = cycle.length - 1 if cycle.odd else cycle.length
            for j in range(stop):
                colors[cycle.edges[j]] = c1 if j % 2 == 0 else c2
    if f.one_factor is not None:
        for e in f.one_factor:
            colors[e] = palette
    out = PartialEdgeColoring(palette, tuple(colors))
    assert out.uncolored_count == f.odd_cycles
    return out


def concentrated_coloring(g: MultiGraph, f: TwoFactorization) -> PartialEdgeColoring:
    """Total coloring available when one 2-factor contains every odd cycle:
    that factor takes three colors, every other factor two fresh ones, the
    optional matching one more."""
    _check_partition(g, f)
    odd_factors = [i for i, factor in enumerate(f.two_factors) if factor.odd_cycles]
    if len(odd_factors) > 1:
        raise ValueError("odd cycles appear in more than one 2-factor")
    pivot = odd_factors[0] if odd_factors else 0 if f.two_factors else None
    colors: list[int | None] = [None] * g.m
    next_color = 1
    if pivot is not None:
        c1, c2, c3 = 1, 2, 3
        next_color = 4
        for cycle in f.two_factors[pivot].cycles:
            stop = cycle.length - 1 if cycle.odd else cycle.length
            for j in range(stop):
                colors[cycle.edges[j]] = c1 if j % 2 == 0 else c2
            if cycle.odd:
                colors[cycle.edges[-1]] = c3
    for i, factor in enumerate(f.two_factors):
        if i == pivot:
            continue
        c1, c2 = next_color, next_color + 1
        next_color += 2
        for cycle in factor.cycles:
            for j in range(cycle.length):
                colors[cycle.edges[j]] = c1 if j % 2 == 0 else c2
    if f.one_factor is not None:
        for e in f.one_factor:
            colors[e] = next_color
        next_color += 1
    return PartialEdgeColoring(next_color - 1, tuple(colors))
