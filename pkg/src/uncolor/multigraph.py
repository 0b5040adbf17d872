"""Loop-free multigraph with stable integer edge identities.

Vertices are dense indices 0..n-1.  Edges are (u, v) endpoint pairs kept in
input order; the position of a pair in the list is its EdgeId and is never
renumbered by queries.  Parallel edges are distinct first-class edges, so
EdgeIds, not endpoint pairs, identify an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Malformed graph text input."""


class NotRegularError(ValueError):
    """Operation requires a regular graph."""


class VertexBudgetError(RuntimeError):
    """Exhaustive vertex-subset enumeration refused: graph too large."""


class EnumerationBudgetError(RuntimeError):
    """A combinatorial enumeration exceeded its node budget."""


class MultiGraph:
    """Immutable loop-free multigraph. Safe for concurrent reads."""

    __slots__ = ("n", "edges", "_incidence", "_degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        checked = []
        for idx, pair in enumerate(edges):
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {idx}: endpoint out of range ({u}, {v})")
            if u == v:
                raise ValueError(f"edge {idx}: loop at vertex {u}")
            checked.append((u, v))
        self.n = n
        self.edges = tuple(checked)
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append((e, v))
            inc[v].append((e, u))
        self._incidence = tuple(tuple(entries) for entries in inc)
        self._degrees = tuple(len(entries) for entries in inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """(edge_id, other_endpoint) pairs at v, in EdgeId order of insertion."""
        return self._incidence[v]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if v == u else u

    def is_regular(self) -> bool:
        return self.n == 0 or len(set(self._degrees)) == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


def build(n: int, endpoints: Iterable[tuple[int, int]]) -> MultiGraph:
    """Build a multigraph from a vertex count and ordered endpoint pairs."""
    return MultiGraph(n, endpoints)


def max_degree(g: MultiGraph) -> int:
    return max(g.degrees(), default=0)


def vertex_set(g: MultiGraph, vs: Iterable[int]) -> tuple[int, ...]:
    """Sorted duplicate-free vertex tuple, validated against g."""
    out = sorted(set(vs))
    for v in out:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    return tuple(out)


def edge_set(g: MultiGraph, es: Iterable[int]) -> tuple[int, ...]:
    """Sorted duplicate-free EdgeId tuple, validated against g."""
    out = sorted(set(es))
    for e in out:
        if not (0 <= e < g.m):
            raise ValueError(f"edge {e} out of range")
    return tuple(out)


def boundary(g: MultiGraph, xs: Iterable[int]) -> tuple[int, ...]:
    """EdgeIds with exactly one endpoint in xs, counted with multiplicity."""
    members = set(vertex_set(g, xs))
    return tuple(
        e for e, (u, v) in enumerate(g.edges) if (u in members) != (v in members)
    )


def components(g: MultiGraph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for _, w in g.incident(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return out


@dataclass(frozen=True)
class DeleteResult:
    graph: MultiGraph
    edge_map: dict[int, int]
    vertex_map: dict[int, int]


def delete(
    g: MultiGraph,
    vertices: Iterable[int] = (),
    edges: Iterable[int] = (),
) -> DeleteResult:
    """Remove vertices (with their incident edges) and edges; renumber densely.

    Returns the induced graph together with old->new EdgeId and vertex
    remapping tables for the survivors.
    """
    gone_v = set(vertex_set(g, vertices))
    gone_e = set(edge_set(g, edges))
    vmap: dict[int, int] = {}
    for v in range(g.n):
        if v not in gone_v:
            vmap[v] = len(vmap)
    emap: dict[int, int] = {}
    new_edges = []
    for e, (u, v) in enumerate(g.edges):
        if e in gone_e or u in gone_v or v in gone_v:
            continue
        emap[e] = len(new_edges)
        new_edges.append((vmap[u], vmap[v]))
    return DeleteResult(MultiGraph(len(vmap), new_edges), emap, vmap)


@dataclass(frozen=True)
class SGraphResult:
    is_s_graph: bool
    s: int
    witness: tuple[int, ...] | None


def is_s_graph(g: MultiGraph, vertex_budget: int = 22) -> SGraphResult:
    """Decide whether every odd vertex set has boundary at least s.

    Requires an s-regular input.  Enumerates all odd subsets exhaustively
    (Gray-code walk over edge-incidence bitmasks), so it refuses graphs with
    more than `vertex_budget` vertices.  On failure the witness is the first
    violating odd set found.
    """
    if not g.is_regular():
        raise NotRegularError("s-graph test requires a regular graph")
    s = max_degree(g)
    n = g.n
    if n == 0:
        return SGraphResult(True, s, None)
    if s == 0:
        return SGraphResult(True, 0, None)
    if n % 2 == 1:
        # the full vertex set is odd and has empty boundary
        return SGraphResult(False, s, tuple(range(n)))
    if n > vertex_budget:
        raise VertexBudgetError(
            f"{n} vertices exceeds the enumeration budget of {vertex_budget}"
        )
    rows = [0] * n
    for e, (u, v) in enumerate(g.edges):
        bit = 1 << e
        rows[u] |= bit
        rows[v] |= bit
    # Fix vertex 0 inside X: complements have equal boundary and, with n even,
    # matching parity, so each odd cut is still seen once.
    acc = rows[0]
    mask = 0  # subset of vertices 1..n-1, bit i-1 = vertex i
    ones = 0
    if acc.bit_count() < s:  # X = {0}
        return SGraphResult(False, s, (0,))
    for k in range(1, 1 << (n - 1)):
        flip = (k & -k).bit_length() - 1  # vertex flip+1 toggles
        bit = 1 << flip
        mask ^= bit
        acc ^= rows[flip + 1]
        ones += 1 if mask & bit else -1
        if ones % 2 == 0 and acc.bit_count() < s:
            witness = [0] + [i + 1 for i in range(n - 1) if mask >> i & 1]
            return SGraphResult(False, s, tuple(witness))
    return SGraphResult(True, s, None)


def format_mg(g: MultiGraph, comments: Sequence[str] = ()) -> str:
    """Render a graph in the text format: comments, `p n m`, then `e u v` lines."""
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_mg(text: str) -> tuple[MultiGraph, tuple[str, ...]]:
    """Parse the text format; returns the graph and any comment lines."""
    n = None
    declared_m = None
    pairs: list[tuple[int, int]] = []
    comments: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(tokens) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'p <n> <m>'")
            try:
                n, declared_m = int(tokens[1]), int(tokens[2])
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: non-integer counts") from exc
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(tokens) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                pairs.append((int(tokens[1]), int(tokens[2])))
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: non-integer endpoint") from exc
        else:
            raise GraphFormatError(f"line {lineno}: unknown record '{tokens[0]}'")
    if n is None:
        raise GraphFormatError("missing problem line")
    if declared_m != len(pairs):
        raise GraphFormatError(
            f"problem line declares {declared_m} edges, found {len(pairs)}"
        )
    try:
        g = MultiGraph(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc
    return g, tuple(comments)


def load_mg(path) -> tuple[MultiGraph, tuple[str, ...]]:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_mg(handle.read())


def save_mg(path, g: MultiGraph, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_mg(g, comments))
