"""Deterministic constructors for the graph families used by the test corpus.

Every generator emits vertices and EdgeIds in a fixed documented order so
that designated edges and certificates are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import MultiGraph, build


def complete_graph(n: int) -> MultiGraph:
    """K_n; edges (i, j) with i < j in lexicographic order."""
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> MultiGraph:
    """C_n; n = 2 gives the doubled edge (a 2-cycle of parallel edges)."""
    if n < 2:
        raise ValueError("cycle needs n >= 2")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> MultiGraph:
    """K_{a,b}; left side 0..a-1, right side a..a+b-1, edges left-major."""
    if a < 1 or b < 1:
        raise ValueError("bipartite sides must be >= 1")
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> MultiGraph:
    """Petersen graph: outer 5-cycle 0-4, inner pentagram 5-9, spokes i-(i+5)."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build(10, outer + inner + spokes)


def meredith(s: int) -> tuple[MultiGraph, int]:
    """Petersen with the spoke matching raised to multiplicity s - 2.

    Returns the graph and a designated simple edge outside the matching (the
    lowest such EdgeId, which is the outer edge 0-1).  s = 3 is the Petersen
    graph itself.
    """
    if s < 3:
        raise ValueError("meredith needs s >= 3")
    base = petersen()
    extra = [(i, i + 5) for _ in range(s - 3) for i in range(5)]
    return build(10, list(base.edges) + extra), 0


@dataclass(frozen=True)
class SumResult:
    graph: MultiGraph
    vertex_maps: tuple[dict[int, int], ...]
    join_edges: tuple[int, ...]


def sum_construction(parts: list[tuple[MultiGraph, int]]) -> SumResult:
    """Ring-join of parts: drop each designated edge, then add join edges.

    Designated edge i has stored endpoints (v_i, w_i).  With parts indexed
    0..n, the join edges are v_{2j}v_{2j+1} and w_{2j+1}w_{2j+2} for
    0 <= j <= k-1, closing the ring with v_{2k}w_0 when the count n+1 = 2k+1
    is odd, and with w-indices taken modulo 2k when the count is even.
    If all parts are s-regular the result is s-regular.
    """
    if len(parts) < 2:
        raise ValueError("sum construction needs at least 2 parts")
    for idx, (g, e) in enumerate(parts):
        if not (0 <= e < g.m):
            raise ValueError(f"part {idx}: designated edge {e} absent")
    offsets = []
    total = 0
    edges: list[tuple[int, int]] = []
    for g, e in parts:
        offsets.append(total)
        edges.extend(
            (u + total, v + total) for i, (u, v) in enumerate(g.edges) if i != e
        )
        total += g.n
    vs = [g.edges[e][0] + off for (g, e), off in zip(parts, offsets)]
    ws = [g.edges[e][1] + off for (g, e), off in zip(parts, offsets)]
    count = len(parts)
    join: list[tuple[int, int]] = []
    if count % 2 == 1:  # count = 2k+1
        k = count // 2
        for j in range(k):
            join.append((vs[2 * j], vs[2 * j + 1]))
            join.append((ws[2 * j + 1], ws[2 * j + 2]))
        join.append((vs[2 * k], ws[0]))
    else:  # count = 2k
        k = count // 2
        for j in range(k):
            join.append((vs[2 * j], vs[2 * j + 1]))
            join.append((ws[2 * j + 1], ws[(2 * j + 2) % count]))
    first_join = len(edges)
    edges.extend(join)
    vmaps = tuple(
        {v: v + off for v in range(g.n)} for (g, _), off in zip(parts, offsets)
    )
    graph = build(total, edges)
    return SumResult(graph, vmaps, tuple(range(first_join, len(edges))))


def meredith_ring(copies: int, s: int) -> MultiGraph:
    """Ring-sum of `copies` Meredith graphs with the designated edge removed."""
    if copies < 2:
        raise ValueError("meredith ring needs at least 2 copies")
    g, e = meredith(s)
    return sum_construction([(g, e)] * copies).graph


def triangle_chain(k: int) -> MultiGraph:
    """Chain of k+1 multi-triangles.

    Block 0 is a triangle with every edge doubled; blocks 1..k have one simple
    edge a_i b_i and the other two edges doubled; consecutive blocks are
    chained by simple edges b_{i-1} a_i.  Vertices of block i are
    a_i = 3i, b_i = 3i+1, v_i = 3i+2.
    """
    if k < 0:
        raise ValueError("triangle chain needs k >= 0")
    edges: list[tuple[int, int]] = []
    edges += [(0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)]
    for i in range(1, k + 1):
        a, b, v = 3 * i, 3 * i + 1, 3 * i + 2
        edges += [(a, b), (a, v), (a, v), (b, v), (b, v)]
    for i in range(1, k + 1):
        edges.append((3 * (i - 1) + 1, 3 * i))
    return build(3 * (k + 1), edges)


def _hub_side(k: int) -> tuple[int, list[tuple[int, int]]]:
    """One half of the odd-delta construction: k subdivided complete bipartite
    blocks sharing their subdivision vertex, which becomes the hub (vertex 0)."""
    size = 2 * k + 1
    n_side = k * (2 * size) + 1
    edges: list[tuple[int, int]] = []
    for c in range(k):
        base = 1 + c * 2 * size
        left = [base + i for i in range(size)]
        right = [base + size + j for j in range(size)]
        for i in range(size):
            for j in range(size):
                if i == 0 and j == 0:
                    continue  # this edge is subdivided through the hub
                edges.append((left[i], right[j]))
        edges.append((0, left[0]))
        edges.append((0, right[0]))
    return n_side, edges


def odd_delta(k: int) -> MultiGraph:
    """(2k+1)-regular extremal graph built from subdivided K_{2k+1,2k+1} blocks.

    Two hub-joined halves; each half is k copies of a once-subdivided
    K_{2k+1,2k+1} with the subdivision vertices identified into a hub.  The
    hubs are vertices 0 and k(4k+2)+1 and are joined by the final edge.
    """
    if k < 2:
        raise ValueError("odd-delta construction needs k >= 2")
    n_side, side_edges = _hub_side(k)
    edges = list(side_edges)
    edges.extend((u + n_side, v + n_side) for u, v in side_edges)
    edges.append((0, n_side))
    return build(2 * n_side, edges)


def two_edge_join(
    g: MultiGraph, ge: int, h: MultiGraph, he: int
) -> tuple[MultiGraph, tuple[int, int]]:
    """Join g - ge and h - he by the two edges (v, x) and (w, y).

    Here (v, w) are the stored endpoints of ge and (x, y) those of he; h's
    vertices are offset by g.n.  Returns the graph and the ids of the two new
    edges, which form a 2-edge cut.
    """
    if not (0 <= ge < g.m):
        raise ValueError(f"designated edge {ge} absent from first graph")
    if not (0 <= he < h.m):
        raise ValueError(f"designated edge {he} absent from second graph")
    v, w = g.edges[ge]
    x, y = h.edges[he]
    edges = [pair for i, pair in enumerate(g.edges) if i != ge]
    edges.extend(
        (u + g.n, z + g.n) for i, (u, z) in enumerate(h.edges) if i != he
    )
    first = len(edges)
    edges.append((v, x + g.n))
    edges.append((w, y + g.n))
    return build(g.n + h.n, edges), (first, first + 1)
