"""The generated corpus driven by the invariant sweep and acceptance tests.

Hand-built extras that are not CLI families: the tripled edge (smallest
3-regular graph meeting every odd-cut requirement), a cubic multigraph with
a bridge, a cubic multigraph without a perfect matching, and the Petersen
graph minus its spoke matching (disconnected, 2-regular).
"""

from __future__ import annotations

from uncolor import MultiGraph, build, resistance
from uncolor import generators as gen


def tripled_edge() -> MultiGraph:
    return build(2, [(0, 1)] * 3)


def doubled_triangle_blob() -> list[tuple[int, int]]:
    # triangle a=0, b=1, c=2 with ab doubled; c is the degree-2 attachment
    return [(0, 1), (0, 1), (0, 2), (1, 2)]


def bridged_cubic() -> MultiGraph:
    """Two doubled-edge triangles joined by a bridge: 3-regular with a
    1-edge cut, so one blob violates the odd-cut requirement."""
    edges = []
    for off in (0, 3):
        edges.extend((u + off, v + off) for u, v in doubled_triangle_blob())
    edges.append((2, 5))
    return build(6, edges)


def spider_no_matching() -> MultiGraph:
    """Three doubled-edge triangles hung off one center: cubic with no
    perfect matching, hence infinite oddness."""
    edges = []
    for b in range(3):
        off = 3 * b
        edges.extend((u + off, v + off) for u, v in doubled_triangle_blob())
        edges.append((2 + off, 9))
    return build(10, edges)


def petersen_minus_spokes() -> MultiGraph:
    p = gen.petersen()
    from uncolor import delete

    spokes = [e for e, (u, v) in enumerate(p.edges) if abs(u - v) == 5]
    return delete(p, edges=spokes).graph


def build_corpus() -> dict[str, MultiGraph]:
    o1 = gen.meredith_ring(3, 3)
    vw = resistance(o1).deleted[0]
    join, _ = gen.two_edge_join(o1, vw, o1, vw)
    m4, _ = gen.meredith(4)
    m5, _ = gen.meredith(5)
    k4 = gen.complete_graph(4)
    k44 = gen.complete_bipartite(4, 4)
    m3, m3e = gen.meredith(3)
    return {
        "complete_3": gen.complete_graph(3),
        "complete_5": gen.complete_graph(5),
        "complete_7": gen.complete_graph(7),
        "cycle_4": gen.cycle_graph(4),
        "cycle_5": gen.cycle_graph(5),
        "cycle_6": gen.cycle_graph(6),
        "cycle_7": gen.cycle_graph(7),
        "petersen": gen.petersen(),
        "bipartite_33": gen.complete_bipartite(3, 3),
        "bipartite_44": k44,
        "tripled_edge": tripled_edge(),
        "meredith_4": m4,
        "meredith_5": m5,
        "meredith_ring_3x3": o1,
        "sum_2_meredith3": gen.sum_construction([(m3, m3e)] * 2).graph,
        "sum_2_k4": gen.sum_construction([(k4, 0)] * 2).graph,
        "sum_3_k4": gen.sum_construction([(k4, 0)] * 3).graph,
        "sum_2_k44": gen.sum_construction([(k44, 0)] * 2).graph,
        "sum_3_k44": gen.sum_construction([(k44, 0)] * 3).graph,
        "triangle_chain_0": gen.triangle_chain(0),
        "triangle_chain_1": gen.triangle_chain(1),
        "triangle_chain_2": gen.triangle_chain(2),
        "triangle_chain_3": gen.triangle_chain(3),
        "odd_delta_2": gen.odd_delta(2),
        "join_two_rings": join,
        "petersen_minus_spokes": petersen_minus_spokes(),
        "bridged_cubic": bridged_cubic(),
        "spider_no_matching": spider_no_matching(),
    }
