"""Property-based checks over small random multigraphs."""

from hypothesis import given, settings, strategies as st

import oracles
from uncolor import (
    boundary,
    build,
    chromatic_index,
    delete,
    format_mg,
    max_degree,
    parse_mg,
    reinsert_vertex,
    replay_trace,
    resistance,
    try_total_coloring,
    verify,
)


@st.composite
def multigraphs(draw, max_n=6, max_m=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    if n == 1:
        return build(1, [])
    pairs = st.tuples(
        st.integers(0, n - 1), st.integers(0, n - 1)
    ).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pairs, max_size=max_m))
    return build(n, edges)


@st.composite
def simple_graphs(draw, max_n=6):
    n = draw(st.integers(min_value=2, max_value=max_n))
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(all_pairs), unique=True, max_size=len(all_pairs)))
    return build(n, chosen)


@given(multigraphs())
def test_handshake(g):
    assert sum(g.degrees()) == 2 * g.m


@given(multigraphs(), st.data())
def test_boundary_complement(g, data):
    xs = data.draw(st.lists(st.integers(0, g.n - 1), unique=True))
    rest = [v for v in range(g.n) if v not in xs]
    assert boundary(g, xs) == boundary(g, rest)


@given(multigraphs())
def test_mg_round_trip(g):
    text = format_mg(g)
    parsed, _ = parse_mg(text)
    assert parsed == g
    assert format_mg(parsed) == text


@given(multigraphs())
def test_delete_nothing_identity(g):
    out = delete(g)
    assert out.graph == g and len(out.edge_map) == g.m


@given(multigraphs(max_n=5, max_m=8))
@settings(max_examples=40, deadline=None)
def test_chromatic_index_matches_oracle(g):
    res = chromatic_index(g)
    assert res.value == oracles.chromatic_index(g)
    assert res.value >= max_degree(g)
    if res.coloring is not None and g.m:
        report = verify(g, res.coloring)
        assert report.proper and report.uncolored_count == 0


@given(simple_graphs())
@settings(max_examples=40, deadline=None)
def test_vizing_band_on_simple_graphs(g):
    value = chromatic_index(g).value
    if g.m:
        assert max_degree(g) <= value <= max_degree(g) + 1


@given(multigraphs(max_n=5, max_m=7))
@settings(max_examples=30, deadline=None)
def test_resistance_matches_oracle(g):
    res = resistance(g)
    assert res.value == oracles.resistance(g)
    assert (res.value == 0) == (chromatic_index(g).value == max_degree(g))
    report = verify(g, res.coloring)
    assert report.proper and report.uncolored_count == res.value


@given(multigraphs(max_n=6, max_m=9), st.data())
@settings(max_examples=40, deadline=None)
def test_kempe_walk_invariants(g, data):
    if g.m == 0:
        return
    from uncolor import kempe_swap, kempe_walk

    res = chromatic_index(g)
    col = res.coloring
    start = data.draw(st.integers(0, g.n - 1))
    alpha = data.draw(st.integers(1, col.palette)) if col.palette else None
    beta = data.draw(st.integers(1, col.palette)) if col.palette else None
    if not alpha or not beta or alpha == beta:
        return
    walk = kempe_walk(g, col, start, alpha, beta)
    # consecutive edges share a vertex and colors strictly alternate
    for a, b in zip(walk.edges, walk.edges[1:]):
        assert set(g.edges[a]) & set(g.edges[b])
    for a, b in zip(walk.edge_colors, walk.edge_colors[1:]):
        assert {a, b} == {alpha, beta}
    # maximality: no unused edge of the wanted color at the terminal
    if walk.edges:
        want = beta if walk.edge_colors[-1] == alpha else alpha
        leftovers = [
            e for e, _ in g.incident(walk.terminal)
            if e not in set(walk.edges) and col.colors[e] == want
        ]
        assert not leftovers
    swapped = kempe_swap(g, col, walk)
    assert verify(g, swapped).proper


@given(multigraphs(max_n=6, max_m=9), st.data())
@settings(max_examples=40, deadline=None)
def test_reinsert_contract(g, data):
    if g.m == 0:
        return
    v = data.draw(st.integers(0, g.n - 1))
    palette = max_degree(g)
    part = delete(g, vertices=[v])
    status, small = try_total_coloring(part.graph, palette)
    if status != "sat":
        return
    lifted: list = [None] * g.m
    for old, new in part.edge_map.items():
        lifted[old] = small.colors[new]
    from uncolor import PartialEdgeColoring

    col = PartialEdgeColoring(palette, tuple(lifted))
    out, trace = reinsert_vertex(g, v, col)
    # the bound and the away-conservation law are asserted inside the call;
    # check the trace replays and the result verifies
    assert verify(g, out).proper
    assert trace.uncolored_at_vertex <= g.degree(v) // 2
    assert replay_trace(g, col, trace) == out
