import pytest

from uncolor import (
    PartialEdgeColoring,
    RuleStep,
    build,
    chromatic_index,
    delete,
    max_degree,
    r_v,
    r_v_prime,
    ratio_report,
    rebuild,
    reinsert_vertex,
    replay_trace,
    resistance,
    try_total_coloring,
    vertex_deletion_certificate,
    verify,
)
from uncolor import generators as gen
from uncolor.vertex_measures import ReinsertionTrace


def test_r_v_k5():
    res = r_v(gen.complete_graph(5))
    assert res.value == 1 and res.witness == (0,)
    rest = delete(gen.complete_graph(5), vertices=res.witness).graph
    assert chromatic_index(rest).value == max_degree(rest)


def test_r_v_class_one_graph():
    assert r_v(gen.cycle_graph(6)).value == 0


@pytest.mark.parametrize("k", [1, 2, 3])
def test_r_v_triangle_chain(k):
    assert r_v(gen.triangle_chain(k)).value == k + 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_r_v_prime_triangle_chain(k):
    assert r_v_prime(gen.triangle_chain(k)).value == 1


def test_r_v_prime_k5_k7():
    assert r_v_prime(gen.complete_graph(5)).value == 1
    assert r_v_prime(gen.complete_graph(7)).value == 1


def test_r_v_prime_class_one_graph():
    assert r_v_prime(gen.cycle_graph(6)).value == 0


def test_r_v_petersen():
    assert r_v(gen.petersen()).value == 2
    assert r_v_prime(gen.petersen()).value == 2


def test_r_v_prime_never_exceeds_r_v():
    for g in (
        gen.complete_graph(5),
        gen.triangle_chain(2),
        gen.petersen(),
        gen.cycle_graph(5),
    ):
        assert r_v_prime(g).value <= r_v(g).value


def test_vertex_measure_witness_feasible():
    g = gen.triangle_chain(2)
    res = r_v_prime(g)
    rest = delete(g, vertices=res.witness).graph
    status, _ = try_total_coloring(rest, max_degree(g))
    assert status == "sat"
    cert = vertex_deletion_certificate(res)
    assert cert == {"kind": "vertex-deletion", "mode": "delta",
                    "vertices": list(res.witness)}


def test_r_v_size_cap():
    res = r_v_prime(gen.meredith_ring(3, 3), max_size=2)
    assert res.status == "unknown" and res.lower_bound == 3


def test_r_v_disconnected():
    g = build(11, [(i, (i + 1) % 5) for i in range(5)]
              + [(5 + u, 5 + v) for u in range(5) for v in range(u + 1, 5)])
    # C5 needs one deletion, K5 needs one
    assert r_v(g).value == 2


# ---------------------------------------------------------------------------
# reinsertion


def test_reinsert_star_colors_everything():
    star = build(4, [(0, 1), (0, 2), (0, 3)])
    col = PartialEdgeColoring(3, (None, None, None))
    out, trace = reinsert_vertex(star, 0, col)
    assert out.uncolored_count == 0
    assert [s.rule for s in trace.steps] == [1, 1, 1]
    assert trace.uncolored_at_vertex == 0


def test_reinsert_c5_leaves_one():
    c5 = gen.cycle_graph(5)
    # vertex 0 touches edges 0 and 4; color the remaining path with 2 colors
    col = PartialEdgeColoring(2, (None, 1, 2, 1, None))
    out, trace = reinsert_vertex(c5, 0, col)
    assert verify(c5, out).proper
    at_v = [e for e, _ in c5.incident(0) if out.colors[e] is None]
    assert len(at_v) == 1 == trace.uncolored_at_vertex


def test_reinsert_k5_hits_half_degree_bound():
    k5 = gen.complete_graph(5)
    part = delete(k5, vertices=[0])
    status, small = try_total_coloring(part.graph, 4)
    assert status == "sat"
    lifted: list = [None] * k5.m
    for old, new in part.edge_map.items():
        lifted[old] = small.colors[new]
    col = PartialEdgeColoring(4, tuple(lifted))
    out, trace = reinsert_vertex(k5, 0, col)
    assert verify(k5, out).proper
    # r(K5) = 2, and the guarantee allows at most floor(4/2) = 2
    assert trace.uncolored_at_vertex == 2


def test_reinsert_rejects_precolored_center():
    star = build(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(ValueError, match="already colored"):
        reinsert_vertex(star, 0, PartialEdgeColoring(3, (1, None, None)))


def test_reinsert_rejects_improper():
    g = build(4, [(0, 1), (1, 2), (1, 3)])
    with pytest.raises(ValueError, match="proper"):
        reinsert_vertex(g, 0, PartialEdgeColoring(3, (None, 1, 1)))


def test_reinbuilt_trace_replays():
    c5 = gen.cycle_graph(5)
    col = PartialEdgeColoring(2, (None, 1, 2, 1, None))
    out, trace = reinsert_vertex(c5, 0, col)
    assert replay_trace(c5, col, trace) == out


def test_replay_rejects_tampered_trace():
    c5 = gen.cycle_graph(5)
    col = PartialEdgeColoring(2, (None, 1, 2, 1, None))
    out, trace = reinsert_vertex(c5, 0, col)
    assert trace.steps, "expected at least one rule application"
    first = trace.steps[0]
    # color 1 is present at both neighbors of vertex 0, so a rule-1 step
    # claiming it as the shared missing color is illegal
    forged = ReinsertionTrace(
        trace.vertex,
        trace.palette,
        (RuleStep(1, first.edge, 1),) + trace.steps[1:],
        trace.uncolored_at_vertex,
    )
    with pytest.raises(AssertionError):
        replay_trace(c5, col, forged)


def test_replay_synthetic_rule3():
    # a state where rule 3's preconditions hold: center 0 with two uncolored
    # edges, far ends sharing missing color 1, and 0's color-1 edge cleared
    g = build(4, [(0, 1), (0, 2), (0, 3), (1, 3)])
    base = PartialEdgeColoring(4, (None, None, 1, 2))
    step = RuleStep(3, edge=1, alpha=1, beta=2, gamma=2, partner=0,
                    cleared=2, walk=(3,))
    trace = ReinsertionTrace(0, 4, (step,), 0)
    out = replay_trace(g, base, trace)
    assert out.colors == (None, 1, None, 1)
    assert verify(g, out).proper


# ---------------------------------------------------------------------------
# rebuild


def test_rebuild_empty_order_class_one():
    c6 = gen.cycle_graph(6)
    res = rebuild(c6, [])
    assert res.upper_bound == 0
    assert verify(c6, res.coloring).proper


def test_rebuild_k5():
    k5 = gen.complete_graph(5)
    res = rebuild(k5, [0])
    assert res.upper_bound == 2  # tight: r(K5) = 2 = 1 * floor(4/2)
    assert verify(k5, res.coloring).proper
    assert res.coloring.uncolored_count == 2


def test_rebuild_c5():
    res = rebuild(gen.cycle_graph(5), [0])
    assert res.upper_bound == 1


def test_rebuild_gives_resistance_upper_bound():
    for g, order in [
        (gen.complete_graph(5), [0]),
        (gen.complete_graph(7), [0]),
        (gen.triangle_chain(1), [2]),
    ]:
        res = rebuild(g, order)
        assert resistance(g).value <= res.upper_bound
        assert res.upper_bound <= len(order) * (max_degree(g) // 2)


def test_rebuild_step_conservation():
    res = rebuild(gen.complete_graph(7), [0, 1])
    for step in res.steps:
        v = step.vertex
        away_before = sum(
            1 for e, (x, y) in enumerate(step.graph.edges)
            if step.before.colors[e] is None and v not in (x, y)
        )
        away_after = sum(
            1 for e, (x, y) in enumerate(step.graph.edges)
            if step.after.colors[e] is None and v not in (x, y)
        )
        assert away_before == away_after
        assert step.trace.uncolored_at_vertex <= step.graph.degree(v) // 2
        assert replay_trace(step.graph, step.before, step.trace) == step.after


def test_rebuild_rejects_uncolorable_remainder():
    m4, _ = gen.meredith(4)
    with pytest.raises(ValueError, match="not colorable"):
        rebuild(m4, [0])


def test_rebuild_rejects_duplicate_order():
    with pytest.raises(ValueError, match="repeats"):
        rebuild(gen.complete_graph(5), [0, 0])


def test_rebuild_odd_delta_hubs():
    od = gen.odd_delta(2)
    hubs = [0, od.n // 2]
    res = rebuild(od, hubs)
    assert res.upper_bound <= 4
    assert verify(od, res.coloring).proper


# ---------------------------------------------------------------------------
# ratio report


def test_ratio_report_k5():
    rep = ratio_report(gen.complete_graph(5))
    assert not rep.partial
    assert rep.bound == 2
    assert rep.resistance.value == 2
    assert rep.vertex_class1.value == 1
    assert rep.vertex_delta.value == 1
    assert rep.ratios() == {"r_v": 2, "r_v_prime": 2}  # meets the bound


def test_ratio_report_petersen_case2():
    rep = ratio_report(gen.petersen())
    assert rep.resistance.value == rep.vertex_class1.value == rep.vertex_delta.value == 2


def test_ratio_report_triangle_chain():
    rep = ratio_report(gen.triangle_chain(1))
    assert rep.resistance.value == 1
    assert rep.vertex_delta.value == 1
    assert rep.vertex_class1.value == 2
    assert rep.bound == 2
