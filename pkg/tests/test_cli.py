import json

import pytest

from uncolor import load_mg, parse_mg
from uncolor.cli import main


def run(*argv):
    return main([str(a) for a in argv])


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.mg"
    assert run("gen", "complete", "5", "-o", path) == 0
    return path


def test_gen_writes_provenance_comment(k5_file):
    g, comments = load_mg(k5_file)
    assert g.n == 5 and g.m == 10
    assert any("generator" in c for c in comments)


def test_gen_families(tmp_path):
    for args in (
        ["cycle", "6"], ["bipartite", "3", "3"], ["petersen"],
        ["meredith", "4"], ["sum", "complete:4", "2"], ["ok", "1", "3"],
        ["triangle-chain", "2"], ["odd-delta", "2"],
    ):
        out = tmp_path / ("_".join(args).replace(":", "") + ".mg")
        assert run("gen", *args, "-o", out) == 0
        g, _ = load_mg(out)
        assert g.m > 0


def test_gen_join2(tmp_path, k5_file):
    other = tmp_path / "k4.mg"
    run("gen", "complete", "4", "-o", other)
    joined = tmp_path / "join.mg"
    assert run("gen", "join2", other, "0", other, "0", "-o", joined) == 0
    g, _ = load_mg(joined)
    assert g.n == 8 and g.m == 12


def test_gen_bad_params():
    assert run("gen", "complete") == 2
    assert run("gen", "sum", "nonsense:3", "2") == 2


def test_measure_k5(tmp_path, k5_file, capsys):
    assert run("measure", k5_file, "--all", "--cert-dir", tmp_path) == 0
    shown = capsys.readouterr().out
    assert "chi'     5" in shown
    assert "r        2" in shown
    report = json.loads((tmp_path / "k5.report.json").read_text())
    assert report["schema"] == 1
    assert report["measures"]["chi"]["value"] == 5
    assert report["measures"]["r"]["value"] == 2
    assert report["measures"]["r_v"]["value"] == 1
    assert report["measures"]["r_v_prime"]["value"] == 1
    assert report["measures"]["oddness"]["value"] == 2


def test_measure_certificates_all_verify(tmp_path, k5_file):
    assert run("measure", k5_file, "--all", "--cert-dir", tmp_path) == 0
    report = json.loads((tmp_path / "k5.report.json").read_text())
    for kind, cert_path in report["certificates"].items():
        assert run("verify", k5_file, cert_path) == 0, kind


def test_measure_c6_all_zero_but_chi(tmp_path):
    c6 = tmp_path / "c6.mg"
    run("gen", "cycle", "6", "-o", c6)
    assert run("measure", c6, "--all", "--cert-dir", tmp_path) == 0
    report = json.loads((tmp_path / "c6.report.json").read_text())
    values = {k: v["value"] for k, v in report["measures"].items()}
    assert values == {"chi": 2, "r": 0, "r_v": 0, "r_v_prime": 0, "oddness": 0}


def test_measure_unknown_budget(tmp_path):
    m5 = tmp_path / "m5.mg"
    run("gen", "meredith", "5", "-o", m5)
    assert run("measure", m5, "--r", "--node-budget", "50") == 3


def test_verify_undecided_budget(tmp_path, k5_file):
    cert = tmp_path / "del.json"
    cert.write_text(json.dumps({"kind": "edge-deletion", "edges": [0, 5]}))
    assert run("verify", k5_file, cert, "--node-budget", "3") == 3
    assert run("verify", k5_file, cert) == 0


def test_measure_parse_error(tmp_path):
    bad = tmp_path / "bad.mg"
    bad.write_text("p 2 1\nq 0 1\n")
    assert run("measure", bad, "--all") == 2


def test_verify_tampered_coloring(tmp_path, k5_file):
    run("measure", k5_file, "--chi", "--cert-dir", tmp_path)
    cert = tmp_path / "k5.chi.cert.json"
    data = json.loads(cert.read_text())
    data["colors"][1] = data["colors"][0]
    cert.write_text(json.dumps(data))
    assert run("verify", k5_file, cert) == 1


def test_verify_factorization_partition_failure(tmp_path, k5_file):
    run("measure", k5_file, "--oddness", "--cert-dir", tmp_path)
    cert = tmp_path / "k5.oddness.cert.json"
    data = json.loads(cert.read_text())
    data["two_factors"][0] = data["two_factors"][0][:-1]
    cert.write_text(json.dumps(data))
    assert run("verify", k5_file, cert) == 1


def test_verify_unknown_kind(tmp_path, k5_file):
    cert = tmp_path / "odd.json"
    cert.write_text(json.dumps({"kind": "mystery"}))
    assert run("verify", k5_file, cert) == 2


def test_verify_reinsertion_trace(tmp_path, k5_file):
    from uncolor import load_mg, rebuild, save_mg

    g, _ = load_mg(k5_file)
    built = rebuild(g, [0])
    step = built.steps[0]
    graph_path = tmp_path / "step.mg"
    save_mg(graph_path, step.graph)
    cert = tmp_path / "trace.json"
    cert.write_text(json.dumps(step.trace.certificate(step.before, step.after)))
    assert run("verify", graph_path, cert) == 0
    # tampering with the recorded final coloring must fail
    data = json.loads(cert.read_text())
    colored = next(i for i, c in enumerate(data["final"]) if c is not None)
    data["final"][colored] = None
    cert.write_text(json.dumps(data))
    assert run("verify", graph_path, cert) == 1


def test_verify_vertex_deletion(tmp_path, k5_file):
    cert = tmp_path / "vd.json"
    cert.write_text(json.dumps(
        {"kind": "vertex-deletion", "mode": "class1", "vertices": [0]}
    ))
    assert run("verify", k5_file, cert) == 0
    cert.write_text(json.dumps(
        {"kind": "vertex-deletion", "mode": "class1", "vertices": []}
    ))
    assert run("verify", k5_file, cert) == 1


def test_survey_small_corpus(tmp_path, capsys):
    for fam, args in (("complete", ["5"]), ("cycle", ["6"]), ("petersen", [])):
        run("gen", fam, *args, "-o", tmp_path / f"{fam}.mg")
    assert run("survey", tmp_path, "--node-budget", "2000000") == 0
    shown = capsys.readouterr().out
    assert "complete" in shown and "FAIL" not in shown


def test_survey_empty_dir(tmp_path):
    assert run("survey", tmp_path) == 2


def test_measure_verify_self_consistency_on_corpus(tmp_path):
    # every certificate the measure command emits must pass the verifier
    from uncolor import save_mg
    from corpus import build_corpus

    graphs = build_corpus()
    picked = [
        "complete_5", "complete_7", "cycle_5", "petersen", "tripled_edge",
        "meredith_4", "triangle_chain_2", "sum_2_k4", "bridged_cubic",
        "petersen_minus_spokes", "meredith_ring_3x3",
    ]
    for name in picked:
        path = tmp_path / f"{name}.mg"
        save_mg(path, graphs[name])
        code = run(
            "measure", path, "--all", "--rv-cap", "2",
            "--node-budget", "3000000", "--cert-dir", tmp_path,
        )
        assert code in (0, 3), name
        report = json.loads((tmp_path / f"{name}.report.json").read_text())
        for kind, cert_path in report["certificates"].items():
            assert run("verify", path, cert_path) == 0, f"{name}:{kind}"


def test_round_trip_through_cli(tmp_path, k5_file):
    text = k5_file.read_text()
    g, comments = parse_mg(text)
    from uncolor import format_mg

    assert format_mg(g, comments) == text
