"""Smoke tests for the Python bindings and the CLI JSON contract."""

import itertools
import json
import os
import random
import subprocess

import pytest

import rigidlink as rl

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def complete_graph(n):
    return rl.Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def wheel(rim):
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    return rl.Graph(rim + 1, edges)


def test_graph_basics():
    g = rl.Graph(4, K4_EDGES, labels={0: "a", 1: "b"})
    assert g.n == 4 and g.m == 6
    assert g.neighbors(0) == [1, 2, 3]
    assert g.vertex_by_label("b") == 1
    round_tripped = rl.loads(g.dumps("json"))
    assert round_tripped == g
    assert rl.loads(g.dumps("edge-list")).m == 6

    with pytest.raises(ValueError):
        rl.Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        rl.loads("3 1\n0 9")


def test_rank_and_rigidity():
    k4 = complete_graph(4)
    assert rl.rank2(k4) == 5
    assert rl.generic_rank(k4, dim=2)["rank"] == 5
    assert rl.is_rigid2(k4)
    assert rl.is_redundantly_rigid2(k4)
    assert rl.r2_bridges(k4) == []
    assert rl.is_globally_rigid2(k4)["globally_rigid"]

    w5 = wheel(5)
    assert rl.rank2(w5) == 9
    assert rl.is_globally_rigid2(w5)["globally_rigid"]


def test_pair_classification():
    k4_minus = complete_graph(4).without_edge(2, 3)
    verdict = rl.classify_pair(k4_minus, 2, 3)
    assert verdict["verdict"] == "GloballyLoose"
    assert verdict["reason"] == "KappaAtMostTwo"
    assert verdict["certificate"]["kappa"] == 2

    w5 = wheel(5)
    linked = rl.weakly_linked_pairs(w5)
    assert sorted(linked) == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]

    via_all = rl.classify_all_pairs(w5, threads=2)
    assert {(p["u"], p["v"]): p["verdict"] for p in via_all} == {
        pair: "WeaklyGloballyLinked" for pair in sorted(linked)
    }


def test_constructions_and_connectivity():
    w5 = wheel(5)
    assert rl.is_k_connected(w5, 3)
    assert rl.kappa_pair(w5, 0, 2) == 3
    block = rl.three_block(w5, 0, 2)
    assert not block["separating_pair"]
    assert block["block"]["graph"]["n"] == 6

    clique, to_parent = rl.clique_graph(w5, [0, 1, 2, 3, 4, 5])
    assert clique == w5 and to_parent == [0, 1, 2, 3, 4, 5]

    contracted, old_to_new = rl.contract_set(complete_graph(4), [0, 1])
    assert contracted == complete_graph(3)
    assert old_to_new == [0, 0, 1, 2]


def test_oracle_agreement_on_random_graphs():
    rng = random.Random(20240613)
    for _ in range(25):
        n = rng.randint(2, 8)
        pool = list(itertools.combinations(range(n), 2))
        edges = rng.sample(pool, rng.randint(0, len(pool)))
        g = rl.Graph(n, edges)
        assert rl.rank2(g) == rl.generic_rank(g, dim=2, repetitions=3)["rank"]


def test_equivalence_sampler():
    square = rl.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    witness = rl.equivalence_sampler(square, 0, 2, dim=2, trials=100, seed=7)
    assert witness is not None
    assert witness["distance_gap"] >= 1e-4

    assert rl.equivalence_sampler(complete_graph(4), 0, 2, dim=2, trials=100, seed=7) is None


# ---- CLI contract ---------------------------------------------------------

CLI = os.environ.get("RIGIDLINK_CLI")
SCHEMA_PATH = os.environ.get("RIGIDLINK_SCHEMA")

needs_cli = pytest.mark.skipif(
    not (CLI and SCHEMA_PATH and os.path.exists(CLI) and os.path.exists(SCHEMA_PATH)),
    reason="RIGIDLINK_CLI / RIGIDLINK_SCHEMA not set",
)


def run_cli(*args, expect_code=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect_code, proc.stderr
    return proc


@pytest.fixture(scope="module")
def schema():
    with open(SCHEMA_PATH, encoding="utf-8") as handle:
        return json.load(handle)


@pytest.fixture()
def k4_file(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    return str(path)


@pytest.fixture()
def lobe_file(tmp_path):
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (1, 5), (2, 5), (3, 5), (4, 5),
             (0, 6), (6, 7), (2, 7)]
    path = tmp_path / "lobe.json"
    path.write_text(json.dumps({"n": 8, "edges": [list(e) for e in edges],
                                "labels": {"1": "left", "3": "right"}}))
    return str(path)


@needs_cli
def test_cli_reports_validate_against_schema(schema, k4_file, lobe_file, tmp_path):
    import jsonschema

    square = tmp_path / "square.txt"
    square.write_text("4 4\n0 1\n0 3\n1 2\n2 3\n")

    runs = [
        ("rank", k4_file, "--oracle-check"),
        ("is-rigid", k4_file, "--oracle-check"),
        ("is-globally-rigid", k4_file),
        ("pair", lobe_file, "1", "3"),
        ("pair", lobe_file, "left", "right"),
        ("all-pairs", lobe_file, "--threads", "2"),
        ("three-block", lobe_file, "1", "3"),
        ("circuit", lobe_file, "1", "3"),
        ("audit-mgr", k4_file),
        ("oracle-rank", k4_file, "-d", "3", "--seed", "5"),
        ("oracle-rank", k4_file, "--float"),
        ("sample-equivalence", str(square), "0", "2", "--trials", "50"),
        ("convert", k4_file, "--to", "json"),
    ]
    for args in runs:
        report = json.loads(run_cli(*args).stdout)
        jsonschema.validate(report, schema)

    # errors are structured and validate too
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    proc = run_cli("rank", str(bad), expect_code=1)
    jsonschema.validate(json.loads(proc.stderr), schema)

    proc = run_cli("pair", k4_file, "0", "weird", expect_code=2)
    jsonschema.validate(json.loads(proc.stderr), schema)


@needs_cli
def test_cli_separating_pair_and_error_paths(schema, tmp_path):
    import jsonschema

    # two K4's sharing the non-adjacent pair {0,1}
    shared = tmp_path / "shared.txt"
    shared.write_text("6 10\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n2 3\n4 5\n")

    block = json.loads(run_cli("three-block", str(shared), "0", "1").stdout)
    jsonschema.validate(block, schema)
    assert block["result"]["separating_pair"] is True
    assert block["result"]["block"] is None

    pair = json.loads(run_cli("pair", str(shared), "0", "1").stdout)["result"]
    assert pair["verdict"] == "WeaklyGloballyLinked"
    assert pair["reason"] == "SeparatingPair"

    # unlinked pair: circuit extraction is a precondition violation
    path = tmp_path / "path.txt"
    path.write_text("4 3\n0 1\n1 2\n2 3\n")
    proc = run_cli("circuit", str(path), "0", "3", expect_code=2)
    err = json.loads(proc.stderr)
    jsonschema.validate(err, schema)
    assert err["error"]["kind"] == "precondition"

    # certificates inside all-pairs validate too
    report = json.loads(run_cli("all-pairs", str(shared), "--certificate", "on").stdout)
    jsonschema.validate(report, schema)
    assert any(p["certificate"] for p in report["result"]["pairs"])


@needs_cli
def test_cli_named_verdicts(k4_file, lobe_file, tmp_path):
    k4e = tmp_path / "k4e.txt"
    k4e.write_text("4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n")

    pair = json.loads(run_cli("pair", str(k4e), "2", "3").stdout)["result"]
    assert pair["verdict"] == "GloballyLoose"
    assert pair["reason"] == "KappaAtMostTwo"

    rigid = json.loads(run_cli("is-globally-rigid", k4_file).stdout)["result"]
    assert rigid == {"globally_rigid": True, "witness": None}

    w5 = tmp_path / "wheel5.txt"
    w5.write_text("6 10\n0 1\n0 4\n0 5\n1 2\n1 5\n2 3\n2 5\n3 4\n3 5\n4 5\n")
    assert json.loads(run_cli("rank", str(w5)).stdout)["result"]["rank"] == 9

    labeled = json.loads(run_cli("pair", lobe_file, "left", "right").stdout)["result"]
    assert labeled["verdict"] == "WeaklyGloballyLinked"
    assert labeled["reason"] == "CliqueOfThreeBlockGloballyRigid"


@needs_cli
def test_cli_determinism_and_all_pairs_agreement(lobe_file):
    first = json.loads(run_cli("all-pairs", lobe_file).stdout)
    second = json.loads(run_cli("all-pairs", lobe_file, "--threads", "4").stdout)
    assert first["result"] == second["result"]

    by_pair = {(p["u"], p["v"]): p for p in first["result"]["pairs"]}
    for (u, v), entry in by_pair.items():
        single = json.loads(run_cli("pair", lobe_file, str(u), str(v),
                                    "--certificate=off").stdout)["result"]
        assert single["verdict"] == entry["verdict"]
        assert single["reason"] == entry["reason"]


@needs_cli
def test_cli_convert_round_trip(k4_file, tmp_path):
    out = tmp_path / "k4.json"
    run_cli("convert", k4_file, "--to", "json", "-o", str(out))
    converted = json.loads(out.read_text())
    assert converted["n"] == 4 and len(converted["edges"]) == 6

    back = json.loads(run_cli("convert", str(out), "--to", "edge-list").stdout)
    assert back["result"]["content"].startswith("4 6\n")


@needs_cli
def test_cli_seed_env_override(k4_file):
    env = dict(os.environ, RIGIDLINK_SEED="99")
    proc = subprocess.run([CLI, "oracle-rank", k4_file], capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["seed"] == 99
