"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one pass/fail line (visible with ``pytest -s`` or on
failure).  Oracles come from tests/oracles.py and are exhaustive
enumerations, independent of the library's algorithms.
"""

import itertools
import json
import os
import random
import time
from contextlib import contextmanager
from pathlib import Path

from netdiff import (
    Partition,
    betweenness_all,
    closeness,
    count_mentions,
    degree,
    density,
    edge_set,
    eej,
    from_edge_list,
    load_corpus,
    louvain,
    metrics_all,
    modularity,
    ndc,
    nsc,
    remove_node,
    shortest_paths,
    symmetrize,
)
from netdiff.cli import run
from netdiff.io import load_network, partition_json

from dotlint import parse_graph
from oracles import (
    brute_betweenness,
    brute_closeness,
    random_connected_network,
    random_network,
    shortest_path_table,
)

FIXTURES = Path(__file__).parent / "fixtures"


@contextmanager
def criterion(number: int, title: str):
    try:
        yield
    except BaseException:
        print(f"[acceptance] criterion {number}: FAIL  {title}")
        raise
    print(f"[acceptance] criterion {number}: PASS  {title}")


def oracle_instances(count=200, seed=20250):
    rng = random.Random(seed)
    return [random_connected_network(rng) for _ in range(count)]


def gorum_style_fixture():
    """20 nodes, 64 edges, node d19 with exactly 3 edges."""
    labels = [f"d{i:02d}" for i in range(20)]
    pairs = [
        (i, j) for i, j in itertools.combinations(range(19), 2)
    ][:61]
    records = [
        (labels[i], labels[j], 1 + (i + j) % 3) for i, j in pairs
    ]
    records += [(labels[19], labels[i], 2) for i in range(3)]
    net = from_edge_list(records)
    assert net.n_nodes == 20 and len(edge_set(net)) == 64
    assert degree(net, "d19") == 3
    return net


def test_criterion_1_path_oracle_equivalence():
    with criterion(1, "dist/sigma match exhaustive enumeration on 200 graphs"):
        start = time.perf_counter()
        for net in oracle_instances():
            table = shortest_path_table(net)
            for s, source in enumerate(net.labels):
                sol = shortest_paths(net, source)
                for t, target in enumerate(net.labels):
                    expected_dist, expected_sigma, _ = table[(s, t)]
                    assert abs(sol.dist[target] - expected_dist) <= 1e-9
                    assert sol.sigma[target] == expected_sigma
        elapsed = time.perf_counter() - start
        assert elapsed < 10.0, f"ran in {elapsed:.1f}s, budget 10s"


def test_criterion_2_betweenness_closeness_oracle_equivalence():
    with criterion(2, "betweenness/closeness match direct formula evaluation"):
        start = time.perf_counter()
        for net in oracle_instances():
            expected_b = brute_betweenness(net)
            actual_b = betweenness_all(net)
            expected_c = brute_closeness(net)
            for label in net.labels:
                assert abs(actual_b[label] - expected_b[label]) <= 1e-9
                value, flag = closeness(net, label)
                assert abs(value - expected_c[label][0]) <= 1e-9
                assert flag == expected_c[label][1]
        elapsed = time.perf_counter() - start
        assert elapsed < 10.0, f"ran in {elapsed:.1f}s, budget 10s"


def test_criterion_3_four_node_fixture_density():
    with criterion(3, "4-node 4-edge sample network has density 0.667"):
        net = from_edge_list(
            [("A", "B", 1), ("B", "C", 1), ("C", "D", 1), ("D", "A", 1)]
        )
        assert abs(density(net) - 0.667) <= 0.0005


def test_criterion_4_ablation_arithmetic_fixture():
    with criterion(4, "20-node/64-edge ablation reproduces 0.337/0.357/0.953"):
        start = time.perf_counter()
        net = gorum_style_fixture()
        ablated = remove_node(net, "d19")
        assert ablated.n_nodes == 19 and len(edge_set(ablated)) == 61
        assert f"{density(net):.3f}" == "0.337"
        assert f"{density(ablated):.3f}" == "0.357"
        assert f"{eej(net, ablated):.3f}" == "0.953"
        assert time.perf_counter() - start < 1.0


def test_criterion_5_comparison_identities():
    with criterion(5, "comparison identities on 100 random networks"):
        start = time.perf_counter()
        rng = random.Random(20255)
        for _ in range(100):
            net = random_network(rng)
            assert abs(ndc(net, net) - 1.0) <= 1e-12
            assert abs(nsc(net, net) - 1.0) <= 1e-12
            assert abs(eej(net, net) - 1.0) <= 1e-12
            other = random_network(rng)
            disjoint = from_edge_list(
                [(f"z_{a}", f"z_{b}", w) for a, b, w in other.edges()],
                extra_nodes=[f"z_{l}" for l in other.labels],
            )
            assert ndc(net, disjoint) == 0.0
            assert nsc(net, disjoint) == 0.0
            assert eej(net, disjoint) == 0.0
            for metric in (ndc, nsc, eej):
                forward = metric(net, other)
                assert metric(other, net) == forward
                assert 0.0 <= forward <= 1.0
        elapsed = time.perf_counter() - start
        assert elapsed < 5.0, f"ran in {elapsed:.1f}s, budget 5s"


def test_criterion_6_modularity_and_louvain_fixtures():
    with criterion(6, "modularity fixtures and deterministic Louvain"):
        triangle = from_edge_list([("A", "B", 1), ("A", "C", 1), ("B", "C", 1)])
        singletons = Partition({"A": 0, "B": 1, "C": 2})
        assert abs(modularity(triangle, singletons) - (-1 / 3)) <= 1e-12

        two = from_edge_list(
            [("A", "B", 1), ("A", "C", 1), ("B", "C", 1),
             ("D", "E", 1), ("D", "F", 1), ("E", "F", 1)]
        )
        natural = Partition.from_communities([["A", "B", "C"], ["D", "E", "F"]])
        assert abs(modularity(two, natural) - 0.5) <= 1e-12

        bridged = from_edge_list(
            [("A", "B", 1), ("A", "C", 1), ("B", "C", 1),
             ("D", "E", 1), ("D", "F", 1), ("E", "F", 1), ("C", "D", 0.1)]
        )
        outputs = {partition_json(louvain(bridged)).encode() for _ in range(10)}
        assert len(outputs) == 1
        communities = louvain(bridged).communities()
        assert communities == [["A", "B", "C"], ["D", "E", "F"]]


def test_criterion_7_ingestion_oracle():
    with criterion(7, "hand-counted corpus mentions and pairwise symmetry"):
        corpus = load_corpus(FIXTURES / "corpus")
        counts = count_mentions(corpus)
        hand_counts = {
            ("Ashvara", "Kel Morvan"): 1,
            ("Ashvara", "Thorn-Vael"): 1,
            ("Ashvara", "Sera"): 2,
            ("Ashvara", "Ondir"): 1,
            ("Kel Morvan", "Ashvara"): 1,
            ("Kel Morvan", "Sera"): 1,
            ("Kel Morvan", "Thorn-Vael"): 1,
            ("Thorn-Vael", "Sera"): 2,
            ("Thorn-Vael", "Ashvara"): 1,
            ("Sera", "Ondir"): 2,
            ("Sera", "Thorn-Vael"): 1,
            ("Sera", "Kel Morvan"): 3,
            ("Ondir", "Ashvara"): 1,
        }
        assert counts == hand_counts
        net = symmetrize(counts, sorted(corpus))
        for a in net.labels:
            for b in net.labels:
                if a != b:
                    expected = counts.get((a, b), 0) + counts.get((b, a), 0)
                    assert net.weight(a, b) == expected


def test_criterion_8_cli_determinism(tmp_path, capsys):
    with criterion(8, "CLI reruns are byte-identical at any parallelism"):
        edges = tmp_path / "edges.csv"
        clusters = tmp_path / "clusters.json"
        snapshots = []
        for _ in range(2):
            chunks = []
            assert run([
                "ingest",
                "--profiles", str(FIXTURES / "corpus"),
                "--aliases", str(FIXTURES / "aliases.json"),
                "--nodes", str(FIXTURES / "nodes.csv"),
                "--out", str(edges),
            ]) == 0
            chunks.append(edges.read_bytes())
            chunks.append((tmp_path / "edges.counts.csv").read_bytes())
            assert run(["cluster", "--edges", str(edges),
                        "--out", str(clusters)]) == 0
            chunks.append(clusters.read_bytes())
            for argv in (
                ["metrics", "--edges", str(edges),
                 "--nodes", str(FIXTURES / "nodes.csv")],
                ["compare", "--a", str(edges), "--b", str(edges), "--json"],
                ["ablate", "--edges", str(edges), "--remove", "Sera"],
                ["render", "--edges", str(edges), "--clusters", str(clusters)],
            ):
                assert run(argv) == 0
                chunks.append(capsys.readouterr().out.encode())
            snapshots.append(b"\x00".join(chunks))
        assert snapshots[0] == snapshots[1]

        # library-level check of the parallel merge contract
        net = load_network(edges)
        assert metrics_all(net, workers=1) == metrics_all(
            net, workers=2 * (os.cpu_count() or 1)
        )


def test_criterion_9_end_to_end_pipeline(tmp_path, capsys):
    with criterion(9, "ingest->metrics->cluster->render under 2 s, valid DOT"):
        start = time.perf_counter()
        edges = tmp_path / "edges.csv"
        clusters = tmp_path / "clusters.json"
        assert run([
            "ingest",
            "--profiles", str(FIXTURES / "corpus"),
            "--aliases", str(FIXTURES / "aliases.json"),
            "--nodes", str(FIXTURES / "nodes.csv"),
            "--out", str(edges),
        ]) == 0
        assert run(["metrics", "--edges", str(edges),
                    "--nodes", str(FIXTURES / "nodes.csv"),
                    "--out", str(tmp_path / "metrics.csv")]) == 0
        assert run(["cluster", "--edges", str(edges),
                    "--nodes", str(FIXTURES / "nodes.csv"),
                    "--out", str(clusters)]) == 0
        assert run(["render", "--edges", str(edges),
                    "--nodes", str(FIXTURES / "nodes.csv"),
                    "--clusters", str(clusters)]) == 0
        dot = capsys.readouterr().out
        elapsed = time.perf_counter() - start
        assert elapsed < 2.0, f"pipeline took {elapsed:.2f}s, budget 2s"

        doc = parse_graph(dot)
        net = load_network(edges, FIXTURES / "nodes.csv")
        assert set(doc["nodes"]) == set(net.labels)
        assert len(doc["edges"]) == len(edge_set(net))
        rows = (tmp_path / "metrics.csv").read_text().strip().split("\n")
        assert len(rows) == 1 + net.n_nodes
        payload = json.loads(clusters.read_text())
        assert sorted(l for c in payload["communities"] for l in c) == sorted(
            net.labels
        )
