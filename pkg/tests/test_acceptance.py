"""Shipping gates for the whole package, one test per criterion.

Each test is self-contained: it carries its own oracle or leans only on
the checked-in fixture corpus, so a pass here certifies the installed
package rather than the rest of the suite. Run with

    pytest tests/test_acceptance.py -v

for one pass/fail line per gate.
"""

import math
import random
import time

import numpy as np
import pytest

from readpath import (
    AblationMode,
    Engine,
    EvalOptions,
    ScoreParams,
    WeightedGraph,
    edge_cost,
    exact_steiner_tree,
    f1_at_k,
    ground_truth,
    node_weight,
    pagerank,
    precision_at_k,
    recall_at_k,
    run_eval,
    steiner_tree,
)
from readpath.cli import main as cli_main
from readpath.steiner import shortest_paths

from conftest import paper, write_corpus


def random_weighted_graph(rng, n, extra_p, continuous):
    """Connected graph with random positive node and edge weights.

    Half the sweep uses weights on a 0.25 grid so float sums stay exact;
    the other half uses continuous draws.
    """

    def weight():
        return rng.uniform(0.1, 4.0) if continuous else rng.randint(1, 16) * 0.25

    g = WeightedGraph()
    names = [f"n{i:02d}" for i in range(n)]
    for name in names:
        g.add_node(name, weight())
    for i in range(1, n):
        j = rng.randrange(i)
        g.add_edge(names[j], names[i], weight())
    for i in range(n):
        for j in range(i + 1, n):
            if not g.has_edge(names[i], names[j]) and rng.random() < extra_p:
                g.add_edge(names[i], names[j], weight())
    return g, names


def all_pairs_node_cost(graph):
    """Floyd-Warshall analog of the solver's cost-on-entry convention."""
    nodes = graph.nodes()
    d = {u: {v: (0.0 if u == v else math.inf) for v in nodes} for u in nodes}
    for u, v, c in graph.edges():
        d[u][v] = min(d[u][v], c + graph.node_weight(v))
        d[v][u] = min(d[v][u], c + graph.node_weight(u))
    for k in nodes:
        for i in nodes:
            dik = d[i][k]
            if dik == math.inf:
                continue
            for j in nodes:
                alt = dik + d[k][j]
                if alt < d[i][j]:
                    d[i][j] = alt
    return d


def dense_power_iteration(ids, edges, damping=0.85):
    ids = sorted(ids)
    index = {pid: i for i, pid in enumerate(ids)}
    n = len(ids)
    m = np.zeros((n, n))
    out = {pid: set() for pid in ids}
    for src, dst in edges:
        out[src].add(dst)
    for src, targets in out.items():
        for dst in targets:
            m[index[dst], index[src]] = 1.0 / len(targets)
    x = np.full(n, 1.0 / n)
    for _ in range(1000):
        dangling = sum(x[index[pid]] for pid in ids if not out[pid])
        nxt = damping * (m @ x + dangling / n) + (1.0 - damping) / n
        done = np.abs(nxt - x).sum() < 1e-12
        x = nxt
        if done:
            break
    return {pid: x[index[pid]] for pid in ids}


def test_01_tree_cost_stays_within_the_guarantee():
    """Heuristic cost <= 2(1 - 1/l) x optimal over 250 random graphs."""
    rng = random.Random(20240817)
    t0 = time.perf_counter()
    trials = 250
    for trial in range(trials):
        continuous = trial % 2 == 0
        g, names = random_weighted_graph(
            rng, rng.randint(4, 12), rng.uniform(0.05, 0.5), continuous
        )
        terminals = rng.sample(names, rng.randint(2, min(5, len(names))))
        exact = exact_steiner_tree(g, terminals)
        heur = steiner_tree(g, terminals)
        assert heur.total_cost >= exact.total_cost - 1e-9
        bound = 2.0 * (1.0 - 1.0 / exact.leaf_count()) * exact.total_cost
        assert heur.total_cost <= bound + 1e-9, (
            f"trial {trial}: cost {heur.total_cost} above bound {bound} "
            f"(optimal {exact.total_cost}, {exact.leaf_count()} leaves)"
        )
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    print(f"tree bound: PASS ({trials} graphs, 0 violations, {elapsed:.1f}s)")


def test_02_distances_match_independent_dynamic_program():
    """Node-cost-aware Dijkstra equals Floyd-Warshall exactly, 50 graphs.

    Weights live on a 0.25 grid, so every path cost is an exact float and
    equality can be demanded without a tolerance.
    """
    rng = random.Random(4242)
    trials = 50
    for trial in range(trials):
        n = rng.randint(2, 50)
        g, names = random_weighted_graph(rng, n, rng.uniform(0.02, 0.3), False)
        reference = all_pairs_node_cost(g)
        for source in names:
            row = shortest_paths(g, source)
            for target in names:
                assert row.dist[target] == reference[source][target], (
                    f"trial {trial}: d({source}->{target})"
                )
    print(f"distances: PASS ({trials} graphs, exact equality)")


def test_03_cost_functions_reproduce_hand_values():
    params = ScoreParams()
    assert edge_cost(params, 2) == pytest.approx(0.75, abs=1e-12)
    assert edge_cost(params, 1) == pytest.approx(3.0, abs=1e-12)
    assert edge_cost(params, 3) == pytest.approx(3.0 / 9.0, abs=1e-12)
    assert node_weight(params, 1.0, 1.0) == pytest.approx(5.0, abs=1e-12)
    assert node_weight(params, 1.0, 0.0) == pytest.approx(5.0 / 0.7, abs=1e-12)
    assert node_weight(params, 0.0, 1.0) == pytest.approx(5.0 / 0.3, abs=1e-12)
    assert node_weight(params, 0.5, 0.5) == pytest.approx(10.0, abs=1e-12)
    print("cost functions: PASS (hand substitutions to 1e-12)")


def test_04_pagerank_behaves(tmp_path, fixture_corpus):
    graph, _, _ = fixture_corpus
    scores = pagerank(graph)
    assert sum(scores.values()) == pytest.approx(1.0, abs=1e-6)

    ring = [paper(f"r{i}", year=2000 + i, citations=[(f"r{(i + 1) % 4}", 1)]) for i in range(4)]
    papers_path, venues_path = write_corpus(tmp_path / "ring", ring)
    from readpath import load_corpus

    ring_graph, _, _ = load_corpus(papers_path, venues_path)
    ring_scores = pagerank(ring_graph)
    assert max(ring_scores.values()) == pytest.approx(min(ring_scores.values()), abs=1e-12)

    five = [
        paper("a", citations=[("b", 1), ("c", 2)]),
        paper("b", citations=[("c", 1)]),
        paper("c", citations=[("d", 1)]),
        paper("d"),
        paper("e", citations=[("a", 1), ("d", 3)]),
    ]
    papers_path, venues_path = write_corpus(tmp_path / "five", five)
    five_graph, _, _ = load_corpus(papers_path, venues_path)
    got = pagerank(five_graph, ScoreParams(pr_tolerance=1e-12, pr_max_iters=1000))
    edges = [(s, c.target) for s in five_graph.papers for c in five_graph.record(s).citations_out]
    want = dense_power_iteration(list(five_graph.papers), edges)
    for pid in want:
        assert got[pid] == pytest.approx(want[pid], abs=1e-8)
    print("pagerank: PASS (sum, symmetry, dense oracle)")


def test_05_metrics_match_hand_computation():
    truth = {"A", "B", "C", "D"}
    predicted = ["A", "B", "X", "Y"]
    assert precision_at_k(predicted, truth, 4) == 0.5
    assert recall_at_k(predicted, truth, 4) == 0.5
    assert f1_at_k(predicted, truth, 4) == 0.5
    assert precision_at_k(predicted, truth, 2) == 1.0
    assert recall_at_k([], truth, 4) == 0.0
    print("metrics: PASS (hand fixtures exact)")


def test_06_expansion_beats_the_raw_seed_list(fixture_corpus, fixture_benchmark):
    """Planted prerequisites are only reachable through graph expansion."""
    graph, venues, _ = fixture_corpus
    options = EvalOptions(
        ks=(30,), modes=(AblationMode.NEWST,), levels=(1,), seed_counts=(30,)
    )
    result = run_eval(fixture_benchmark, graph, venues, options=options)
    assert not result.report["skipped"]
    rows = result.report["aggregates"]
    assert len(rows) == 1
    tree_recall = rows[0]["recall"]

    per_survey = []
    for entry in fixture_benchmark:
        truth = {p for p in ground_truth(entry).L1 if p in graph}
        per_survey.append(recall_at_k(list(entry.seeds)[:30], truth, 30))
    seeds_only = sum(per_survey) / len(per_survey)
    assert tree_recall > seeds_only
    print(f"expansion: PASS (recall {tree_recall:.4f} > seeds-only {seeds_only:.4f})")


def test_07_every_ablation_completes(fixture_corpus, fixture_benchmark):
    graph, venues, _ = fixture_corpus
    options = EvalOptions(
        ks=(30,), modes=tuple(AblationMode), levels=(1,), seed_counts=(30,)
    )
    result = run_eval(fixture_benchmark, graph, venues, options=options)
    assert not result.report["skipped"]
    assert len(result.report["runs"]) == len(fixture_benchmark)
    for run in result.report["runs"]:
        assert set(run["modes"]) == {m.value for m in AblationMode}
    recalls = {row["mode"]: row["recall"] for row in result.report["aggregates"]}
    assert set(recalls) == {m.value for m in AblationMode}
    assert recalls["NEWST_U"] >= recalls["NEWST"]
    print(
        f"ablations: PASS (8 modes, union {recalls['NEWST_U']:.4f} "
        f">= reallocated {recalls['NEWST']:.4f})"
    )


def test_08_query_latency_on_the_fixture(fixture_dir, fixture_benchmark):
    engine = Engine.from_config_file(fixture_dir / "config.json")
    result = engine.run_query(list(fixture_benchmark[0].key_phrases))
    assert 1650 <= result.n_subgraph_nodes <= 1850
    assert 2700 <= result.n_subgraph_edges <= 3100
    assert result.seconds < 10.0
    print(
        f"latency: PASS ({result.n_subgraph_nodes} nodes / "
        f"{result.n_subgraph_edges} edges in {result.seconds:.2f}s)"
    )


def test_09_reports_are_byte_identical_across_runs(tmp_path, fixture_dir):
    argv = [
        "eval",
        "--config",
        str(fixture_dir / "config.json"),
        "--benchmark",
        str(fixture_dir / "benchmark.jsonl"),
        "--modes",
        "NEWST,NEWST_U",
        "--K",
        "20,30",
        "--levels",
        "1,2",
        "--seed-counts",
        "30",
    ]
    assert cli_main(argv + ["--out", str(tmp_path / "a")]) == 0
    assert cli_main(argv + ["--out", str(tmp_path / "b")]) == 0
    for name in ("report.json", "report.csv"):
        first = (tmp_path / "a" / name).read_bytes()
        second = (tmp_path / "b" / name).read_bytes()
        assert first == second, f"{name} differs between runs"
    print("determinism: PASS (report.json and report.csv byte-identical)")
