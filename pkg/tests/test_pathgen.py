import random

import pytest

from readpath import (
    NodeScores,
    PathError,
    load_papers,
    orient_edges,
    reading_order,
    roots_of,
    top_k_list,
)
from readpath.pathgen import rank_by_score

from conftest import paper, write_corpus


def scores_for(combined: dict[str, float]) -> NodeScores:
    return NodeScores(
        pgscore=dict(combined), venue=dict.fromkeys(combined, 0.5), combined=dict(combined)
    )


@pytest.fixture()
def graph(tmp_path):
    papers = [
        paper("old", year=2000),
        paper("mid", year=2010, citations=[("old", 1)]),
        paper("new", year=2020, citations=[("mid", 2)]),
        paper("peer", year=2010),
        paper("mutualA", year=2014, citations=[("mutualB", 1)]),
        paper("mutualB", year=2012, citations=[("mutualA", 1)]),
    ]
    path, _ = write_corpus(tmp_path, papers)
    g, _ = load_papers(path)
    return g


class TestOrientEdges:
    def test_citation_points_from_cited_to_citing(self, graph):
        assert orient_edges(graph, [("mid", "old")]) == (("old", "mid"),)
        assert orient_edges(graph, [("old", "mid")]) == (("old", "mid"),)

    def test_no_citation_falls_back_to_year(self, graph):
        assert orient_edges(graph, [("new", "old")]) == (("old", "new"),)

    def test_equal_years_fall_back_to_id(self, graph):
        assert orient_edges(graph, [("peer", "mid")]) == (("mid", "peer"),)

    def test_mutual_citation_falls_back_to_year(self, graph):
        assert orient_edges(graph, [("mutualA", "mutualB")]) == (("mutualB", "mutualA"),)

    def test_output_sorted(self, graph):
        got = orient_edges(graph, [("new", "mid"), ("mid", "old")])
        assert got == (("mid", "new"), ("old", "mid"))


class TestRootsOf:
    def test_roots_have_no_incoming_edges(self):
        roots = roots_of(["a", "b", "c"], [("a", "b")])
        assert roots == ("a", "c")

    def test_single_node(self):
        assert roots_of(["x"], []) == ("x",)


class TestReadingOrder:
    def test_chain(self, graph):
        edges = (("old", "mid"), ("mid", "new"))
        assert reading_order(graph, ["new", "old", "mid"], edges) == ("old", "mid", "new")

    def test_ready_set_ordered_by_year_then_id(self, graph):
        # peer (2010) and old (2000) are both ready; old goes first.
        order = reading_order(graph, ["peer", "old", "mid"], (("old", "mid"),))
        assert order == ("old", "mid", "peer") or order == ("old", "peer", "mid")
        # mid becomes ready only after old; peer (2010) ties mid (2010) and
        # "mid" < "peer" lexicographically.
        assert order == ("old", "mid", "peer")

    def test_empty(self, graph):
        assert reading_order(graph, [], ()) == ()

    def test_cycle_detected(self, graph):
        with pytest.raises(PathError, match="cycle"):
            reading_order(graph, ["old", "mid"], (("old", "mid"), ("mid", "old")))

    def test_foreign_endpoint_rejected(self, graph):
        with pytest.raises(PathError, match="outside"):
            reading_order(graph, ["old"], (("old", "mid"),))

    def test_respects_all_edges_on_random_trees(self, tmp_path):
        rng = random.Random(77)
        for trial in range(10):
            n = rng.randint(2, 40)
            ids = [f"p{i:02d}" for i in range(n)]
            papers = [paper(pid, year=rng.randint(1990, 2020)) for pid in ids]
            # Random tree: each node links to an earlier one.
            tree_edges = [(ids[rng.randrange(i)], ids[i]) for i in range(1, n)]
            path, _ = write_corpus(tmp_path / f"t{trial}", papers)
            g, _ = load_papers(path)
            directed = orient_edges(g, tree_edges)
            order = reading_order(g, ids, directed)
            assert sorted(order) == sorted(ids)
            position = {pid: i for i, pid in enumerate(order)}
            for a, b in directed:
                assert position[a] < position[b]


class TestTopK:
    def test_tree_ranked_by_combined_score(self):
        scores = scores_for({"a": 0.9, "b": 0.3, "c": 0.6})
        assert top_k_list(["a", "b", "c"], scores, 2) == ("a", "c")

    def test_tie_breaks_by_id(self):
        scores = scores_for({"a": 0.5, "b": 0.5, "c": 0.5})
        assert top_k_list(["c", "b", "a"], scores, 3) == ("a", "b", "c")

    def test_pads_from_spares_only_when_short(self):
        scores = scores_for({"a": 0.9, "b": 0.3, "x": 0.99, "y": 0.1})
        got = top_k_list(["a", "b"], scores, 3, spares=["x", "y", "a"])
        assert got == ("a", "b", "x")

    def test_no_padding_when_tree_is_large_enough(self):
        scores = scores_for({"a": 0.2, "b": 0.1, "x": 0.99})
        assert top_k_list(["a", "b"], scores, 2, spares=["x"]) == ("a", "b")

    def test_truncates_to_k(self):
        scores = scores_for({"a": 0.9, "b": 0.8, "c": 0.7})
        assert top_k_list(["a", "b", "c"], scores, 1) == ("a",)

    def test_k_validation(self):
        with pytest.raises(PathError):
            top_k_list(["a"], scores_for({"a": 1.0}), 0)

    def test_prefix_property(self):
        rng = random.Random(13)
        ids = [f"p{i:02d}" for i in range(40)]
        combined = {pid: rng.random() for pid in ids}
        scores = scores_for(combined)
        tree = rng.sample(ids, 12)
        spares = ids
        previous = ()
        for k in (5, 10, 20, 30, 40):
            got = top_k_list(tree, scores, k, spares=spares)
            assert got[: len(previous)] == previous
            assert len(got) == min(k, len(ids))
            previous = got

    def test_rank_by_score_order(self):
        scores = scores_for({"a": 0.5, "b": 0.9, "c": 0.5})
        assert rank_by_score(["a", "b", "c"], scores) == ["b", "a", "c"]
