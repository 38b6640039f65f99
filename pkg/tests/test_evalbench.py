import json
import random

import pytest

from readpath import (
    AblationMode,
    EvalError,
    EvalOptions,
    GroundTruth,
    ScoreParams,
    SurveyEntry,
    f1_at_k,
    ground_truth,
    load_benchmark,
    load_corpus,
    pagerank,
    pagerank_baseline,
    precision_at_k,
    recall_at_k,
    run_eval,
    survey_quality_score,
    write_report,
)
from readpath.evalbench import parse_modes

from conftest import paper, write_corpus


def bench_entry(sid="sv", phrases=("q",), year=2015, count=100, refs=(), seeds=()):
    return {
        "survey_id": sid,
        "key_phrases": list(phrases),
        "year": year,
        "citation_count": count,
        "references": [{"id": r, "occurrences": o} for r, o in refs],
        "seeds": list(seeds),
    }


def write_benchmark(tmp_path, entries):
    tmp_path.mkdir(parents=True, exist_ok=True)
    path = tmp_path / "benchmark.jsonl"
    path.write_text("\n".join(json.dumps(e) for e in entries) + "\n", encoding="utf-8")
    return path


@pytest.fixture()
def micro(tmp_path):
    """Tiny self-contained world: 3 seeds, 3 shared references, 1 late paper."""
    papers = [
        paper("t1", year=2000, venue="Top"),
        paper("t2", year=2001),
        paper("m1", year=2005, citations=[("t1", 2), ("t2", 1)]),
        paper("s1", year=2010, citations=[("t1", 1), ("t2", 1), ("m1", 1), ("future", 1)]),
        paper("s2", year=2011, citations=[("t1", 2), ("m1", 1)]),
        paper("s3", year=2012, citations=[("t2", 1)]),
        paper("future", year=2016),
        paper("sv", year=2015, citations=[("t1", 3), ("t2", 2), ("m1", 1)]),
    ]
    ppath, vpath = write_corpus(tmp_path, papers, venues={"Top": 0.9})
    graph, venues, _ = load_corpus(ppath, vpath)
    entry_doc = bench_entry(
        sid="sv",
        year=2015,
        refs=[("t1", 3), ("t2", 2), ("m1", 1), ("ghost", 1)],
        seeds=["s1", "s2", "s3", "ghost-seed"],
    )
    entries = load_benchmark(write_benchmark(tmp_path, [entry_doc]))
    return graph, venues, entries


class TestLoadBenchmark:
    def test_fixture_roundtrip(self, fixture_benchmark):
        ids = [e.survey_id for e in fixture_benchmark]
        assert ids == ["gnn-survey", "spec-survey", "samp-survey"]
        for e in fixture_benchmark:
            assert e.key_phrases
            assert e.reference_occurrences
            assert e.seeds
            assert all(n >= 1 for n in e.reference_occurrences.values())

    def test_bad_json_names_line(self, tmp_path):
        path = tmp_path / "b.jsonl"
        path.write_text(json.dumps(bench_entry()) + "\n{oops\n")
        with pytest.raises(EvalError, match=r":2"):
            load_benchmark(path)

    def test_field_set_enforced(self, tmp_path):
        doc = bench_entry()
        doc["extra"] = 1
        with pytest.raises(EvalError, match="exactly fields"):
            load_benchmark(write_benchmark(tmp_path, [doc]))
        doc = bench_entry()
        del doc["year"]
        with pytest.raises(EvalError, match="exactly fields"):
            load_benchmark(write_benchmark(tmp_path, [doc]))

    def test_duplicate_survey_rejected(self, tmp_path):
        with pytest.raises(EvalError, match="duplicate survey_id"):
            load_benchmark(write_benchmark(tmp_path, [bench_entry(), bench_entry()]))

    def test_duplicate_reference_rejected(self, tmp_path):
        doc = bench_entry(refs=[("a", 1)])
        doc["references"].append({"id": "a", "occurrences": 2})
        with pytest.raises(EvalError, match="duplicate reference"):
            load_benchmark(write_benchmark(tmp_path, [doc]))

    def test_zero_occurrences_rejected(self, tmp_path):
        with pytest.raises(EvalError, match="occurrences"):
            load_benchmark(write_benchmark(tmp_path, [bench_entry(refs=[("a", 0)])]))

    def test_seed_duplicates_collapse(self, tmp_path):
        doc = bench_entry(seeds=["a", "b", "a"])
        entries = load_benchmark(write_benchmark(tmp_path, [doc]))
        assert entries[0].seeds == ("a", "b")


class TestQualityScore:
    def test_citations_per_year(self):
        assert survey_quality_score(100, 2011) == 10.0
        assert survey_quality_score(50, 2020) == 50.0
        assert survey_quality_score(0, 2000) == 0.0

    def test_future_year_rejected(self):
        with pytest.raises(EvalError):
            survey_quality_score(10, 2021)


class TestGroundTruth:
    def _entry(self, refs):
        return SurveyEntry(
            survey_id="sv",
            key_phrases=("q",),
            year=2015,
            citation_count=1,
            reference_occurrences=refs,
            seeds=(),
        )

    def test_occurrence_thresholds(self):
        truth = ground_truth(self._entry({"a": 1, "b": 2, "c": 3}))
        assert truth.L1 == {"a", "b", "c"}
        assert truth.L2 == {"b", "c"}
        assert truth.L3 == {"c"}

    def test_levels_nest(self):
        rng = random.Random(3)
        refs = {f"p{i}": rng.randint(1, 5) for i in range(50)}
        truth = ground_truth(self._entry(refs))
        assert truth.L3 <= truth.L2 <= truth.L1

    def test_survey_itself_excluded(self):
        truth = ground_truth(self._entry({"sv": 3, "a": 1}))
        assert truth.L1 == {"a"}

    def test_level_accessor(self):
        truth = GroundTruth(L1=frozenset("ab"), L2=frozenset("b"), L3=frozenset())
        assert truth.level(1) == {"a", "b"}
        assert truth.level(3) == frozenset()
        with pytest.raises(EvalError):
            truth.level(4)


class TestMetrics:
    def test_hand_case(self):
        truth = {"A", "B", "C", "D"}
        pred = ["A", "B", "X", "Y"]
        assert precision_at_k(pred, truth, 4) == 0.5
        assert recall_at_k(pred, truth, 4) == 0.5
        assert f1_at_k(pred, truth, 4) == 0.5

    def test_perfect_and_disjoint(self):
        truth = {"A", "B"}
        assert precision_at_k(["A", "B"], truth, 2) == 1.0
        assert recall_at_k(["A", "B"], truth, 2) == 1.0
        assert f1_at_k(["A", "B"], truth, 2) == 1.0
        assert precision_at_k(["X", "Y"], truth, 2) == 0.0
        assert f1_at_k(["X", "Y"], truth, 2) == 0.0

    def test_empty_truth_scores_zero(self):
        assert recall_at_k(["A"], set(), 1) == 0.0
        assert f1_at_k(["A"], set(), 1) == 0.0

    def test_k_beyond_prediction_length(self):
        # Precision keeps k in the denominator even when fewer predictions exist.
        assert precision_at_k(["A"], {"A"}, 4) == 0.25

    def test_bounds_on_random_inputs(self):
        rng = random.Random(9)
        universe = [f"p{i}" for i in range(30)]
        for _ in range(50):
            truth = set(rng.sample(universe, rng.randint(0, 15)))
            pred = rng.sample(universe, rng.randint(1, 20))
            k = rng.randint(1, 25)
            p = precision_at_k(pred, truth, k)
            r = recall_at_k(pred, truth, k)
            f = f1_at_k(pred, truth, k)
            assert 0.0 <= p <= 1.0 and 0.0 <= r <= 1.0 and 0.0 <= f <= 1.0
            if f > 0.0:
                assert f <= 2 * min(p, r) / max(p + r, 1e-12) * max(p, r) + 1e-12

    def test_k_validation(self):
        with pytest.raises(EvalError):
            precision_at_k([], set(), 0)


class TestModeParsing:
    def test_known_modes(self):
        modes = parse_modes(["NEWST", " NEWST_W "])
        assert modes == [AblationMode.NEWST, AblationMode.NEWST_W]

    def test_unknown_mode_lists_valid(self):
        with pytest.raises(EvalError, match="PAGERANK_BASELINE"):
            parse_modes(["NEWST_X"])


class TestPagerankBaseline:
    def test_ranks_by_raw_score_then_id(self, micro):
        graph, venues, _ = micro
        raw = {pid: 0.5 for pid in graph.papers}
        ranked = pagerank_baseline(graph, raw, 3)
        assert ranked == sorted(graph.papers)[:3]

    def test_highest_first(self, micro):
        graph, venues, _ = micro
        raw = pagerank(graph, ScoreParams())
        ranked = pagerank_baseline(graph, raw, len(graph))
        vals = [raw[pid] for pid in ranked]
        assert vals == sorted(vals, reverse=True)

    def test_coverage_required(self, micro):
        graph, _, _ = micro
        with pytest.raises(EvalError, match="missing"):
            pagerank_baseline(graph, {}, 2)

    def test_k_validation(self, micro):
        graph, _, _ = micro
        with pytest.raises(EvalError):
            pagerank_baseline(graph, {}, 0)


class TestEvalOptions:
    def test_defaults(self):
        opts = EvalOptions()
        assert opts.ks == (20, 30, 40, 50)
        assert opts.modes == (AblationMode.NEWST,)
        assert opts.levels == (1, 2, 3)

    def test_validation(self):
        with pytest.raises(EvalError):
            EvalOptions(ks=())
        with pytest.raises(EvalError):
            EvalOptions(ks=(0,))
        with pytest.raises(EvalError):
            EvalOptions(modes=())
        with pytest.raises(EvalError):
            EvalOptions(levels=(4,))
        with pytest.raises(EvalError):
            EvalOptions(seed_counts=(0,))


class TestRunEval:
    OPTS = dict(ks=(3, 6), levels=(1, 2, 3))

    def test_report_shape_and_truth_accounting(self, micro):
        graph, venues, entries = micro
        opts = EvalOptions(modes=(AblationMode.NEWST,), **self.OPTS)
        result = run_eval(entries, graph, venues, ScoreParams(), opts)
        report = result.report
        assert report["n_surveys"] == 1
        assert report["n_skipped"] == 0
        assert len(report["runs"]) == 1
        run = report["runs"][0]
        assert run["survey_id"] == "sv"
        assert run["n_seeds_used"] == 3
        assert run["n_seeds_unresolved"] == 1
        # future (2016) must be filtered out before expansion.
        assert run["subgraph"]["nodes"] == 6
        rows = [r for r in report["metrics"] if r["level"] == 1]
        assert all(r["n_truth"] == 4 for r in rows)
        assert all(r["n_resolvable"] == 3 for r in rows)
        assert all(r["n_unresolvable"] == 1 for r in rows)

    def test_row_counts(self, micro):
        graph, venues, entries = micro
        modes = (AblationMode.NEWST, AblationMode.NEWST_C, AblationMode.PAGERANK_BASELINE)
        opts = EvalOptions(modes=modes, **self.OPTS)
        result = run_eval(entries, graph, venues, ScoreParams(), opts)
        assert len(result.csv_rows) == 1 * len(modes) * 2 * 3
        assert len(result.report["aggregates"]) == len(modes) * 2 * 3

    def test_full_subgraph_prediction_recalls_everything(self, micro):
        graph, venues, entries = micro
        opts = EvalOptions(modes=(AblationMode.NEWST,), **self.OPTS)
        result = run_eval(entries, graph, venues, ScoreParams(), opts)
        # k=6 covers the whole 6-node subgraph, so every resolvable truth
        # paper appears in the prediction list.
        for level in (1, 2, 3):
            row = next(
                r for r in result.report["metrics"] if r["k"] == 6 and r["level"] == level
            )
            assert row["recall"] == 1.0

    def test_newst_c_truncates_without_padding(self, micro):
        graph, venues, entries = micro
        opts = EvalOptions(modes=(AblationMode.NEWST_C,), **self.OPTS)
        result = run_eval(entries, graph, venues, ScoreParams(), opts)
        block = result.report["runs"][0]["modes"]["NEWST_C"]
        assert block["info"]["kind"] == "reallocated-direct"
        # Terminals reallocate to the three shared references; k=6 pads
        # nothing beyond them.
        assert block["info"]["n_terminals"] == 3
        assert set(block["predictions"]["6"]) == {"m1", "t1", "t2"}
        assert len(block["predictions"]["6"]) == 3

    def test_predictions_nest_across_k(self, micro):
        graph, venues, entries = micro
        modes = (AblationMode.NEWST, AblationMode.PAGERANK_BASELINE)
        opts = EvalOptions(modes=modes, **self.OPTS)
        result = run_eval(entries, graph, venues, ScoreParams(), opts)
        for block in result.report["runs"][0]["modes"].values():
            small, big = block["predictions"]["3"], block["predictions"]["6"]
            assert big[: len(small)] == small

    def test_unresolvable_seed_survey_skipped(self, micro, tmp_path):
        graph, venues, entries = micro
        ghost = load_benchmark(
            write_benchmark(
                tmp_path / "g", [bench_entry(sid="ghostly", seeds=["nope1", "nope2"])]
            )
        )
        opts = EvalOptions(modes=(AblationMode.NEWST,), **self.OPTS)
        result = run_eval(entries + ghost, graph, venues, ScoreParams(), opts)
        assert result.report["n_skipped"] == 1
        assert result.report["skipped"][0]["survey_id"] == "ghostly"
        assert result.report["skipped"][0]["reason"] == "no resolvable seeds"

    def test_empty_filtered_corpus_skipped(self, micro, tmp_path):
        graph, venues, _ = micro
        early = load_benchmark(
            write_benchmark(tmp_path / "e", [bench_entry(sid="early", year=1800)])
        )
        opts = EvalOptions(modes=(AblationMode.NEWST,), **self.OPTS)
        result = run_eval(early, graph, venues, ScoreParams(), opts)
        assert result.report["n_skipped"] == 1
        assert result.report["skipped"][0]["reason"] == "empty filtered corpus"

    def test_seed_count_truncation(self, micro):
        graph, venues, entries = micro
        opts = EvalOptions(modes=(AblationMode.NEWST,), seed_counts=(2,), **self.OPTS)
        result = run_eval(entries, graph, venues, ScoreParams(), opts)
        assert result.report["runs"][0]["n_seeds_used"] == 2

    def test_deterministic_artifacts(self, micro):
        graph, venues, entries = micro
        modes = (AblationMode.NEWST, AblationMode.NEWST_U, AblationMode.PAGERANK_BASELINE)
        opts = EvalOptions(modes=modes, **self.OPTS)
        first = run_eval(entries, graph, venues, ScoreParams(), opts)
        second = run_eval(entries, graph, venues, ScoreParams(), opts)
        assert first.to_json() == second.to_json()
        assert first.to_csv() == second.to_csv()

    def test_all_modes_complete_on_fixture(self, fixture_corpus, fixture_benchmark):
        graph, venues, _ = fixture_corpus
        opts = EvalOptions(ks=(20, 30), modes=tuple(AblationMode), levels=(1,))
        result = run_eval(fixture_benchmark, graph, venues, ScoreParams(), opts)
        assert result.report["n_skipped"] == 0
        got_modes = set(result.report["runs"][0]["modes"])
        assert got_modes == {m.value for m in AblationMode}
        assert len(result.csv_rows) == 3 * len(AblationMode) * 2 * 1


class TestWriteReport:
    def test_writes_three_files(self, micro, tmp_path):
        graph, venues, entries = micro
        opts = EvalOptions(modes=(AblationMode.NEWST,), ks=(3,), levels=(1,))
        result = run_eval(entries, graph, venues, ScoreParams(), opts)
        paths = write_report(result, tmp_path / "out")
        report = json.loads(paths["json"].read_text())
        assert report["n_surveys"] == 1
        lines = paths["csv"].read_text().splitlines()
        assert lines[0].startswith("survey_id,seed_count,mode,k,level")
        assert len(lines) == 1 + len(result.csv_rows)
        timings = json.loads(paths["timings"].read_text())
        assert "total_seconds" in timings
        # Canonical artifacts carry no wall-clock values.
        assert "seconds" not in paths["json"].read_text()
