"""Benchmark harness: survey ground truth, ranking metrics, ablation runs.

A benchmark file carries one survey per line: its key phrases, year,
occurrence-counted reference list, and a frozen seed list (so runs never
depend on a live search engine). Evaluation replays the pipeline per
survey with the corpus filtered to papers the survey could have cited.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import time
from dataclasses import dataclass
from pathlib import Path

from .corpus import CitationGraph, VenueTable, filter_by_year, neighborhood
from .pathgen import rank_by_score, top_k_list
from .scoring import ScoreParams, build_weighted_graph, compute_node_scores, pagerank
from .seeding import TerminalMode, reallocate_terminals, resolve_seeds
from .steiner import steiner_tree

STATS_REFERENCE_YEAR = 2020

ENTRY_FIELDS = {"survey_id", "key_phrases", "year", "citation_count", "references", "seeds"}
REFERENCE_FIELDS = {"id", "occurrences"}


class EvalError(Exception):
    pass


@dataclass(frozen=True)
class SurveyEntry:
    survey_id: str
    key_phrases: tuple[str, ...]
    year: int
    citation_count: int
    reference_occurrences: dict[str, int]
    seeds: tuple[str, ...]


def load_benchmark(path: str | Path) -> list[SurveyEntry]:
    path = Path(path)
    entries: list[SurveyEntry] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            where = f"{path}:{lineno}"
            try:
                doc = json.loads(line)
            except json.JSONDecodeError as exc:
                raise EvalError(f"{where}: invalid JSON ({exc})") from exc
            if not isinstance(doc, dict) or set(doc) != ENTRY_FIELDS:
                raise EvalError(f"{where}: entry must have exactly fields {sorted(ENTRY_FIELDS)}")
            sid = doc["survey_id"]
            if not isinstance(sid, str) or not sid:
                raise EvalError(f"{where}: survey_id must be a non-empty string")
            if sid in seen:
                raise EvalError(f"{where}: duplicate survey_id {sid!r}")
            seen.add(sid)
            phrases = doc["key_phrases"]
            if (
                not isinstance(phrases, list)
                or not phrases
                or not all(isinstance(p, str) and p for p in phrases)
            ):
                raise EvalError(f"{where}: key_phrases must be a non-empty list of strings")
            if not isinstance(doc["year"], int) or isinstance(doc["year"], bool):
                raise EvalError(f"{where}: year must be an integer")
            count = doc["citation_count"]
            if not isinstance(count, int) or isinstance(count, bool) or count < 0:
                raise EvalError(f"{where}: citation_count must be a non-negative integer")
            refs = doc["references"]
            if not isinstance(refs, list):
                raise EvalError(f"{where}: references must be a list")
            occurrences: dict[str, int] = {}
            for ref in refs:
                if not isinstance(ref, dict) or set(ref) != REFERENCE_FIELDS:
                    raise EvalError(f"{where}: each reference needs exactly fields id, occurrences")
                rid, occ = ref["id"], ref["occurrences"]
                if not isinstance(rid, str) or not rid:
                    raise EvalError(f"{where}: reference id must be a non-empty string")
                if not isinstance(occ, int) or isinstance(occ, bool) or occ < 1:
                    raise EvalError(f"{where}: occurrences must be a positive integer ({rid})")
                if rid in occurrences:
                    raise EvalError(f"{where}: duplicate reference id {rid!r}")
                occurrences[rid] = occ
            seeds = doc["seeds"]
            if not isinstance(seeds, list) or not all(isinstance(s, str) and s for s in seeds):
                raise EvalError(f"{where}: seeds must be a list of id strings")
            entries.append(
                SurveyEntry(
                    survey_id=sid,
                    key_phrases=tuple(phrases),
                    year=doc["year"],
                    citation_count=count,
                    reference_occurrences=occurrences,
                    seeds=tuple(dict.fromkeys(seeds)),
                )
            )
    return entries


def survey_quality_score(citation_count: int, year: int) -> float:
    """Citations per year of existence, anchored at the 2020 snapshot."""
    if year > STATS_REFERENCE_YEAR:
        raise EvalError(f"year must be <= {STATS_REFERENCE_YEAR}, got {year}")
    return citation_count / (STATS_REFERENCE_YEAR - year + 1)


@dataclass(frozen=True)
class GroundTruth:
    L1: frozenset[str]
    L2: frozenset[str]
    L3: frozenset[str]

    def level(self, i: int) -> frozenset[str]:
        if i == 1:
            return self.L1
        if i == 2:
            return self.L2
        if i == 3:
            return self.L3
        raise EvalError(f"label level must be 1, 2, or 3, got {i}")


def ground_truth(entry: SurveyEntry) -> GroundTruth:
    occ = {pid: n for pid, n in entry.reference_occurrences.items() if pid != entry.survey_id}
    return GroundTruth(
        L1=frozenset(pid for pid, n in occ.items() if n >= 1),
        L2=frozenset(pid for pid, n in occ.items() if n >= 2),
        L3=frozenset(pid for pid, n in occ.items() if n >= 3),
    )


def precision_at_k(predicted, truth: set[str] | frozenset[str], k: int) -> float:
    if k < 1:
        raise EvalError(f"k must be >= 1, got {k}")
    hits = len(set(list(predicted)[:k]) & set(truth))
    return hits / k


def recall_at_k(predicted, truth: set[str] | frozenset[str], k: int) -> float:
    if k < 1:
        raise EvalError(f"k must be >= 1, got {k}")
    if not truth:
        return 0.0
    hits = len(set(list(predicted)[:k]) & set(truth))
    return hits / len(truth)


def f1_at_k(predicted, truth: set[str] | frozenset[str], k: int) -> float:
    p = precision_at_k(predicted, truth, k)
    r = recall_at_k(predicted, truth, k)
    if p + r == 0.0:
        return 0.0
    return 2 * p * r / (p + r)


class AblationMode(enum.Enum):
    NEWST = "NEWST"
    NEWST_W = "NEWST_W"
    NEWST_U = "NEWST_U"
    NEWST_I = "NEWST_I"
    NEWST_C = "NEWST_C"
    NEWST_N = "NEWST_N"
    NEWST_E = "NEWST_E"
    PAGERANK_BASELINE = "PAGERANK_BASELINE"


_TERMINAL_MODE_FOR = {
    AblationMode.NEWST: TerminalMode.REALLOCATED,
    AblationMode.NEWST_W: TerminalMode.INITIAL,
    AblationMode.NEWST_U: TerminalMode.UNION,
    AblationMode.NEWST_I: TerminalMode.INTERSECTION,
    AblationMode.NEWST_C: TerminalMode.REALLOCATED,
    AblationMode.NEWST_N: TerminalMode.REALLOCATED,
    AblationMode.NEWST_E: TerminalMode.REALLOCATED,
}


def parse_modes(names: list[str]) -> list[AblationMode]:
    modes = []
    for name in names:
        try:
            modes.append(AblationMode(name.strip()))
        except ValueError:
            valid = ", ".join(m.value for m in AblationMode)
            raise EvalError(f"unknown mode {name!r}; valid modes: {valid}") from None
    return modes


def pagerank_baseline(subgraph: CitationGraph, raw_scores: dict[str, float], k: int) -> list[str]:
    """All subgraph papers by raw PageRank, best first, ties by id."""
    if k < 1:
        raise EvalError(f"k must be >= 1, got {k}")
    missing = sorted(set(subgraph.papers) - set(raw_scores))
    if missing:
        raise EvalError(f"raw scores missing for: {missing[:5]}")
    ranked = sorted(subgraph.papers, key=lambda pid: (-raw_scores[pid], pid))
    return ranked[:k]


@dataclass(frozen=True)
class EvalOptions:
    ks: tuple[int, ...] = (20, 30, 40, 50)
    modes: tuple[AblationMode, ...] = (AblationMode.NEWST,)
    levels: tuple[int, ...] = (1, 2, 3)
    seed_counts: tuple[int, ...] = (30,)
    expansion_order: int = 2
    expansion_direction: str = "out"
    cooccurrence_threshold: int = 2
    missing_venue_score: float = 0.1

    def __post_init__(self):
        if not self.ks or any(k < 1 for k in self.ks):
            raise EvalError("ks must be positive")
        if not self.modes:
            raise EvalError("at least one mode required")
        if any(lv not in (1, 2, 3) for lv in self.levels) or not self.levels:
            raise EvalError("levels must be drawn from {1, 2, 3}")
        if not self.seed_counts or any(n < 1 for n in self.seed_counts):
            raise EvalError("seed_counts must be positive")


@dataclass
class EvalReport:
    report: dict
    csv_rows: list[dict]
    timings: dict

    def to_json(self) -> str:
        return json.dumps(self.report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_csv(self) -> str:
        fields = [
            "survey_id",
            "seed_count",
            "mode",
            "k",
            "level",
            "precision",
            "recall",
            "f1",
            "n_truth",
            "n_resolvable",
            "n_unresolvable",
        ]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in self.csv_rows:
            writer.writerow(row)
        return buf.getvalue()


def _predictions_for_mode(
    mode: AblationMode,
    subgraph: CitationGraph,
    weighted,
    scores,
    raw_pr: dict[str, float],
    seeds: list[str],
    threshold: int,
    ks: tuple[int, ...],
) -> tuple[dict[int, list[str]], dict]:
    """Top-k lists per requested k, plus bookkeeping about the run."""
    kmax = max(ks)
    info: dict = {}
    if mode is AblationMode.PAGERANK_BASELINE:
        ranked = pagerank_baseline(subgraph, raw_pr, kmax)
        info["kind"] = "pagerank"
        return {k: ranked[:k] for k in ks}, info

    selection = reallocate_terminals(
        subgraph, seeds, mode=_TERMINAL_MODE_FOR[mode], threshold=threshold
    )
    info["n_terminals"] = len(selection.terminals)
    info["fell_back"] = selection.fell_back

    if mode is AblationMode.NEWST_C:
        ranked = rank_by_score(selection.terminals, scores)
        info["kind"] = "reallocated-direct"
        return {k: ranked[:k] for k in ks}, info

    instance = weighted
    if mode is AblationMode.NEWST_N:
        instance = weighted.with_uniform_node_weights(1.0)
    elif mode is AblationMode.NEWST_E:
        instance = weighted.with_uniform_edge_costs(1.0)
    tree = steiner_tree(instance, selection.terminals)
    info["kind"] = "tree"
    info["tree_nodes"] = len(tree.nodes)
    info["tree_components"] = tree.n_components
    preds = {
        k: list(top_k_list(tree.nodes, scores, k, spares=subgraph.papers)) for k in ks
    }
    return preds, info


def run_eval(
    entries: list[SurveyEntry],
    graph: CitationGraph,
    venues: VenueTable,
    params: ScoreParams | None = None,
    options: EvalOptions | None = None,
) -> EvalReport:
    """Replay the pipeline for every survey and score against its references.

    Per survey: the corpus is cut to papers published no later than the
    survey, the survey itself is removed, and its frozen seed list (capped
    at each requested seed count) drives the normal query pipeline in each
    requested mode. Reported metrics compare top-K lists against the
    occurrence-threshold ground truth restricted to resolvable papers.
    """
    params = params or ScoreParams()
    options = options or EvalOptions()
    t_start = time.perf_counter()

    runs: list[dict] = []
    metric_rows: list[dict] = []
    csv_rows: list[dict] = []
    skipped: list[dict] = []
    timings: dict = {"surveys": [], "total_seconds": 0.0}

    for entry in entries:
        t_survey = time.perf_counter()
        working = filter_by_year(graph, entry.year).without({entry.survey_id})
        truth = ground_truth(entry)
        if len(working) == 0:
            skipped.append({"survey_id": entry.survey_id, "reason": "empty filtered corpus"})
            continue
        raw_pr = pagerank(working, params)
        survey_timing = {"survey_id": entry.survey_id, "seconds": 0.0, "runs": []}

        for seed_count in options.seed_counts:
            resolved = resolve_seeds(working, list(entry.seeds))
            seeds = list(resolved.ids[:seed_count])
            if not seeds:
                skipped.append(
                    {
                        "survey_id": entry.survey_id,
                        "seed_count": seed_count,
                        "reason": "no resolvable seeds",
                    }
                )
                continue
            sub = neighborhood(
                working,
                seeds,
                order=options.expansion_order,
                direction=options.expansion_direction,
            )
            for pid in sub.papers:
                if sub.record(pid).year > entry.year:
                    raise EvalError(
                        f"leakage: {pid} ({sub.record(pid).year}) past survey year {entry.year}"
                    )
            scores = compute_node_scores(
                working,
                venues,
                params,
                restrict_to=set(sub.papers),
                venue_default=options.missing_venue_score,
                raw_pagerank=raw_pr,
            )
            weighted = build_weighted_graph(sub, scores, params)

            mode_blocks: dict[str, dict] = {}
            run_timing = {"seed_count": seed_count, "modes": {}}
            for mode in options.modes:
                t_mode = time.perf_counter()
                preds, info = _predictions_for_mode(
                    mode,
                    sub,
                    weighted,
                    scores,
                    raw_pr,
                    seeds,
                    options.cooccurrence_threshold,
                    options.ks,
                )
                run_timing["modes"][mode.value] = round(time.perf_counter() - t_mode, 6)
                mode_blocks[mode.value] = {
                    "info": info,
                    "predictions": {str(k): preds[k] for k in options.ks},
                }
                for k in options.ks:
                    for level in options.levels:
                        full = truth.level(level)
                        resolvable = {pid for pid in full if pid in working}
                        row = {
                            "survey_id": entry.survey_id,
                            "seed_count": seed_count,
                            "mode": mode.value,
                            "k": k,
                            "level": level,
                            "precision": precision_at_k(preds[k], resolvable, k),
                            "recall": recall_at_k(preds[k], resolvable, k),
                            "f1": f1_at_k(preds[k], resolvable, k),
                            "n_truth": len(full),
                            "n_resolvable": len(resolvable),
                            "n_unresolvable": len(full) - len(resolvable),
                        }
                        metric_rows.append(row)
                        csv_rows.append(row)
            runs.append(
                {
                    "survey_id": entry.survey_id,
                    "year": entry.year,
                    "seed_count": seed_count,
                    "n_seeds_used": len(seeds),
                    "n_seeds_unresolved": len(resolved.dropped_unresolved),
                    "subgraph": {"nodes": len(sub), "edges": sub.n_edges},
                    "modes": mode_blocks,
                }
            )
            survey_timing["runs"].append(run_timing)
        survey_timing["seconds"] = round(time.perf_counter() - t_survey, 6)
        timings["surveys"].append(survey_timing)

    aggregates: list[dict] = []
    for seed_count in options.seed_counts:
        for mode in options.modes:
            for k in options.ks:
                for level in options.levels:
                    rows = [
                        r
                        for r in metric_rows
                        if r["seed_count"] == seed_count
                        and r["mode"] == mode.value
                        and r["k"] == k
                        and r["level"] == level
                    ]
                    if not rows:
                        continue
                    n = len(rows)
                    aggregates.append(
                        {
                            "seed_count": seed_count,
                            "mode": mode.value,
                            "k": k,
                            "level": level,
                            "precision": sum(r["precision"] for r in rows) / n,
                            "recall": sum(r["recall"] for r in rows) / n,
                            "f1": sum(r["f1"] for r in rows) / n,
                            "n_surveys": n,
                        }
                    )

    timings["total_seconds"] = round(time.perf_counter() - t_start, 6)
    report = {
        "options": {
            "ks": list(options.ks),
            "modes": [m.value for m in options.modes],
            "levels": list(options.levels),
            "seed_counts": list(options.seed_counts),
            "expansion_order": options.expansion_order,
            "expansion_direction": options.expansion_direction,
            "cooccurrence_threshold": options.cooccurrence_threshold,
        },
        "n_surveys": len(entries),
        "n_skipped": len(skipped),
        "skipped": skipped,
        "runs": runs,
        "metrics": metric_rows,
        "aggregates": aggregates,
    }
    return EvalReport(report=report, csv_rows=csv_rows, timings=timings)


def write_report(result: EvalReport, out_dir: str | Path) -> dict[str, Path]:
    """Write report.json / report.csv (deterministic) plus a timing sidecar.

    Wall-clock seconds vary run to run, so they live in their own file and
    the two canonical artifacts stay byte-identical across repeated runs.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "json": out / "report.json",
        "csv": out / "report.csv",
        "timings": out / "report.timings.json",
    }
    paths["json"].write_text(result.to_json(), encoding="utf-8")
    paths["csv"].write_text(result.to_csv(), encoding="utf-8")
    paths["timings"].write_text(
        json.dumps(result.timings, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return paths
