"""Immutable citation corpus: loading, validation, and neighborhood expansion."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

YEAR_MIN = 1900
YEAR_MAX = 2100

PAPER_FIELDS = {"id", "title", "year", "venue", "authors", "abstract", "citations"}
CITATION_FIELDS = {"id", "mentions"}


class CorpusError(Exception):
    """Raised when a corpus file is malformed or an id cannot be resolved."""


@dataclass(frozen=True)
class Citation:
    """A directed citation edge with its in-text mention count."""

    target: str
    mentions: int


@dataclass(frozen=True)
class PaperRecord:
    id: str
    title: str
    year: int
    venue: str | None
    authors: tuple[str, ...]
    abstract: str | None
    citations_out: tuple[Citation, ...]


@dataclass
class LoadReport:
    """What the loader kept, dropped, and patched up."""

    n_papers: int = 0
    n_edges: int = 0
    dangling_dropped: int = 0
    self_citations_dropped: int = 0
    undated_defaulted: int = 0

    def summary(self) -> str:
        return (
            f"{self.n_papers} papers, {self.n_edges} citation edges "
            f"({self.dangling_dropped} dangling dropped, "
            f"{self.self_citations_dropped} self-citations dropped, "
            f"{self.undated_defaulted} undated papers defaulted to {YEAR_MIN})"
        )


@dataclass(frozen=True)
class VenueTable:
    """Venue key to score in [0, 1]; consumed as already-averaged data."""

    scores: dict[str, float] = field(default_factory=dict)

    def score(self, venue: str | None, default: float = 0.1) -> float:
        if venue is None:
            return default
        return self.scores.get(venue, default)


class CitationGraph:
    """Papers plus directed citation edges; treat as immutable after construction.

    The reverse index is built once and is exactly the transpose of the
    forward citation lists. Safe to share across threads.
    """

    def __init__(self, papers: dict[str, PaperRecord]):
        self._papers = papers
        self._cited_by: dict[str, tuple[str, ...]] = {}
        rev: dict[str, list[str]] = {pid: [] for pid in papers}
        for pid, rec in papers.items():
            for cit in rec.citations_out:
                rev[cit.target].append(pid)
        self._cited_by = {pid: tuple(sorted(citers)) for pid, citers in rev.items()}
        self._n_edges = sum(len(rec.citations_out) for rec in papers.values())

    @property
    def papers(self) -> dict[str, PaperRecord]:
        return self._papers

    def __len__(self) -> int:
        return len(self._papers)

    def __contains__(self, pid: str) -> bool:
        return pid in self._papers

    def record(self, pid: str) -> PaperRecord:
        try:
            return self._papers[pid]
        except KeyError:
            raise CorpusError(f"unknown paper id: {pid}") from None

    def out_citations(self, pid: str) -> tuple[Citation, ...]:
        return self.record(pid).citations_out

    def cited_by(self, pid: str) -> tuple[str, ...]:
        if pid not in self._papers:
            raise CorpusError(f"unknown paper id: {pid}")
        return self._cited_by[pid]

    def mentions(self, src: str, dst: str) -> int:
        """Mention count of the src -> dst citation, 0 if src does not cite dst."""
        for cit in self.record(src).citations_out:
            if cit.target == dst:
                return cit.mentions
        return 0

    @property
    def n_edges(self) -> int:
        return self._n_edges

    def induced(self, keep: Iterable[str]) -> "CitationGraph":
        """Subgraph on `keep`; citation edges leaving the set are dropped."""
        keep_set = set(keep)
        sub: dict[str, PaperRecord] = {}
        for pid, rec in self._papers.items():
            if pid not in keep_set:
                continue
            cits = tuple(c for c in rec.citations_out if c.target in keep_set)
            sub[pid] = rec if len(cits) == len(rec.citations_out) else _with_citations(rec, cits)
        return CitationGraph(sub)

    def without(self, drop: Iterable[str]) -> "CitationGraph":
        drop_set = set(drop)
        return self.induced(pid for pid in self._papers if pid not in drop_set)


def _with_citations(rec: PaperRecord, cits: tuple[Citation, ...]) -> PaperRecord:
    return PaperRecord(
        id=rec.id,
        title=rec.title,
        year=rec.year,
        venue=rec.venue,
        authors=rec.authors,
        abstract=rec.abstract,
        citations_out=cits,
    )


def _parse_paper_line(obj: object, where: str, report: LoadReport) -> PaperRecord:
    if not isinstance(obj, dict):
        raise CorpusError(f"{where}: expected a JSON object")
    keys = set(obj)
    if keys != PAPER_FIELDS:
        missing = sorted(PAPER_FIELDS - keys)
        extra = sorted(keys - PAPER_FIELDS)
        detail = []
        if missing:
            detail.append(f"missing {missing}")
        if extra:
            detail.append(f"unknown {extra}")
        raise CorpusError(f"{where}: bad fields: {', '.join(detail)}")

    pid = obj["id"]
    if not isinstance(pid, str) or not pid:
        raise CorpusError(f"{where}: id must be a non-empty string")
    title = obj["title"]
    if not isinstance(title, str):
        raise CorpusError(f"{where}: title must be a string")

    year = obj["year"]
    if year is None:
        year = YEAR_MIN
        report.undated_defaulted += 1
    elif not isinstance(year, int) or isinstance(year, bool):
        raise CorpusError(f"{where}: year must be an integer or null")
    elif not YEAR_MIN <= year <= YEAR_MAX:
        raise CorpusError(f"{where}: year {year} outside [{YEAR_MIN}, {YEAR_MAX}]")

    venue = obj["venue"]
    if venue is not None and not isinstance(venue, str):
        raise CorpusError(f"{where}: venue must be a string or null")
    authors = obj["authors"]
    if not isinstance(authors, list) or any(not isinstance(a, str) for a in authors):
        raise CorpusError(f"{where}: authors must be a list of strings")
    abstract = obj["abstract"]
    if abstract is not None and not isinstance(abstract, str):
        raise CorpusError(f"{where}: abstract must be a string or null")

    raw_cits = obj["citations"]
    if not isinstance(raw_cits, list):
        raise CorpusError(f"{where}: citations must be a list")
    cits: list[Citation] = []
    seen_targets: set[str] = set()
    for c in raw_cits:
        if not isinstance(c, dict) or set(c) != CITATION_FIELDS:
            raise CorpusError(f"{where}: citation entries need exactly {sorted(CITATION_FIELDS)}")
        target = c["id"]
        mentions = c["mentions"]
        if not isinstance(target, str) or not target:
            raise CorpusError(f"{where}: citation id must be a non-empty string")
        if not isinstance(mentions, int) or isinstance(mentions, bool) or mentions < 1:
            raise CorpusError(f"{where}: mentions must be an integer >= 1")
        if target == pid:
            report.self_citations_dropped += 1
            continue
        if target in seen_targets:
            raise CorpusError(f"{where}: duplicate citation target {target}")
        seen_targets.add(target)
        cits.append(Citation(target=target, mentions=mentions))

    return PaperRecord(
        id=pid,
        title=title,
        year=year,
        venue=venue,
        authors=tuple(authors),
        abstract=abstract,
        citations_out=tuple(cits),
    )


def load_papers(papers_path: str | Path) -> tuple[CitationGraph, LoadReport]:
    """Load the JSONL papers file into a validated graph.

    Dangling citation targets are dropped and counted; duplicate paper ids
    are a hard error.
    """
    path = Path(papers_path)
    report = LoadReport()
    records: dict[str, PaperRecord] = {}
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise CorpusError(f"cannot read papers file {path}: {exc}") from exc

    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        where = f"{path}:{lineno}"
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{where}: invalid JSON: {exc.msg}") from exc
        rec = _parse_paper_line(obj, where, report)
        if rec.id in records:
            raise CorpusError(f"{where}: duplicate paper id {rec.id}")
        records[rec.id] = rec

    # Second pass: resolve citation targets now that all ids are known.
    resolved: dict[str, PaperRecord] = {}
    for pid, rec in records.items():
        kept = tuple(c for c in rec.citations_out if c.target in records)
        report.dangling_dropped += len(rec.citations_out) - len(kept)
        resolved[pid] = rec if len(kept) == len(rec.citations_out) else _with_citations(rec, kept)

    graph = CitationGraph(resolved)
    report.n_papers = len(graph)
    report.n_edges = graph.n_edges
    return graph, report


def load_venues(venues_path: str | Path) -> VenueTable:
    path = Path(venues_path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise CorpusError(f"cannot read venues file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CorpusError(f"{path}: invalid JSON: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise CorpusError(f"{path}: expected a JSON object mapping venue -> score")
    scores: dict[str, float] = {}
    for key, value in obj.items():
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise CorpusError(f"{path}: venue {key!r} has non-numeric score")
        if not 0.0 <= float(value) <= 1.0:
            raise CorpusError(f"{path}: venue {key!r} score {value} outside [0, 1]")
        scores[key] = float(value)
    return VenueTable(scores=scores)


def load_corpus(
    papers_path: str | Path, venues_path: str | Path
) -> tuple[CitationGraph, VenueTable, LoadReport]:
    graph, report = load_papers(papers_path)
    venues = load_venues(venues_path)
    return graph, venues, report


def neighborhood(
    graph: CitationGraph,
    seeds: Iterable[str],
    order: int = 2,
    direction: str = "out",
) -> CitationGraph:
    """Induced subgraph on the seeds plus everything within `order` hops.

    `out` follows reference lists (what the seeds cite); `both` also walks
    incoming citations.
    """
    if order not in (1, 2):
        raise ValueError(f"order must be 1 or 2, got {order}")
    if direction not in ("out", "both"):
        raise ValueError(f"direction must be 'out' or 'both', got {direction!r}")
    seed_list = list(seeds)
    for pid in seed_list:
        if pid not in graph:
            raise CorpusError(f"unknown seed id: {pid}")

    visited = set(seed_list)
    frontier = set(seed_list)
    for _ in range(order):
        nxt: set[str] = set()
        for pid in frontier:
            for cit in graph.out_citations(pid):
                if cit.target not in visited:
                    nxt.add(cit.target)
            if direction == "both":
                for citer in graph.cited_by(pid):
                    if citer not in visited:
                        nxt.add(citer)
        visited |= nxt
        frontier = nxt
    return graph.induced(visited)


def filter_by_year(graph_or_records, cutoff_year: int):
    """Keep only papers published in or before `cutoff_year` (same kind out)."""
    if isinstance(graph_or_records, CitationGraph):
        keep = [pid for pid, rec in graph_or_records.papers.items() if rec.year <= cutoff_year]
        return graph_or_records.induced(keep)
    return [rec for rec in graph_or_records if rec.year <= cutoff_year]
