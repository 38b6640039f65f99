"""Query engine: ties corpus, scoring, seeding, solving, and ordering together.

An Engine loads its corpus once and treats it as immutable; every query
works on induced subgraphs. PageRank over the full corpus is computed
lazily and cached per cutoff year, since it is by far the most expensive
shared step.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .config import EngineConfig
from .corpus import CitationGraph, LoadReport, VenueTable, filter_by_year, load_corpus, neighborhood
from .pathgen import orient_edges, reading_order, roots_of, top_k_list
from .scoring import NodeScores, build_weighted_graph, compute_node_scores, pagerank
from .seeding import (
    HttpSeedProvider,
    OfflineSeedProvider,
    QuerySpec,
    SeedProvider,
    SeedingError,
    TerminalMode,
    provide_seeds,
    reallocate_terminals,
)
from .steiner import SteinerTree, steiner_tree


class EngineError(Exception):
    pass


class NoSeedsError(EngineError):
    """Raised when a query resolves to zero usable seed papers."""


@dataclass(frozen=True)
class QueryResult:
    query: str
    seed_ids: tuple[str, ...]
    dropped_unresolved: tuple[str, ...]
    dropped_filtered: tuple[str, ...]
    terminal_ids: tuple[str, ...]
    terminal_mode: str
    fell_back: bool
    tree: SteinerTree
    oriented_edges: tuple[tuple[str, str], ...]
    roots: tuple[str, ...]
    order: tuple[str, ...]
    top_papers: tuple[str, ...]
    scores: NodeScores
    relevance: dict[tuple[str, str], int]
    n_subgraph_nodes: int
    n_subgraph_edges: int
    seconds: float

    def to_dict(self, graph: CitationGraph) -> dict:
        nodes = []
        for pid in sorted(self.tree.nodes):
            rec = graph.record(pid)
            nodes.append(
                {
                    "id": pid,
                    "title": rec.title,
                    "authors": list(rec.authors),
                    "year": rec.year,
                    "score": self.scores.combined[pid],
                }
            )
        edges = [
            {"from": a, "to": b, "relevance": self.relevance[(a, b)]}
            for a, b in self.oriented_edges
        ]
        return {
            "query": self.query,
            "seeds": {
                "ids": list(self.seed_ids),
                "dropped_unresolved": list(self.dropped_unresolved),
                "dropped_filtered": list(self.dropped_filtered),
            },
            "terminals": {
                "ids": list(self.terminal_ids),
                "mode": self.terminal_mode,
                "fell_back": self.fell_back,
            },
            "nodes": nodes,
            "edges": edges,
            "roots": list(self.roots),
            "reading_order": list(self.order),
            "top_papers": list(self.top_papers),
            "timing": {
                "nodes": self.n_subgraph_nodes,
                "edges": self.n_subgraph_edges,
                "seconds": self.seconds,
            },
        }


def _make_provider(config: EngineConfig) -> SeedProvider:
    src = config.seed_source
    if src.provider == "offline":
        return OfflineSeedProvider(src.path)
    return HttpSeedProvider(
        url_template=src.url_template,
        response_path=src.response_path,
        id_field=src.id_field,
    )


class Engine:
    def __init__(
        self,
        graph: CitationGraph,
        venues: VenueTable,
        config: EngineConfig,
        provider: SeedProvider | None = None,
        load_report: LoadReport | None = None,
    ):
        self.graph = graph
        self.venues = venues
        self.config = config
        self.provider = provider if provider is not None else _make_provider(config)
        self.load_report = load_report
        self._pagerank_cache: dict[int | None, tuple[CitationGraph, dict[str, float]]] = {}

    @classmethod
    def from_config(cls, config: EngineConfig, provider: SeedProvider | None = None) -> "Engine":
        graph, venues, report = load_corpus(config.papers_path, config.venues_path)
        return cls(graph, venues, config, provider=provider, load_report=report)

    @classmethod
    def from_config_file(cls, path, provider: SeedProvider | None = None) -> "Engine":
        return cls.from_config(EngineConfig.from_file(path), provider=provider)

    def _working_graph(self, cutoff_year: int | None) -> tuple[CitationGraph, dict[str, float]]:
        cached = self._pagerank_cache.get(cutoff_year)
        if cached is not None:
            return cached
        graph = self.graph if cutoff_year is None else filter_by_year(self.graph, cutoff_year)
        raw = pagerank(graph, self.config.params)
        self._pagerank_cache[cutoff_year] = (graph, raw)
        return graph, raw

    def paper_info(self, pid: str) -> dict:
        rec = self.graph.record(pid)  # raises CorpusError for unknown ids
        return {
            "id": rec.id,
            "title": rec.title,
            "year": rec.year,
            "venue": rec.venue,
            "authors": list(rec.authors),
            "abstract": rec.abstract,
            "n_references": len(rec.citations_out),
            "n_cited_by": len(self.graph.cited_by(pid)),
        }

    def run_query(
        self,
        key_phrases: list[str],
        k_seeds: int | None = None,
        k_output: int | None = None,
        cutoff_year: int | None = None,
        terminal_mode: TerminalMode | None = None,
    ) -> QueryResult:
        """Full pipeline: seeds, expansion, weighting, tree, reading order."""
        t0 = time.perf_counter()
        q = self.config.query
        spec = QuerySpec(
            key_phrases=tuple(key_phrases),
            k_seeds=k_seeds if k_seeds is not None else q.k_seeds,
            k_output=k_output if k_output is not None else q.k_output,
            cutoff_year=cutoff_year if cutoff_year is not None else q.cutoff_year,
        )
        mode = terminal_mode if terminal_mode is not None else q.terminal_mode

        working, raw_pr = self._working_graph(spec.cutoff_year)
        try:
            resolved = provide_seeds(self.provider, self.graph, spec)
        except SeedingError as exc:
            raise NoSeedsError(str(exc)) from exc
        seeds = list(resolved.ids)
        query = spec.query

        sub = neighborhood(working, seeds, order=q.expansion_order, direction=q.expansion_direction)
        selection = reallocate_terminals(sub, seeds, mode=mode, threshold=q.cooccurrence_threshold)
        scores = compute_node_scores(
            working,
            self.venues,
            self.config.params,
            restrict_to=set(sub.papers),
            venue_default=q.missing_venue_score,
            raw_pagerank=raw_pr,
        )
        weighted = build_weighted_graph(sub, scores, self.config.params)
        tree = steiner_tree(weighted, selection.terminals)

        oriented = orient_edges(sub, tree.edges)
        order = reading_order(sub, tree.nodes, oriented)
        top = top_k_list(tree.nodes, scores, spec.k_output, spares=sub.papers)
        relevance = {
            (a, b): sub.mentions(a, b) + sub.mentions(b, a) for a, b in oriented
        }
        elapsed = time.perf_counter() - t0
        return QueryResult(
            query=query,
            seed_ids=tuple(seeds),
            dropped_unresolved=resolved.dropped_unresolved,
            dropped_filtered=resolved.dropped_filtered,
            terminal_ids=selection.terminals,
            terminal_mode=selection.mode.value,
            fell_back=selection.fell_back,
            tree=tree,
            oriented_edges=oriented,
            roots=roots_of(tree.nodes, oriented),
            order=order,
            top_papers=top,
            scores=scores,
            relevance=relevance,
            n_subgraph_nodes=len(sub),
            n_subgraph_edges=sub.n_edges,
            seconds=elapsed,
        )
