"""PageRank, score normalization, and the node/edge cost functions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .corpus import CitationGraph, VenueTable


class ScoringError(Exception):
    pass


@dataclass(frozen=True)
class ScoreParams:
    """Constants for the cost functions and the PageRank iteration.

    alpha/beta shape the edge cost alpha / mentions**beta; gamma, a, b shape
    the node weight gamma / (a * pgscore + b * venue). Defaults follow the
    standard configuration {3, 2, 5, 0.7, 0.3}.
    """

    alpha: float = 3.0
    beta: float = 2.0
    gamma: float = 5.0
    a: float = 0.7
    b: float = 0.3
    damping: float = 0.85
    pr_tolerance: float = 1e-8
    pr_max_iters: int = 100
    epsilon_floor: float = 1e-4

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "a", "b", "pr_tolerance", "epsilon_floor"):
            if getattr(self, name) <= 0:
                raise ScoringError(f"{name} must be positive")
        if not 0.0 < self.damping < 1.0:
            raise ScoringError("damping must be in (0, 1)")
        if self.pr_max_iters < 1:
            raise ScoringError("pr_max_iters must be >= 1")


@dataclass(frozen=True)
class NodeScores:
    """Per-paper importance: normalized PageRank, venue score, and their mix."""

    pgscore: dict[str, float] = field(default_factory=dict)
    venue: dict[str, float] = field(default_factory=dict)
    combined: dict[str, float] = field(default_factory=dict)

    def covers(self, ids) -> bool:
        return all(pid in self.combined for pid in ids)


def pagerank(graph: CitationGraph, params: ScoreParams | None = None) -> dict[str, float]:
    """Raw PageRank over the citation edges; rank flows from citing to cited.

    Dangling papers redistribute their mass uniformly. The returned scores
    sum to 1.
    """
    params = params or ScoreParams()
    if len(graph) == 0:
        raise ScoringError("pagerank on an empty graph")
    ids = sorted(graph.papers)
    index = {pid: i for i, pid in enumerate(ids)}
    n = len(ids)

    rows: list[int] = []
    cols: list[int] = []
    vals: list[float] = []
    dangling = np.zeros(n, dtype=bool)
    for pid in ids:
        i = index[pid]
        cits = graph.out_citations(pid)
        if not cits:
            dangling[i] = True
            continue
        share = 1.0 / len(cits)
        for cit in cits:
            rows.append(index[cit.target])
            cols.append(i)
            vals.append(share)
    transition = sparse.csr_matrix((vals, (rows, cols)), shape=(n, n))

    d = params.damping
    x = np.full(n, 1.0 / n)
    for _ in range(params.pr_max_iters):
        dangling_mass = x[dangling].sum()
        x_new = d * (transition @ x + dangling_mass / n) + (1.0 - d) / n
        err = np.abs(x_new - x).sum()
        x = x_new
        if err < params.pr_tolerance:
            break
    return {pid: float(x[index[pid]]) for pid in ids}


def normalize_pgscore(raw: dict[str, float], epsilon_floor: float) -> dict[str, float]:
    """Rescale raw scores so the maximum is 1, clamping below at the floor."""
    if not raw:
        raise ScoringError("cannot normalize an empty score map")
    top = max(raw.values())
    if top <= 0.0:
        raise ScoringError("cannot normalize all-zero scores")
    if any(v < 0.0 for v in raw.values()):
        raise ScoringError("raw scores must be non-negative")
    return {pid: max(v / top, epsilon_floor) for pid, v in raw.items()}


def node_weight(params: ScoreParams, pgscore_norm: float, venue: float) -> float:
    """gamma / (a * pgscore + b * venue); cheaper for more important papers."""
    denom = params.a * pgscore_norm + params.b * venue
    if denom <= 0.0:
        raise ScoringError("node weight denominator must be positive")
    return params.gamma / denom


def edge_cost(params: ScoreParams, con: int) -> float:
    """alpha / con**beta; cheaper for more strongly related paper pairs."""
    if con < 1:
        raise ScoringError(f"mention count must be >= 1, got {con}")
    return params.alpha / con**params.beta


def compute_node_scores(
    graph: CitationGraph,
    venues: VenueTable,
    params: ScoreParams | None = None,
    restrict_to: set[str] | None = None,
    venue_default: float = 0.1,
    raw_pagerank: dict[str, float] | None = None,
) -> NodeScores:
    """PageRank on the full graph, then restrict and normalize for an instance.

    Importance reflects global standing, so the power iteration always runs
    over `graph`; normalization happens within the restricted node set so
    the pgscore and venue terms stay commensurate. Callers that score many
    subsets of one corpus can pass a precomputed `raw_pagerank` to skip the
    iteration.
    """
    params = params or ScoreParams()
    raw = raw_pagerank if raw_pagerank is not None else pagerank(graph, params)
    if restrict_to is not None:
        missing = sorted(set(restrict_to) - set(raw))
        if missing:
            raise ScoringError(f"restriction includes unknown ids: {missing[:5]}")
        raw = {pid: raw[pid] for pid in raw if pid in restrict_to}
    pg = normalize_pgscore(raw, params.epsilon_floor)
    venue_scores = {pid: venues.score(graph.record(pid).venue, venue_default) for pid in pg}
    combined = {pid: params.a * pg[pid] + params.b * venue_scores[pid] for pid in pg}
    return NodeScores(pgscore=pg, venue=venue_scores, combined=combined)


def build_weighted_graph(
    subgraph: CitationGraph,
    scores: NodeScores,
    params: ScoreParams | None = None,
) -> "WeightedGraph":
    """Turn a citation subgraph plus scores into a solver instance.

    Citations lose direction here. When both papers cite each other the
    mention counts add up, so mutual references make the pair cheaper to
    keep together.
    """
    from .steiner import WeightedGraph

    params = params or ScoreParams()
    if not scores.covers(subgraph.papers):
        raise ScoringError("scores do not cover every node in the subgraph")
    g = WeightedGraph()
    for pid in sorted(subgraph.papers):
        g.add_node(pid, node_weight(params, scores.pgscore[pid], scores.venue[pid]))
    for pid in sorted(subgraph.papers):
        for cit in subgraph.out_citations(pid):
            if g.has_edge(pid, cit.target):
                continue
            con = cit.mentions + subgraph.mentions(cit.target, pid)
            g.add_edge(pid, cit.target, edge_cost(params, con))
    return g
