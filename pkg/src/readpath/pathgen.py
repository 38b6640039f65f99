"""Turn an undirected solution tree into an ordered reading path.

Edges are oriented prerequisite-first: when one endpoint cites the other,
the cited paper comes first; mutual or missing citations fall back to
publication year, then id. A tree admits no directed cycle under any
orientation, so the result is always a DAG.
"""

from __future__ import annotations

import heapq

from .corpus import CitationGraph
from .scoring import NodeScores


class PathError(Exception):
    pass


def orient_edges(
    graph: CitationGraph, edges
) -> tuple[tuple[str, str], ...]:
    """Direct each undirected edge from prerequisite to follow-up."""
    directed: list[tuple[str, str]] = []
    for u, v in edges:
        u_cites_v = graph.mentions(u, v) > 0
        v_cites_u = graph.mentions(v, u) > 0
        if u_cites_v and not v_cites_u:
            directed.append((v, u))
        elif v_cites_u and not u_cites_v:
            directed.append((u, v))
        else:
            yu, yv = graph.record(u).year, graph.record(v).year
            if (yu, u) <= (yv, v):
                directed.append((u, v))
            else:
                directed.append((v, u))
    return tuple(sorted(directed))


def roots_of(nodes, directed_edges) -> tuple[str, ...]:
    has_incoming = {b for _, b in directed_edges}
    return tuple(sorted(set(nodes) - has_incoming))


def reading_order(graph: CitationGraph, nodes, directed_edges) -> tuple[str, ...]:
    """Topological order; among ready papers, older and smaller-id first."""
    node_set = set(nodes)
    indeg = {v: 0 for v in node_set}
    out: dict[str, list[str]] = {v: [] for v in node_set}
    for a, b in directed_edges:
        if a not in node_set or b not in node_set:
            raise PathError(f"edge endpoint outside node set: {a} -> {b}")
        indeg[b] += 1
        out[a].append(b)

    ready = [(graph.record(v).year, v) for v in node_set if indeg[v] == 0]
    heapq.heapify(ready)
    order: list[str] = []
    while ready:
        _, v = heapq.heappop(ready)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, (graph.record(w).year, w))
    if len(order) != len(node_set):
        raise PathError("directed edges contain a cycle")
    return tuple(order)


def rank_by_score(ids, scores: NodeScores) -> list[str]:
    return sorted(ids, key=lambda pid: (-scores.combined[pid], pid))


def top_k_list(
    tree_nodes, scores: NodeScores, k: int, spares=()
) -> tuple[str, ...]:
    """Best k papers: tree members first by combined score, spares after.

    When the tree holds fewer than k papers, remaining slots fill from the
    spare pool (typically the rest of the query subgraph) in score order.
    """
    if k < 1:
        raise PathError(f"k must be >= 1, got {k}")
    tree_set = set(tree_nodes)
    ranked = rank_by_score(tree_set, scores)
    if len(ranked) < k:
        extras = rank_by_score(set(spares) - tree_set, scores)
        ranked.extend(extras)
    return tuple(ranked[:k])
