"""Node-edge weighted Steiner tree: heuristic solver and exact oracle.

The solver minimizes sum of edge costs plus sum of node weights over a tree
spanning the compulsory terminals. It follows the classical closure / MST /
expand / MST / prune construction, with node costs folded into path lengths
via a cost-on-entry convention: traversing an edge {u, v} into v costs
c(u, v) + w(v).
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

EXACT_NODE_LIMIT = 16


class SteinerError(Exception):
    pass


class WeightedGraph:
    """Simple undirected graph with positive node weights and edge costs."""

    def __init__(self):
        self._weight: dict[str, float] = {}
        self._adj: dict[str, dict[str, float]] = {}

    def add_node(self, v: str, weight: float) -> None:
        if weight <= 0.0:
            raise SteinerError(f"node weight must be positive: {v} -> {weight}")
        self._weight[v] = weight
        self._adj.setdefault(v, {})

    def add_edge(self, u: str, v: str, cost: float) -> None:
        if u == v:
            raise SteinerError(f"self-loop not allowed: {u}")
        if u not in self._weight or v not in self._weight:
            raise SteinerError(f"edge endpoints must be added first: {u}, {v}")
        if cost <= 0.0:
            raise SteinerError(f"edge cost must be positive: {u}-{v} -> {cost}")
        if v in self._adj[u]:
            raise SteinerError(f"parallel edge not allowed: {u}-{v}")
        self._adj[u][v] = cost
        self._adj[v][u] = cost

    def __contains__(self, v: str) -> bool:
        return v in self._weight

    def __len__(self) -> int:
        return len(self._weight)

    def nodes(self) -> list[str]:
        return sorted(self._weight)

    def node_weight(self, v: str) -> float:
        return self._weight[v]

    def neighbors(self, v: str) -> dict[str, float]:
        return self._adj[v]

    def edge_cost(self, u: str, v: str) -> float:
        return self._adj[u][v]

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> list[tuple[str, str, float]]:
        out = []
        for u in sorted(self._adj):
            for v, c in self._adj[u].items():
                if u < v:
                    out.append((u, v, c))
        return out

    @property
    def n_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def with_uniform_node_weights(self, weight: float = 1.0) -> "WeightedGraph":
        g = WeightedGraph()
        for v in self._weight:
            g.add_node(v, weight)
        for u, v, c in self.edges():
            g.add_edge(u, v, c)
        return g

    def with_uniform_edge_costs(self, cost: float = 1.0) -> "WeightedGraph":
        g = WeightedGraph()
        for v, w in self._weight.items():
            g.add_node(v, w)
        for u, v, _ in self.edges():
            g.add_edge(u, v, cost)
        return g


@dataclass(frozen=True)
class PathRow:
    """Single-source shortest paths under the cost-on-entry convention."""

    source: str
    dist: dict[str, float]
    pred: dict[str, str | None]

    def path_to(self, target: str) -> tuple[str, ...] | None:
        if target not in self.dist:
            return None
        hops = [target]
        while hops[-1] != self.source:
            prev = self.pred[hops[-1]]
            assert prev is not None
            hops.append(prev)
        hops.reverse()
        return tuple(hops)


class PathTable:
    """PathRow per source terminal."""

    def __init__(self, rows: dict[str, PathRow]):
        self.rows = rows

    def dist(self, s: str, t: str) -> float | None:
        return self.rows[s].dist.get(t)

    def path(self, s: str, t: str) -> tuple[str, ...] | None:
        return self.rows[s].path_to(t)


def shortest_paths(graph: WeightedGraph, source: str) -> PathRow:
    """Dijkstra where entering node v over edge {u, v} costs c(u, v) + w(v).

    Path cost therefore counts every node on the path except the source.
    Ties between equal-cost predecessors break toward the smaller id.
    """
    if source not in graph:
        raise SteinerError(f"source not in graph: {source}")
    dist: dict[str, float] = {source: 0.0}
    pred: dict[str, str | None] = {source: None}
    done: set[str] = set()
    heap: list[tuple[float, str]] = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        for v, cost in graph.neighbors(u).items():
            if v in done:
                continue
            nd = d + cost + graph.node_weight(v)
            old = dist.get(v)
            if old is None or nd < old:
                dist[v] = nd
                pred[v] = u
                heapq.heappush(heap, (nd, v))
            elif nd == old and u < (pred[v] or u):
                pred[v] = u
    return PathRow(source=source, dist=dist, pred=pred)


@dataclass
class Closure:
    """Complete distance graph over the terminals, grouped by reachability.

    Terminals that cannot reach any other terminal form singleton groups;
    downstream they become single-node trees of the forest.
    """

    groups: list[tuple[str, ...]]
    dist: dict[tuple[str, str], float] = field(default_factory=dict)
    table: PathTable | None = None

    def path(self, s: str, t: str) -> tuple[str, ...]:
        assert self.table is not None
        p = self.table.path(s, t)
        if p is None:
            raise SteinerError(f"no recorded path {s} -> {t}")
        return p


def metric_closure(graph: WeightedGraph, terminals) -> Closure:
    terms = sorted(set(terminals))
    for t in terms:
        if t not in graph:
            raise SteinerError(f"terminal not in graph: {t}")
    table = PathTable({t: shortest_paths(graph, t) for t in terms})

    # Union terminals that can reach each other.
    parent = {t: t for t in terms}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    dist: dict[tuple[str, str], float] = {}
    for s, t in itertools.combinations(terms, 2):
        d = table.dist(s, t)
        if d is not None:
            dist[(s, t)] = d
            parent[find(s)] = find(t)

    buckets: dict[str, list[str]] = {}
    for t in terms:
        buckets.setdefault(find(t), []).append(t)
    groups = sorted(tuple(sorted(members)) for members in buckets.values())
    return Closure(groups=groups, dist=dist, table=table)


def _kruskal(nodes: list[str], edges: list[tuple[float, str, str]]) -> list[tuple[str, str]]:
    parent = {v: v for v in nodes}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen: list[tuple[str, str]] = []
    for _, u, v in sorted(edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.append((u, v) if u < v else (v, u))
    if len(chosen) != len(nodes) - 1:
        raise SteinerError("minimum_spanning_tree requires a connected graph")
    return chosen


def minimum_spanning_tree(graph: WeightedGraph) -> list[tuple[str, str]]:
    """Kruskal MST with edges ordered by (cost, smaller id, larger id).

    The deterministic ordering makes every "pick an arbitrary one" tie
    reproducible.
    """
    nodes = graph.nodes()
    if not nodes:
        return []
    edges = [(c, min(u, v), max(u, v)) for u, v, c in graph.edges()]
    return _kruskal(nodes, edges)


def expand_tree(
    graph: WeightedGraph, closure: Closure, closure_edges: list[tuple[str, str]]
) -> WeightedGraph:
    """Replace each closure edge by its shortest path; union the results."""
    gs = WeightedGraph()
    for s, t in closure_edges:
        path = closure.path(s, t)
        for v in path:
            if v not in gs:
                gs.add_node(v, graph.node_weight(v))
        for a, b in zip(path, path[1:]):
            if not gs.has_edge(a, b):
                gs.add_edge(a, b, graph.edge_cost(a, b))
    return gs


def prune_nonterminal_leaves(
    nodes: set[str], edges: set[tuple[str, str]], terminals: set[str]
) -> tuple[set[str], set[tuple[str, str]]]:
    """Repeatedly strip leaves that are not terminals."""
    nodes = set(nodes)
    edges = set(edges)
    degree: dict[str, int] = {v: 0 for v in nodes}
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    queue = [v for v in nodes if degree[v] <= 1 and v not in terminals]
    while queue:
        leaf = queue.pop()
        if leaf not in nodes or degree[leaf] > 1:
            continue
        nodes.discard(leaf)
        for u, v in [e for e in edges if leaf in e]:
            edges.discard((u, v))
            other = v if u == leaf else u
            degree[other] -= 1
            if degree[other] <= 1 and other not in terminals:
                queue.append(other)
        degree.pop(leaf, None)
    return nodes, edges


@dataclass(frozen=True)
class SteinerTree:
    """Solution structure: a forest with one tree per terminal group."""

    nodes: frozenset[str]
    edges: tuple[tuple[str, str], ...]
    total_cost: float
    terminals: frozenset[str]
    n_components: int

    def leaf_count(self) -> int:
        degree: dict[str, int] = {v: 0 for v in self.nodes}
        for u, v in self.edges:
            degree[u] += 1
            degree[v] += 1
        return sum(1 for v in self.nodes if degree[v] <= 1)


def _tree_cost(graph: WeightedGraph, nodes: set[str], edges: set[tuple[str, str]]) -> float:
    return sum(graph.edge_cost(u, v) for u, v in edges) + sum(
        graph.node_weight(v) for v in nodes
    )


def _assert_valid_tree(nodes: set[str], edges: set[tuple[str, str]], terminals: set[str]) -> None:
    # Acyclic: |E| = |V| - #components; leaves all terminals.
    parent = {v: v for v in nodes}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise SteinerError("solution contains a cycle")
        parent[ru] = rv
    degree: dict[str, int] = {v: 0 for v in nodes}
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    for v in nodes:
        if degree[v] <= 1 and v not in terminals:
            raise SteinerError(f"non-terminal leaf survived pruning: {v}")


def steiner_tree(graph: WeightedGraph, terminals) -> SteinerTree:
    """Heuristic node-edge weighted Steiner tree over the compulsory terminals.

    Terminals split across connected components yield a forest, one tree per
    reachable group. The reported cost is the full objective: edge costs
    plus node weights of every retained node, terminals included.
    """
    terms = sorted(set(terminals))
    if not terms:
        raise SteinerError("terminal set is empty")
    for t in terms:
        if t not in graph:
            raise SteinerError(f"terminal not in graph: {t}")

    closure = metric_closure(graph, terms)
    all_nodes: set[str] = set()
    all_edges: set[tuple[str, str]] = set()
    for group in closure.groups:
        if len(group) == 1:
            all_nodes.add(group[0])
            continue
        g1 = WeightedGraph()
        for t in group:
            g1.add_node(t, graph.node_weight(t))
        for s, t in itertools.combinations(group, 2):
            # Every candidate tree pays every terminal weight exactly once,
            # so only edge costs and interior node weights distinguish the
            # candidates. The raw entry-cost distance counts the target
            # terminal but not the source, which skews pair comparisons;
            # dropping the target weight leaves the part that matters.
            g1.add_edge(s, t, closure.dist[(s, t)] - graph.node_weight(t))
        t1 = minimum_spanning_tree(g1)
        gs = expand_tree(graph, closure, t1)
        final_edges = minimum_spanning_tree(gs)
        nodes, edges = prune_nonterminal_leaves(
            set(gs.nodes()), set(final_edges), set(group)
        )
        all_nodes |= nodes
        all_edges |= edges

    _assert_valid_tree(all_nodes, all_edges, set(terms))
    return SteinerTree(
        nodes=frozenset(all_nodes),
        edges=tuple(sorted(all_edges)),
        total_cost=_tree_cost(graph, all_nodes, all_edges),
        terminals=frozenset(terms),
        n_components=len(closure.groups),
    )


def _component_of(graph: WeightedGraph, start: str) -> set[str]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in graph.neighbors(u):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def _induced_mst_cost(
    graph: WeightedGraph, nodes: set[str]
) -> tuple[float, list[tuple[str, str]]] | None:
    edges = [
        (c, u, v)
        for u, v, c in graph.edges()
        if u in nodes and v in nodes
    ]
    try:
        chosen = _kruskal(sorted(nodes), edges)
    except SteinerError:
        return None
    return sum(graph.edge_cost(u, v) for u, v in chosen), chosen


def exact_steiner_tree(graph: WeightedGraph, terminals) -> SteinerTree:
    """Exhaustive optimum for small instances; testing oracle only.

    Enumerates every superset of the terminals inside their component and
    takes the cheapest connected one, scoring each candidate by its MST
    edge cost plus the node weights.
    """
    if len(graph) > EXACT_NODE_LIMIT:
        raise SteinerError(f"graph too large for exact search (> {EXACT_NODE_LIMIT} nodes)")
    terms = sorted(set(terminals))
    if not terms:
        raise SteinerError("terminal set is empty")
    for t in terms:
        if t not in graph:
            raise SteinerError(f"terminal not in graph: {t}")

    remaining = set(terms)
    all_nodes: set[str] = set()
    all_edges: set[tuple[str, str]] = set()
    total = 0.0
    n_components = 0
    while remaining:
        anchor = min(remaining)
        comp = _component_of(graph, anchor)
        group = sorted(remaining & comp)
        remaining -= comp
        n_components += 1
        if len(group) == 1 and len(comp) == 1:
            all_nodes.add(anchor)
            total += graph.node_weight(anchor)
            continue
        extras = sorted(comp - set(group))
        best: tuple[float, tuple[str, ...], list[tuple[str, str]]] | None = None
        for r in range(len(extras) + 1):
            for combo in itertools.combinations(extras, r):
                cand = set(group) | set(combo)
                mst = _induced_mst_cost(graph, cand)
                if mst is None:
                    continue
                edge_sum, chosen = mst
                cost = edge_sum + sum(graph.node_weight(v) for v in cand)
                key = (cost, tuple(sorted(cand)), chosen)
                if best is None or key[:2] < best[:2]:
                    best = key
        if best is None:
            # Single terminal unreachable from peers still forms its own tree.
            all_nodes.add(anchor)
            total += graph.node_weight(anchor)
            continue
        cost, cand_nodes, chosen = best
        all_nodes |= set(cand_nodes)
        all_edges |= set(chosen)
        total += cost

    _assert_valid_tree(all_nodes, all_edges, set(terms))
    return SteinerTree(
        nodes=frozenset(all_nodes),
        edges=tuple(sorted(all_edges)),
        total_cost=total,
        terminals=frozenset(terms),
        n_components=n_components,
    )
