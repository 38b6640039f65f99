"""
Connecting terminals through a weighted graph
=============================================

The solver finds a cheap tree that spans a set of required nodes, paying
for every edge it uses and every node it touches. On small graphs an
exhaustive oracle gives the true optimum, so we can watch the heuristic
land on or near it.
"""

from readpath import WeightedGraph, exact_steiner_tree, steiner_tree
from readpath.steiner import metric_closure, shortest_paths

# A bridge layout: two required nodes (a, d) and two ways between them.
# The direct road is a heavy edge; the detour crosses two cheap nodes.
g = WeightedGraph()
for name, w in [("a", 1.0), ("b", 0.25), ("c", 0.25), ("d", 1.0)]:
    g.add_node(name, w)
g.add_edge("a", "d", 4.0)   # direct but expensive
g.add_edge("a", "b", 0.5)
g.add_edge("b", "c", 0.5)
g.add_edge("c", "d", 0.5)

# Distances charge each node on entry, so a path's cost counts the edges
# plus every node after the start.
row = shortest_paths(g, "a")
print(f"a -> d costs {row.dist['d']} via {' -> '.join(row.path_to('d'))}")

closure = metric_closure(g, ["a", "d"])
print(f"closure distance a~d: {closure.dist[('a', 'd')]}")

tree = steiner_tree(g, ["a", "d"])
print(f"\nheuristic tree: nodes {sorted(tree.nodes)}, cost {tree.total_cost}")

exact = exact_steiner_tree(g, ["a", "d"])
print(f"exact tree:     nodes {sorted(exact.nodes)}, cost {exact.total_cost}")

# The guarantee is 2(1 - 1/l) times the optimum, l = optimal leaf count.
l = exact.leaf_count()
bound = 2.0 * (1.0 - 1.0 / l) * exact.total_cost
print(f"bound with {l} leaves: {bound}")

# Terminals in separate components come back as a forest, one tree each.
g.add_node("island", 0.5)
forest = steiner_tree(g, ["a", "d", "island"])
print(f"\nwith an isolated terminal: {forest.n_components} components, "
      f"{len(forest.edges)} edges")
