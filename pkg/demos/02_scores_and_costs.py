"""
From citations to weights
=========================

Two signals decide how expensive a paper is to include in a reading path:
its PageRank in the citation graph and the score of its venue. Edges get
cheaper the more often one paper mentions the other. This demo computes
both and shows the extremes.
"""

from pathlib import Path

from readpath import ScoreParams, compute_node_scores, edge_cost, load_corpus, pagerank

FIXTURES = Path(__file__).parent.parent / "fixtures"

graph, venues, _ = load_corpus(FIXTURES / "corpus.jsonl", FIXTURES / "venues.json")
params = ScoreParams()  # alpha=3, beta=2, gamma=5, a=0.7, b=0.3

# Raw PageRank sums to one over the whole corpus.
raw = pagerank(graph, params)
print(f"PageRank over {len(raw)} papers, mass {sum(raw.values()):.6f}")

top = sorted(raw, key=raw.get, reverse=True)[:5]
print("most central papers:")
for pid in top:
    print(f"  {raw[pid]:.5f}  {pid}  {graph.record(pid).title!r}")

# compute_node_scores normalizes PageRank by its maximum, looks up venue
# scores (unknown venues get a small default), and blends the two.
scores = compute_node_scores(graph, venues, params)
cheap = min(scores.combined, key=scores.combined.get)
print(f"\nweakest combined score: {scores.combined[cheap]:.4f} ({cheap})")

# Node weight is gamma over the blend, so strong papers are cheap to
# include and weak ones expensive.
strongest, weakest = top[0], cheap
for pid in (strongest, weakest):
    w = params.gamma / scores.combined[pid]
    print(f"node weight {pid}: {w:.3f}")

# Edge cost falls off quadratically with the mention count.
print()
for con in (1, 2, 3, 5):
    print(f"edge cost at {con} mention(s): {edge_cost(params, con):.4f}")
