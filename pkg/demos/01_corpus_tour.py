"""
Loading a corpus and walking the citation graph
===============================================

The corpus is a JSONL file, one paper per line, plus a JSON map of venue
scores. Loading validates every line and drops what cannot be used
(dangling citation targets, self-citations), keeping counts of each.
"""

from pathlib import Path

from readpath import filter_by_year, load_corpus, neighborhood

FIXTURES = Path(__file__).parent.parent / "fixtures"

graph, venues, report = load_corpus(FIXTURES / "corpus.jsonl", FIXTURES / "venues.json")
print(report.summary())

# Every paper is a frozen record: metadata plus outgoing citations with
# their in-text mention counts.
some_id = sorted(graph.papers)[0]
rec = graph.record(some_id)
print(f"\n{rec.id}: {rec.title!r} ({rec.year}, venue={rec.venue})")
print(f"  cites {len(rec.citations_out)} papers, cited by {len(graph.cited_by(some_id))}")

# The graph answers both directions: who does a paper cite, who cites it.
target = rec.citations_out[0].target if rec.citations_out else some_id
print(f"\npapers citing {target}:")
for pid in sorted(graph.cited_by(target))[:5]:
    print(f"  {pid} ({graph.record(pid).year})")

# Queries never work on the whole corpus. They expand a seed list into its
# 1st/2nd-order citation neighborhood and work inside that subgraph.
seeds = sorted(graph.papers)[:5]
sub1 = neighborhood(graph, seeds, order=1, direction="out")
sub2 = neighborhood(graph, seeds, order=2, direction="out")
print(f"\n{len(seeds)} seeds expand to {len(sub1)} papers at order 1, "
      f"{len(sub2)} at order 2")

# Cutting off by year gives the corpus as it looked back then; citations
# into the future disappear with the papers that made them.
old = filter_by_year(graph, 2012)
print(f"full corpus {len(graph)} papers; up to 2012 only {len(old)}")
