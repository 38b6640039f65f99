"""Regenerate the synthetic corpus fixture.

Writes corpus.jsonl, venues.json, benchmark.jsonl, seeds.json, and
config.json into this directory, then replays the main pipeline and prints
the numbers the test suite depends on. Deterministic: a fixed RNG seed
drives every choice, so the checked-in files are reproducible. The chosen
seed is the first one whose generated world meets every target below
(subgraph size, expansion beating the raw seed list, union mode holding
its recall); the search is re-run here so the constants stay honest.

The world is three research topics. Each topic has a handful of old
"classic" papers that the topic's recent papers all cite (the planted
prerequisites: never in a seed list, but co-cited by many seeds), a layer
of hub papers fanning out to a long tail, and a survey whose reference
list is the ground truth. The first topic is sized so a 30-seed query
expands to roughly 1,750 nodes and 2,900 edges.

Run from the repository root:  python3 fixtures/generate.py
"""

from __future__ import annotations

import json
import random
from pathlib import Path

HERE = Path(__file__).parent
RNG_SEED_CANDIDATES = range(20240817, 20240817 + 50)

SUBGRAPH_NODE_RANGE = (1650, 1850)
SUBGRAPH_EDGE_RANGE = (2700, 3100)
RECALL_MARGIN = 0.02

VENUES = {
    "JGLR": 1.0,
    "ICGM": 0.95,
    "NetSci": 0.9,
    "DataEng": 0.8,
    "CompSurv": 0.75,
    "GraphWorks": 0.65,
    "AppliedNets": 0.55,
    "RegionalCS": 0.4,
    "WorkshopGL": 0.3,
}

FIRST = ["Ada", "Ben", "Chen", "Dana", "Eli", "Fang", "Goro", "Hana", "Ivan", "Jia",
         "Kim", "Lena", "Mori", "Nia", "Omar", "Pia", "Qi", "Rosa", "Sam", "Tara"]
LAST = ["Abbott", "Bishop", "Cortez", "Duan", "Ellis", "Fontaine", "Gupta", "Hong",
        "Iyer", "Jansen", "Kato", "Lindqvist", "Moreau", "Novak", "Okafor", "Petrov",
        "Quint", "Rossi", "Santos", "Ueda"]

TITLE_HEADS = ["On", "Towards", "Revisiting", "Scalable", "Efficient", "A Study of",
               "Learning", "Beyond", "Robust", "Adaptive"]
TITLE_TAILS = ["Representations", "Propagation", "Embeddings", "Inference", "Sampling",
               "Aggregation", "Benchmarks", "Optimization", "Regularities", "Structure"]


class World:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.papers: dict[str, dict] = {}

    def add(self, pid: str, year: int, topic_word: str, venue_chance: float = 0.6) -> dict:
        rng = self.rng
        title = f"{rng.choice(TITLE_HEADS)} {topic_word} {rng.choice(TITLE_TAILS)}"
        venue = rng.choice(list(VENUES)) if rng.random() < venue_chance else None
        authors = sorted(
            f"{rng.choice(FIRST)} {rng.choice(LAST)}" for _ in range(rng.randint(1, 4))
        )
        doc = {
            "id": pid,
            "title": title,
            "year": year,
            "venue": venue,
            "authors": authors,
            "abstract": f"We examine {topic_word.lower()} and report findings." if rng.random() < 0.7 else None,
            "citations": [],
        }
        self.papers[pid] = doc
        return doc

    def cite(self, src: str, dst: str, mentions: int = 1) -> None:
        if src == dst:
            return
        cites = self.papers[src]["citations"]
        for c in cites:
            if c["id"] == dst:
                return
        cites.append({"id": dst, "mentions": mentions})

    def venue_score(self, pid: str) -> float:
        venue = self.papers[pid]["venue"]
        return VENUES.get(venue, 0.1) if venue else 0.1


def build_topic(
    world: World,
    prefix: str,
    topic_word: str,
    n_classics: int,
    n_hubs: int,
    n_mids_per_seed: int,
    n_seeds: int,
    tail_per_hub: int,
    mid_tail_cites: int,
    seed_tail_cites: int,
    survey_year: int,
) -> dict:
    """One topic community; returns the ids that matter downstream."""
    rng = world.rng
    classics = [f"{prefix}-classic-{i:02d}" for i in range(n_classics)]
    hubs = [f"{prefix}-hub-{i:02d}" for i in range(n_hubs)]
    seeds = [f"{prefix}-seed-{i:02d}" for i in range(n_seeds)]
    mids = [f"{prefix}-mid-{i:03d}" for i in range(n_seeds * n_mids_per_seed)]
    tails = [f"{prefix}-tail-{i:04d}" for i in range(n_hubs * tail_per_hub)]

    for i, pid in enumerate(classics):
        world.add(pid, 1998 + i, topic_word, venue_chance=0.9)
    for i, pid in enumerate(hubs):
        world.add(pid, 2010 + i % 5, topic_word, venue_chance=0.8)
    for pid in mids:
        world.add(pid, rng.randint(2013, 2016), topic_word)
    for pid in tails:
        world.add(pid, rng.randint(2000, survey_year - 1), topic_word, venue_chance=0.3)
    for pid in seeds:
        world.add(pid, rng.randint(survey_year - 3, survey_year), topic_word, venue_chance=0.7)

    # Old foundations cite each other a little.
    for i, src in enumerate(classics):
        for dst in rng.sample(classics[:i] or classics, k=min(2, max(i, 1))):
            world.cite(src, dst, rng.randint(1, 2))
    # Hubs cite a couple of earlier hubs and a classic or two.
    for i, src in enumerate(hubs):
        for dst in rng.sample(hubs[:i], k=min(2, i)):
            world.cite(src, dst, 1)
        for dst in rng.sample(classics, k=2):
            world.cite(src, dst, rng.randint(1, 2))
    # Each hub fans out over its own slice of the tail.
    for i, src in enumerate(hubs):
        for dst in tails[i * tail_per_hub : (i + 1) * tail_per_hub]:
            world.cite(src, dst, 1)
    # Mid papers cite tails and a couple of classics.
    for src in mids:
        for dst in rng.sample(tails, k=min(mid_tail_cites, len(tails))):
            world.cite(src, dst, 1)
        for dst in rng.sample(classics, k=2):
            world.cite(src, dst, rng.randint(1, 3))
    # Seeds cite several classics (the shared prerequisites), several hubs,
    # their own mid papers, and a few tail papers directly.
    for i, src in enumerate(seeds):
        for dst in rng.sample(classics, k=min(4, n_classics)):
            world.cite(src, dst, rng.randint(1, 3))
        for dst in rng.sample(hubs, k=min(4, n_hubs)):
            world.cite(src, dst, rng.randint(1, 2))
        own = mids[i * n_mids_per_seed : (i + 1) * n_mids_per_seed]
        for dst in own:
            world.cite(src, dst, 1)
        for dst in rng.sample(tails, k=min(seed_tail_cites, len(tails))):
            world.cite(src, dst, 1)

    return {
        "classics": classics,
        "hubs": hubs,
        "seeds": seeds,
        "mids": mids,
        "tails": tails,
        "survey_year": survey_year,
        "topic_word": topic_word,
    }


def build_survey(world: World, prefix: str, topic: dict, citation_count: int, phrases: list[str]) -> dict:
    """Survey paper + benchmark entry with occurrence-thresholded references."""
    rng = world.rng
    sid = f"{prefix}-survey"
    world.add(sid, topic["survey_year"], topic["topic_word"], venue_chance=1.0)
    references: list[dict] = []

    def add_ref(pid: str, occ: int) -> None:
        references.append({"id": pid, "occurrences": occ})
        world.cite(sid, pid, occ)

    for pid in topic["classics"]:
        add_ref(pid, rng.randint(3, 5))
    for pid in topic["hubs"]:
        add_ref(pid, rng.randint(2, 3))
    # The best-published third of the seeds made it into the survey; venue
    # standing is the story's proxy for which recent work a survey keeps.
    k_seed_refs = max(6, len(topic["seeds"]) // 3)
    seed_refs = sorted(
        topic["seeds"], key=lambda pid: (-world.venue_score(pid), pid)
    )[:k_seed_refs]
    for pid in sorted(seed_refs):
        add_ref(pid, rng.randint(1, 2))
    for pid in sorted(rng.sample(topic["mids"], k=min(12, len(topic["mids"])))):
        add_ref(pid, 1)
    for pid in sorted(rng.sample(topic["tails"], k=min(10, len(topic["tails"])))):
        add_ref(pid, 1)

    references.sort(key=lambda r: r["id"])
    return {
        "survey_id": sid,
        "key_phrases": phrases,
        "year": topic["survey_year"],
        "citation_count": citation_count,
        "references": references,
        "seeds": list(topic["seeds"]),
    }


def add_noise(world: World, n: int) -> None:
    rng = world.rng
    noise = [f"noise-{i:04d}" for i in range(n)]
    for pid in noise:
        world.add(pid, rng.randint(1995, 2020), "Miscellaneous", venue_chance=0.4)
    for src in noise:
        for dst in rng.sample(noise, k=rng.randint(0, 3)):
            world.cite(src, dst, 1)


def build_world(rng_seed: int) -> tuple[World, list[dict]]:
    rng = random.Random(rng_seed)
    world = World(rng)

    demo = build_topic(
        world,
        prefix="gnn",
        topic_word="Message Passing",
        n_classics=8,
        n_hubs=10,
        n_mids_per_seed=3,
        n_seeds=35,
        tail_per_hub=160,
        mid_tail_cites=7,
        seed_tail_cites=4,
        survey_year=2019,
    )
    spectral = build_topic(
        world,
        prefix="spec",
        topic_word="Spectral Filtering",
        n_classics=6,
        n_hubs=6,
        n_mids_per_seed=2,
        n_seeds=28,
        tail_per_hub=8,
        mid_tail_cites=4,
        seed_tail_cites=2,
        survey_year=2018,
    )
    sampling = build_topic(
        world,
        prefix="samp",
        topic_word="Neighborhood Sampling",
        n_classics=6,
        n_hubs=7,
        n_mids_per_seed=2,
        n_seeds=28,
        tail_per_hub=8,
        mid_tail_cites=4,
        seed_tail_cites=2,
        survey_year=2020,
    )

    bench_entries = [
        build_survey(world, "gnn", demo, 420, ["message", "passing", "networks"]),
        build_survey(world, "spec", spectral, 260, ["spectral", "graph", "filtering"]),
        build_survey(world, "samp", sampling, 180, ["neighborhood", "sampling", "methods"]),
    ]

    total_target = 2100
    n_noise = total_target - len(world.papers)
    if n_noise > 0:
        add_noise(world, n_noise)
    return world, bench_entries


def write_files(world: World, bench_entries: list[dict]) -> None:
    seeds_file = {
        " ".join(entry["key_phrases"]): entry["seeds"] for entry in bench_entries
    }
    with open(HERE / "corpus.jsonl", "w", encoding="utf-8") as fh:
        for pid in sorted(world.papers):
            fh.write(json.dumps(world.papers[pid], ensure_ascii=False) + "\n")
    with open(HERE / "venues.json", "w", encoding="utf-8") as fh:
        json.dump(VENUES, fh, indent=2, sort_keys=True)
        fh.write("\n")
    with open(HERE / "benchmark.jsonl", "w", encoding="utf-8") as fh:
        for entry in bench_entries:
            fh.write(json.dumps(entry, ensure_ascii=False) + "\n")
    with open(HERE / "seeds.json", "w", encoding="utf-8") as fh:
        json.dump(seeds_file, fh, indent=2, sort_keys=True)
        fh.write("\n")
    config = {
        "corpus": {"papers": "corpus.jsonl", "venues": "venues.json"},
        "seeds": {"provider": "offline", "path": "seeds.json"},
        "params": {},
        "query": {
            "expansion_order": 2,
            "expansion_direction": "out",
            "terminal_mode": "reallocated",
            "cooccurrence_threshold": 2,
            "k_seeds": 30,
            "k_output": 30,
        },
        "service": {"bind_address": "127.0.0.1:8472", "cors_origins": ["*"]},
    }
    with open(HERE / "config.json", "w", encoding="utf-8") as fh:
        json.dump(config, fh, indent=2, sort_keys=True)
        fh.write("\n")


def check_world(world: World, bench_entries: list[dict]) -> dict | None:
    """Replay the pipeline against the freshly written files; None if unfit."""
    from readpath import (
        AblationMode,
        Engine,
        EvalOptions,
        ground_truth,
        load_benchmark,
        load_corpus,
        recall_at_k,
        run_eval,
    )

    graph, venues, report = load_corpus(HERE / "corpus.jsonl", HERE / "venues.json")
    engine = Engine.from_config_file(HERE / "config.json")
    result = engine.run_query(bench_entries[0]["key_phrases"])
    stats = {
        "papers": len(world.papers),
        "load": report.summary(),
        "subgraph_nodes": result.n_subgraph_nodes,
        "subgraph_edges": result.n_subgraph_edges,
        "tree_nodes": len(result.tree.nodes),
        "seconds": result.seconds,
    }
    lo, hi = SUBGRAPH_NODE_RANGE
    if not lo <= result.n_subgraph_nodes <= hi:
        return None
    lo, hi = SUBGRAPH_EDGE_RANGE
    if not lo <= result.n_subgraph_edges <= hi:
        return None

    entries = load_benchmark(HERE / "benchmark.jsonl")
    options = EvalOptions(
        ks=(30,),
        modes=(AblationMode.NEWST, AblationMode.NEWST_U),
        levels=(1,),
        seed_counts=(30,),
    )
    eval_result = run_eval(entries, graph, venues, options=options)
    recalls = {row["mode"]: row["recall"] for row in eval_result.report["aggregates"]}

    per_survey = []
    for entry in entries:
        truth = {p for p in ground_truth(entry).L1 if p in graph}
        per_survey.append(recall_at_k(list(entry.seeds)[:30], truth, 30))
    seeds_only = sum(per_survey) / len(per_survey)
    stats.update(
        newst_recall=recalls["NEWST"],
        union_recall=recalls["NEWST_U"],
        seeds_only_recall=seeds_only,
    )
    if recalls["NEWST"] < seeds_only + RECALL_MARGIN:
        return None
    if recalls["NEWST_U"] < recalls["NEWST"]:
        return None
    return stats


def main() -> None:
    for rng_seed in RNG_SEED_CANDIDATES:
        world, bench_entries = build_world(rng_seed)
        write_files(world, bench_entries)
        stats = check_world(world, bench_entries)
        if stats is None:
            print(f"seed {rng_seed}: rejected")
            continue
        print(f"seed {rng_seed}: accepted")
        for key, val in stats.items():
            print(f"  {key}: {val}")
        return
    raise SystemExit("no RNG seed in the candidate range met the fixture targets")


if __name__ == "__main__":
    main()
