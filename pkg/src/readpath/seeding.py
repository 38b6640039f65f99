"""Seed paper acquisition and terminal selection.

A query is a list of key phrases. A seed provider maps the joined query
string to candidate paper ids; resolution filters them against the corpus.
Terminal reallocation then swaps popular seeds for the papers they jointly
cite, which tend to be the shared prerequisites.
"""

from __future__ import annotations

import enum
import json
import urllib.parse
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Protocol

from .corpus import CitationGraph


class SeedingError(Exception):
    pass


def query_string(key_phrases: list[str]) -> str:
    phrases = [p.strip() for p in key_phrases if p and p.strip()]
    if not phrases:
        raise SeedingError("query needs at least one non-empty key phrase")
    return " ".join(phrases)


class SeedProvider(Protocol):
    def seeds_for(self, query: str) -> list[str]: ...


class OfflineSeedProvider:
    """Seed lists frozen in a JSON file keyed by the exact query string."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        with open(self.path, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise SeedingError(f"{self.path}: expected an object mapping query -> ids")
        for q, ids in data.items():
            if not isinstance(ids, list) or not all(isinstance(i, str) for i in ids):
                raise SeedingError(f"{self.path}: entry {q!r} is not a list of ids")
        self._table: dict[str, list[str]] = data

    def seeds_for(self, query: str) -> list[str]:
        if query not in self._table:
            raise SeedingError(f"no seed list recorded for query: {query!r}")
        return list(self._table[query])


class HttpSeedProvider:
    """Seed search over a JSON HTTP API.

    url_template gets the percent-encoded query substituted for `{query}`.
    response_path is a dotted path to the result list inside the response
    body; list items are either id strings or objects holding `id_field`.
    """

    def __init__(
        self,
        url_template: str,
        response_path: str = "results",
        id_field: str = "id",
        fetch: Callable[[str], object] | None = None,
    ):
        if "{query}" not in url_template:
            raise SeedingError("url_template must contain {query}")
        self.url_template = url_template
        self.response_path = response_path
        self.id_field = id_field
        self._fetch = fetch or _default_fetch

    def seeds_for(self, query: str) -> list[str]:
        url = self.url_template.replace("{query}", urllib.parse.quote(query))
        body = self._fetch(url)
        node = body
        for part in self.response_path.split("."):
            if not isinstance(node, dict) or part not in node:
                raise SeedingError(
                    f"response missing {self.response_path!r} (stopped at {part!r})"
                )
            node = node[part]
        if not isinstance(node, list):
            raise SeedingError(f"response field {self.response_path!r} is not a list")
        ids = []
        for item in node:
            if isinstance(item, str):
                ids.append(item)
            elif isinstance(item, dict) and isinstance(item.get(self.id_field), str):
                ids.append(item[self.id_field])
            else:
                raise SeedingError(f"cannot extract an id from result item: {item!r}")
        return ids


def _default_fetch(url: str) -> object:
    import requests

    resp = requests.get(url, timeout=30)
    resp.raise_for_status()
    return resp.json()


@dataclass(frozen=True)
class QuerySpec:
    key_phrases: tuple[str, ...]
    k_seeds: int = 30
    k_output: int = 30
    cutoff_year: int | None = None

    def __post_init__(self):
        if not self.key_phrases:
            raise SeedingError("query needs at least one key phrase")
        if self.k_seeds < 1:
            raise SeedingError(f"k_seeds must be >= 1, got {self.k_seeds}")
        if self.k_output < 1:
            raise SeedingError(f"k_output must be >= 1, got {self.k_output}")

    @property
    def query(self) -> str:
        return query_string(list(self.key_phrases))


@dataclass(frozen=True)
class ResolvedSeeds:
    ids: tuple[str, ...]
    dropped_unresolved: tuple[str, ...]
    dropped_filtered: tuple[str, ...]


def resolve_seeds(
    graph: CitationGraph,
    candidates: list[str],
    cutoff_year: int | None = None,
    excluded: set[str] | None = None,
) -> ResolvedSeeds:
    """Keep candidates present in the corpus, minus exclusions and late papers.

    Order is preserved and duplicates collapse to their first occurrence, so
    a ranked provider response stays ranked.
    """
    excluded = excluded or set()
    kept: list[str] = []
    unresolved: list[str] = []
    filtered: list[str] = []
    seen: set[str] = set()
    for pid in candidates:
        if pid in seen:
            continue
        seen.add(pid)
        if pid not in graph:
            unresolved.append(pid)
        elif pid in excluded:
            filtered.append(pid)
        elif cutoff_year is not None and graph.record(pid).year > cutoff_year:
            filtered.append(pid)
        else:
            kept.append(pid)
    return ResolvedSeeds(
        ids=tuple(kept),
        dropped_unresolved=tuple(unresolved),
        dropped_filtered=tuple(filtered),
    )


def provide_seeds(
    provider: SeedProvider,
    graph: CitationGraph,
    spec: QuerySpec,
    excluded: set[str] | None = None,
) -> ResolvedSeeds:
    """Fetch, resolve, and cap the seed list for a query.

    Keeps at most k_seeds resolvable papers in provider rank order; raises
    when nothing survives resolution, since the pipeline cannot start from
    an empty seed set.
    """
    candidates = provider.seeds_for(spec.query)
    resolved = resolve_seeds(graph, candidates, cutoff_year=spec.cutoff_year, excluded=excluded)
    kept = resolved.ids[: spec.k_seeds]
    if not kept:
        raise SeedingError(f"no seeds resolved for query: {spec.query!r}")
    return ResolvedSeeds(
        ids=kept,
        dropped_unresolved=resolved.dropped_unresolved,
        dropped_filtered=resolved.dropped_filtered,
    )


def cooccurrence_counts(graph: CitationGraph, seeds) -> dict[str, int]:
    """For each non-seed paper, how many distinct seeds cite it."""
    seed_set = set(seeds)
    counts: dict[str, int] = {}
    for s in sorted(seed_set):
        if s not in graph:
            raise SeedingError(f"seed not in graph: {s}")
        for cit in graph.out_citations(s):
            if cit.target not in seed_set:
                counts[cit.target] = counts.get(cit.target, 0) + 1
    return counts


class TerminalMode(enum.Enum):
    REALLOCATED = "reallocated"
    INITIAL = "initial"
    UNION = "union"
    INTERSECTION = "intersection"


@dataclass(frozen=True)
class TerminalSelection:
    terminals: tuple[str, ...]
    mode: TerminalMode
    fell_back: bool
    counts: dict[str, int]


def reallocate_terminals(
    graph: CitationGraph,
    seeds,
    mode: TerminalMode = TerminalMode.REALLOCATED,
    threshold: int = 2,
) -> TerminalSelection:
    """Pick the compulsory terminal set for a seed list.

    REALLOCATED keeps the non-seed papers cited by at least `threshold`
    distinct seeds, the idea being that shared references mark the material
    every seed builds on. INITIAL keeps the seeds as-is; UNION and
    INTERSECTION combine the two sets. REALLOCATED and INTERSECTION fall
    back to the plain seeds when they come up empty, with the fallback
    flagged.
    """
    seed_list = sorted(set(seeds))
    if not seed_list:
        raise SeedingError("seed list is empty")
    if threshold < 1:
        raise SeedingError(f"threshold must be >= 1, got {threshold}")
    counts = cooccurrence_counts(graph, seed_list)
    popular = sorted(t for t, n in counts.items() if n >= threshold)

    if mode is TerminalMode.INITIAL:
        chosen, fell_back = seed_list, False
    elif mode is TerminalMode.REALLOCATED:
        chosen, fell_back = (popular, False) if popular else (seed_list, True)
    elif mode is TerminalMode.UNION:
        chosen, fell_back = sorted(set(seed_list) | set(popular)), False
    elif mode is TerminalMode.INTERSECTION:
        both = sorted(set(seed_list) & set(popular))
        chosen, fell_back = (both, False) if both else (seed_list, True)
    else:  # pragma: no cover - enum is closed
        raise SeedingError(f"unknown terminal mode: {mode}")
    return TerminalSelection(
        terminals=tuple(chosen), mode=mode, fell_back=fell_back, counts=counts
    )
