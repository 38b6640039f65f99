import json
from pathlib import Path

import pytest

from readpath import load_benchmark, load_corpus

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def fixture_corpus():
    graph, venues, report = load_corpus(FIXTURES / "corpus.jsonl", FIXTURES / "venues.json")
    return graph, venues, report


@pytest.fixture(scope="session")
def fixture_benchmark():
    return load_benchmark(FIXTURES / "benchmark.jsonl")


def write_corpus(tmp_path: Path, papers: list[dict], venues: dict | None = None):
    """Write a small corpus pair of files and return their paths."""
    tmp_path.mkdir(parents=True, exist_ok=True)
    papers_path = tmp_path / "papers.jsonl"
    with open(papers_path, "w", encoding="utf-8") as fh:
        for doc in papers:
            fh.write(json.dumps(doc) + "\n")
    venues_path = tmp_path / "venues.json"
    venues_path.write_text(json.dumps(venues or {}), encoding="utf-8")
    return papers_path, venues_path


def paper(pid, year=2010, citations=(), venue=None, title=None, authors=("A. Author",)):
    return {
        "id": pid,
        "title": title or f"Paper {pid}",
        "year": year,
        "venue": venue,
        "authors": list(authors),
        "abstract": None,
        "citations": [{"id": t, "mentions": m} for t, m in citations],
    }
