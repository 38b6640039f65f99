"""
Scoring the pipeline against survey reference lists
===================================================

Each benchmark entry is a survey: its key phrases, its seed papers, and
its reference list with in-survey occurrence counts. The harness replays
every query against the corpus as it stood the year the survey appeared,
then scores the generated list against the references the survey actually
cited.
"""

import tempfile
from pathlib import Path

from readpath import AblationMode, EvalOptions, load_benchmark, load_corpus, run_eval, write_report

FIXTURES = Path(__file__).parent.parent / "fixtures"

graph, venues, _ = load_corpus(FIXTURES / "corpus.jsonl", FIXTURES / "venues.json")
entries = load_benchmark(FIXTURES / "benchmark.jsonl")
print(f"{len(entries)} surveys: {', '.join(e.survey_id for e in entries)}")

# Three variants: the full pipeline, seeds kept as terminals, and the
# union of both. Level 1 counts every reference, level 2 only those the
# survey cited at least twice.
options = EvalOptions(
    ks=(20, 30),
    modes=(AblationMode.NEWST, AblationMode.NEWST_W, AblationMode.NEWST_U),
    levels=(1, 2),
    seed_counts=(30,),
)
result = run_eval(entries, graph, venues, options=options)

print(f"\n{'mode':10s} {'k':>3s} {'level':>5s} {'precision':>9s} {'recall':>7s} {'f1':>7s}")
for row in result.report["aggregates"]:
    print(f"{row['mode']:10s} {row['k']:3d} {row['level']:5d} "
          f"{row['precision']:9.4f} {row['recall']:7.4f} {row['f1']:7.4f}")

# Reports are deterministic: the JSON and CSV bytes never change between
# runs on the same inputs; wall-clock timings go to a sidecar file.
out_dir = Path(tempfile.mkdtemp(prefix="readpath-report-"))
paths = write_report(result, out_dir)
print(f"\nreport files: {paths['json']}")
print(f"              {paths['csv']}")
print(f"              {paths['timings']}")
