"""Command line front end: ingest, query, eval, and serve subcommands.

Every pipeline failure exits nonzero with a single diagnostic line on
stderr; tracebacks are reserved for genuine bugs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import ConfigError, EngineConfig
from .corpus import CorpusError, load_corpus
from .engine import Engine, NoSeedsError
from .evalbench import (
    EvalError,
    EvalOptions,
    load_benchmark,
    parse_modes,
    run_eval,
    write_report,
)
from .pathgen import PathError
from .scoring import ScoringError
from .seeding import SeedingError, TerminalMode
from .steiner import SteinerError

_PIPELINE_ERRORS = (
    ConfigError,
    CorpusError,
    ScoringError,
    SeedingError,
    SteinerError,
    PathError,
    EvalError,
    NoSeedsError,
    OSError,
    ValueError,
)


def _parse_int_list(text: str, label: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ValueError(f"{label} must be a comma-separated list of integers") from None
    if not values:
        raise ValueError(f"{label} must not be empty")
    return values


def _cmd_ingest(args: argparse.Namespace) -> int:
    graph, _, report = load_corpus(args.papers, args.venues)
    print(report.summary())
    if args.cache:
        out = Path(args.cache)
        with open(out, "w", encoding="utf-8") as fh:
            for pid in sorted(graph.papers):
                rec = graph.record(pid)
                doc = {
                    "id": rec.id,
                    "title": rec.title,
                    "year": rec.year,
                    "venue": rec.venue,
                    "authors": list(rec.authors),
                    "abstract": rec.abstract,
                    "citations": [
                        {"id": c.target, "mentions": c.mentions}
                        for c in sorted(rec.citations_out, key=lambda c: c.target)
                    ],
                }
                fh.write(json.dumps(doc, sort_keys=True, ensure_ascii=False) + "\n")
        print(f"normalized corpus cached to {out}")
    return 0


def _cmd_query(args: argparse.Namespace) -> int:
    engine = Engine.from_config_file(args.config)
    mode = TerminalMode(args.mode) if args.mode else None
    result = engine.run_query(
        list(args.phrases),
        k_seeds=args.k_seeds,
        k_output=args.k,
        cutoff_year=args.cutoff_year,
        terminal_mode=mode,
    )
    payload = json.dumps(result.to_dict(engine.graph), indent=2, ensure_ascii=False)
    if args.out:
        Path(args.out).write_text(payload + "\n", encoding="utf-8")
        print(f"result written to {args.out}")
    else:
        print(payload)
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    config = EngineConfig.from_file(args.config)
    graph, venues, _ = load_corpus(config.papers_path, config.venues_path)
    entries = load_benchmark(args.benchmark)
    options = EvalOptions(
        ks=_parse_int_list(args.K, "--K"),
        modes=tuple(parse_modes(args.modes.split(","))),
        levels=_parse_int_list(args.levels, "--levels"),
        seed_counts=_parse_int_list(args.seed_counts, "--seed-counts"),
        expansion_order=config.query.expansion_order,
        expansion_direction=config.query.expansion_direction,
        cooccurrence_threshold=config.query.cooccurrence_threshold,
        missing_venue_score=config.query.missing_venue_score,
    )
    result = run_eval(entries, graph, venues, params=config.params, options=options)
    paths = write_report(result, args.out)
    for row in result.report["aggregates"]:
        print(
            f"seed_count={row['seed_count']} mode={row['mode']} k={row['k']} "
            f"L{row['level']}: P={row['precision']:.4f} R={row['recall']:.4f} "
            f"F1={row['f1']:.4f} (n={row['n_surveys']})"
        )
    print(f"report written to {paths['json']}, {paths['csv']}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import serve

    engine = Engine.from_config_file(args.config)
    host = port = None
    if args.bind:
        head, sep, tail = args.bind.rpartition(":")
        if not sep or not head or not tail.isdigit():
            raise ValueError(f"--bind must look like host:port, got {args.bind!r}")
        host, port = head, int(tail)
    serve(engine, host=host, port=port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="readpath",
        description="Generate and evaluate reading paths over a citation corpus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="validate a corpus and report load statistics")
    p_ingest.add_argument("--papers", required=True, help="papers JSONL file")
    p_ingest.add_argument("--venues", required=True, help="venue score JSON file")
    p_ingest.add_argument("--cache", help="write a normalized copy of the corpus here")
    p_ingest.set_defaults(func=_cmd_ingest)

    p_query = sub.add_parser("query", help="run one query and emit the result JSON")
    p_query.add_argument("--config", required=True, help="engine config JSON")
    p_query.add_argument("--phrases", nargs="+", required=True, help="query key phrases")
    p_query.add_argument("--k", type=int, default=None, help="number of output papers")
    p_query.add_argument("--k-seeds", type=int, default=None, help="seed list cap")
    p_query.add_argument("--cutoff-year", type=int, default=None, help="ignore later papers")
    p_query.add_argument(
        "--mode",
        choices=[m.value for m in TerminalMode],
        default=None,
        help="terminal selection mode",
    )
    p_query.add_argument("--out", help="write the result JSON here instead of stdout")
    p_query.set_defaults(func=_cmd_query)

    p_eval = sub.add_parser("eval", help="run the benchmark harness")
    p_eval.add_argument("--config", required=True, help="engine config JSON")
    p_eval.add_argument("--benchmark", required=True, help="benchmark JSONL file")
    p_eval.add_argument("--modes", default="NEWST", help="comma-separated ablation modes")
    p_eval.add_argument("--K", default="20,30,40,50", help="comma-separated top-K values")
    p_eval.add_argument("--levels", default="1,2,3", help="comma-separated label levels")
    p_eval.add_argument("--seed-counts", default="30", help="comma-separated seed counts")
    p_eval.add_argument("--out", default="eval_out", help="report output directory")
    p_eval.set_defaults(func=_cmd_eval)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--config", required=True, help="engine config JSON")
    p_serve.add_argument("--bind", help="host:port override")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _PIPELINE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
