"""Command-line front end: extract / evaluate / compare subcommands."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import data as bundled
from .corpus import IngestError, InsufficientTextError, ingest, load_run, save_run
from .cvalue import CValueExtractor
from .evaluation import GoldList, render_report, run_protocol
from .linguistics import StopList, load_lexicon
from .rake import RakeExtractor
from .rent import ConfigError, PatternError, RentExtractor, WeightConfig, load_patterns
from .tfidf_np import TfidfExtractor

METHODS = ("rake", "cvalue", "tfidf", "rent")


def _add_common(parser):
    parser.add_argument("--input", nargs="+", required=True,
                        help="text files and/or directories of .txt files")
    parser.add_argument("--stoplist", help="stop-word file (default: bundled)")
    parser.add_argument("--lexicon", help="POS lexicon file (default: bundled)")
    parser.add_argument("--page-size", type=int, default=400,
                        help="tokens per page (default 400)")
    parser.add_argument("--ratio", type=float, default=1 / 3,
                        help="rake: fraction of candidates kept")
    parser.add_argument("--threshold", type=float, default=0.0,
                        help="cvalue/tfidf: minimum score kept")
    parser.add_argument("--patterns", help="rent: seed-pattern file (default: bundled)")
    parser.add_argument("--weight-a", type=float, default=1.0,
                        help="rent: structural weight coefficient")
    parser.add_argument("--weight-b", type=float, default=0.1,
                        help="rent: frequency weight coefficient")


def make_extractor(name: str, args):
    stops = StopList.from_file(args.stoplist or bundled.stoplist_path())
    lexicon = load_lexicon(args.lexicon or bundled.lexicon_path())
    if name == "rake":
        return RakeExtractor(stops, ratio=args.ratio)
    if name == "cvalue":
        return CValueExtractor(lexicon, stops, threshold=args.threshold)
    if name == "tfidf":
        return TfidfExtractor(lexicon, stops, threshold=args.threshold)
    if name == "rent":
        patterns = load_patterns(args.patterns or bundled.patterns_path())
        return RentExtractor(lexicon, stops, patterns,
                             WeightConfig(a=args.weight_a, b=args.weight_b))
    raise ConfigError(f"unknown method: {name}")


def cmd_extract(args) -> int:
    corpus = ingest(args.input, page_size=args.page_size)
    extractor = make_extractor(args.method, args)
    terms = extractor.extract(corpus)
    if args.output:
        save_run(args.output, corpus, extractor.name, extractor.config(), terms)
    top = terms[:args.top] if args.top else terms
    width = max((len(t.term) for t in top), default=4)
    print(f"{'term'.ljust(width)}  score")
    for t in top:
        print(f"{t.term.ljust(width)}  {t.score:.4f}")
    return 0


def cmd_evaluate(args) -> int:
    if args.methods.strip().lower() == "all":
        methods = list(METHODS)
    else:
        methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in METHODS:
            raise ConfigError(f"unknown method: {m}")
    gold_file = Path(args.gold)
    if not gold_file.is_file():
        raise ConfigError(f"gold file not found: {gold_file}")
    gold = GoldList.from_file(gold_file)
    corpus = ingest(args.input, page_size=args.page_size)
    rows_by_tool = {}
    for m in methods:
        extractor = make_extractor(m, args)
        rows_by_tool[m] = run_protocol(corpus, extractor, gold,
                                       steps=args.steps,
                                       pages_per_step=args.pages_per_step)
    report = render_report(rows_by_tool, fmt=args.format)
    if args.output:
        Path(args.output).write_text(report, encoding="utf-8")
    else:
        sys.stdout.write(report)
    return 0


def cmd_compare(args) -> int:
    runs = [load_run(p) for p in args.runs]
    hashes = {r["corpus_hash"] for r in runs}
    if len(hashes) > 1:
        print("WARNING: runs come from different corpora; "
              "scores are not directly comparable", file=sys.stderr)
    depth = args.top or max(len(r["terms"]) for r in runs)
    names = [f"{r['extractor']}[{i}]" for i, r in enumerate(runs, 1)]
    header = ["rank"] + names
    table = [header]
    for rank_i in range(depth):
        row = [str(rank_i + 1)]
        for r in runs:
            if rank_i < len(r["terms"]):
                entry = r["terms"][rank_i]
                row.append(f"{entry['term']} ({entry['score']:.2f})")
            else:
                row.append("-")
        table.append(row)
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in table]
    text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="termforge",
        description="terminology extraction (rake / cvalue / tfidf / rent) "
                    "and cumulative precision-recall evaluation")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ext = sub.add_parser("extract", help="run one extractor on a corpus")
    p_ext.add_argument("--method", required=True, choices=METHODS)
    _add_common(p_ext)
    p_ext.add_argument("--top", type=int, default=30,
                       help="terms shown in the table (0 = all)")
    p_ext.add_argument("--output", help="write the run as JSON here")
    p_ext.set_defaults(func=cmd_extract)

    p_eval = sub.add_parser("evaluate",
                            help="cumulative precision/recall against a gold list")
    p_eval.add_argument("--methods", required=True,
                        help="comma-separated subset of rake,cvalue,tfidf,rent or 'all'")
    _add_common(p_eval)
    p_eval.add_argument("--gold", required=True, help="gold term list, one per line")
    p_eval.add_argument("--steps", type=int, default=10)
    p_eval.add_argument("--pages-per-step", type=int, default=5)
    p_eval.add_argument("--format", choices=("csv", "text"), default="csv")
    p_eval.add_argument("--output", help="report file (default: stdout)")
    p_eval.set_defaults(func=cmd_evaluate)

    p_cmp = sub.add_parser("compare", help="side-by-side view of persisted runs")
    p_cmp.add_argument("runs", nargs="+", help="two or more run JSON files")
    p_cmp.add_argument("--top", type=int, default=0, help="rows shown (0 = all)")
    p_cmp.add_argument("--output", help="write the table here instead of stdout")
    p_cmp.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "command", None) == "compare" and len(args.runs) < 2:
        print("error: compare needs at least two run files", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ConfigError, PatternError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IngestError, InsufficientTextError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
