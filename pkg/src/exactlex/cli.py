"""Command-line surface: test, assoc, count, zipf, simulate, and tea subcommands.

Exit codes: 0 success, 1 data/domain error (one-line diagnostic on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .assoc import AssociationRecord, association_scan
from .corpus import BigramCounts, TokenizerConfig, count_text, read_text, zipf_summary
from .errors import ExactLexError
from .report import compute_all, render_freq_report
from .simulate import MultinomialModel, calibration
from .tables import make_table

TEA_TABLES = [(4, 0, 0, 4), (3, 1, 1, 3), (1, 3, 3, 1), (0, 4, 4, 0)]

ASSOC_TSV_COLUMNS = [
    "word", "n11", "m11",
    "exact_left", "exact_right", "exact_two", "exact_rank",
    "g2_p", "g2_rank", "x2_p", "x2_rank", "t_p", "t_rank",
]


def _bool_flag(value: str) -> bool:
    lowered = value.lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactlex",
        description="Exact and asymptotic association tests for word pairs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_tokenizer_flags(p):
        p.add_argument("--lowercase", type=_bool_flag, default=True)
        p.add_argument("--strip-punct", type=_bool_flag, default=True)
        p.add_argument("--sentence-reset", type=_bool_flag, default=False)

    def add_inputs(p):
        p.add_argument("--input", nargs="+", default=["-"],
                       help="text file paths, or - for stdin")

    p_test = sub.add_parser("test", help="run every test on one explicit table")
    for cell in ("n11", "n12", "n21", "n22"):
        p_test.add_argument(f"--{cell}", type=int, required=True)
    p_test.add_argument("--format", choices=["report", "json"], default="report")

    p_assoc = sub.add_parser("assoc", help="ranked association scan over a corpus")
    add_inputs(p_assoc)
    add_tokenizer_flags(p_assoc)
    slot = p_assoc.add_mutually_exclusive_group(required=True)
    slot.add_argument("--second", help="fixed second word; scan varies the first")
    slot.add_argument("--first", help="fixed first word; scan varies the second")
    p_assoc.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p_assoc.add_argument("--min-count", type=int, default=1)

    p_count = sub.add_parser("count", help="word or bigram frequency table (TSV)")
    add_inputs(p_count)
    add_tokenizer_flags(p_count)
    p_count.add_argument("--bigrams", action="store_true",
                         help="count adjacent pairs instead of single words")

    p_zipf = sub.add_parser("zipf", help="frequency-of-frequency summary")
    add_inputs(p_zipf)
    add_tokenizer_flags(p_zipf)
    p_zipf.add_argument("--format", choices=["json", "tsv"], default="json")

    p_sim = sub.add_parser("simulate", help="Monte Carlo calibration of the tests")
    p_sim.add_argument("--p-row", type=float)
    p_sim.add_argument("--p-col", type=float)
    p_sim.add_argument("--p11", type=float)
    p_sim.add_argument("--p12", type=float)
    p_sim.add_argument("--p21", type=float)
    p_sim.add_argument("--p22", type=float)
    p_sim.add_argument("--n", type=int, required=True)
    p_sim.add_argument("--trials", type=int, required=True)
    p_sim.add_argument("--alpha", type=float, action="append", default=None)
    p_sim.add_argument("--seed", type=int, default=0)

    sub.add_parser("tea", help="the built-in tea-tasting demo tables")
    return parser


def _tokenizer_config(args) -> TokenizerConfig:
    return TokenizerConfig(
        lowercase=args.lowercase,
        strip_punctuation=args.strip_punct,
        sentence_reset=args.sentence_reset,
    )


def _read_corpus(args) -> tuple[Counter, BigramCounts]:
    config = _tokenizer_config(args)
    words: Counter = Counter()
    bigrams = BigramCounts()
    for path in args.input:
        shard_words, shard_bigrams = count_text(read_text(path), config)
        words.update(shard_words)
        bigrams = bigrams.merge(shard_bigrams)
    return words, bigrams


def test_result_to_json(results: dict) -> dict:
    """Full-precision JSON view of one table's test battery."""
    table = results["table"]
    fisher = results["fisher"]
    payload: dict = {
        "table": table.to_dict(),
        "fisher": {
            "left_p": fisher.left_p,
            "right_p": fisher.right_p,
            "two_sided_p": fisher.two_sided_p,
            "point_p": fisher.point_p,
        },
        "tests": {},
    }
    for name in ("pearson", "g2", "yates", "mantel_haenszel", "t_test"):
        result = results[name]
        payload["tests"][name] = None if result is None else {
            "statistic": result.statistic,
            "df": result.df,
            "p_value": result.p_value,
        }
    measures = results["measures"]
    payload["measures"] = None if measures is None else {
        "phi": measures.phi,
        "contingency_coefficient": measures.contingency_coefficient,
        "cramers_v": measures.cramers_v,
    }
    payload["small_expected_warning"] = {
        "triggered": results["warning"].triggered,
        "percent": results["warning"].percent,
    }
    return payload


def parse_test_json(text: str) -> dict:
    """Inverse of the `test --format json` emission."""
    return json.loads(text)


def _record_row(record: AssociationRecord) -> list[str]:
    def prob(p: float | None) -> str:
        return "" if p is None else f"{p:.4f}"

    def rank(r: int | None) -> str:
        return "" if r is None else str(r)

    return [
        record.word, str(record.n11), f"{record.m11:.2f}",
        prob(record.exact_left_p), prob(record.exact_right_p),
        prob(record.exact_two_p), rank(record.exact_rank),
        prob(record.g2_p), rank(record.g2_rank),
        prob(record.x2_p), rank(record.x2_rank),
        prob(record.t_p), rank(record.t_rank),
    ]


def records_to_tsv(records: list[AssociationRecord]) -> str:
    lines = ["\t".join(ASSOC_TSV_COLUMNS)]
    lines += ["\t".join(_record_row(r)) for r in records]
    return "\n".join(lines) + "\n"


def records_to_json(records: list[AssociationRecord]) -> str:
    payload = [
        {
            "word": r.word, "n11": r.n11, "m11": r.m11,
            "exact_left_p": r.exact_left_p, "exact_right_p": r.exact_right_p,
            "exact_two_p": r.exact_two_p, "point_p": r.point_p,
            "g2_p": r.g2_p, "x2_p": r.x2_p, "t_p": r.t_p,
            "exact_rank": r.exact_rank, "g2_rank": r.g2_rank,
            "x2_rank": r.x2_rank, "t_rank": r.t_rank,
            "asym_note": r.asym_note, "t_note": r.t_note,
        }
        for r in records
    ]
    return json.dumps(payload, indent=2) + "\n"


def _cmd_test(args, out) -> int:
    table = make_table(args.n11, args.n12, args.n21, args.n22)
    results = compute_all(table)
    if args.format == "json":
        out.write(json.dumps(test_result_to_json(results), indent=2) + "\n")
    else:
        out.write(render_freq_report(results))
    return 0


def _cmd_assoc(args, out) -> int:
    _, bigrams = _read_corpus(args)
    records = association_scan(
        bigrams,
        fixed_second=args.second,
        fixed_first=args.first,
        min_count=args.min_count,
    )
    if args.format == "json":
        out.write(records_to_json(records))
    else:
        out.write(records_to_tsv(records))
    return 0


def _cmd_count(args, out) -> int:
    words, bigrams = _read_corpus(args)
    if args.bigrams:
        items = [(" ".join(pair), c) for pair, c in bigrams.pair_counts.items()]
    else:
        items = list(words.items())
    items.sort(key=lambda kv: (-kv[1], kv[0]))
    for name, count in items:
        out.write(f"{name}\t{count}\n")
    return 0


def _cmd_zipf(args, out) -> int:
    words, bigrams = _read_corpus(args)
    summary = zipf_summary(bigrams, words)
    if args.format == "tsv":
        out.write("kind\tfrequency\ttypes\n")
        for freq, types in summary.word_freq_of_freq.items():
            out.write(f"word\t{freq}\t{types}\n")
        for freq, types in summary.bigram_freq_of_freq.items():
            out.write(f"bigram\t{freq}\t{types}\n")
    else:
        out.write(json.dumps({
            "token_count": summary.token_count,
            "distinct_words": summary.distinct_words,
            "distinct_bigrams": summary.distinct_bigrams,
            "hapax_word_pct": summary.hapax_word_pct,
            "word_le5_pct": summary.word_le5_pct,
            "hapax_bigram_pct": summary.hapax_bigram_pct,
            "bigram_le5_pct": summary.bigram_le5_pct,
            "word_freq_of_freq": {str(k): v for k, v in summary.word_freq_of_freq.items()},
            "bigram_freq_of_freq": {str(k): v for k, v in summary.bigram_freq_of_freq.items()},
        }, indent=2) + "\n")
    return 0


def _cmd_simulate(args, out) -> int:
    explicit = [args.p11, args.p12, args.p21, args.p22]
    if all(p is not None for p in explicit):
        model = MultinomialModel(*explicit)
    elif args.p_row is not None and args.p_col is not None:
        model = MultinomialModel.independent(args.p_row, args.p_col)
    else:
        raise ExactLexError(
            "simulate needs either --p-row and --p-col, or all of --p11..--p22"
        )
    alphas = tuple(args.alpha) if args.alpha else (0.01, 0.05, 0.10)
    report = calibration(model, args.n, args.trials, alphas=alphas, seed=args.seed)
    out.write(json.dumps(report.to_dict(), indent=2) + "\n")
    return 0


def _cmd_tea(args, out) -> int:
    for cells in TEA_TABLES:
        results = compute_all(make_table(*cells))
        out.write(render_freq_report(results))
        out.write("\n")
    return 0


def run_command(argv: list[str], out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    handlers = {
        "test": _cmd_test,
        "assoc": _cmd_assoc,
        "count": _cmd_count,
        "zipf": _cmd_zipf,
        "simulate": _cmd_simulate,
        "tea": _cmd_tea,
    }
    try:
        return handlers[args.subcommand](args, out)
    except (ExactLexError, OSError) as exc:
        print(f"exactlex: {exc}", file=sys.stderr)
        return 1


def main() -> int:
    return run_command(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
