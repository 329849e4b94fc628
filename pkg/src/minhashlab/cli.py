"""Command-line driver for the uniformity, estimation, and timing experiments.

Subcommands: uniformity, minhash-uniformity, estimate, bench, sign.
Reports go to --out (or stdout) as CSV or JSON; writing a report to a file
also renders a PNG figure next to it unless --no-plot is given.
Configuration errors exit nonzero with a diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, corpus, plots, report, stats
from .families import FAMILY_KINDS, make_family
from .minhash import signature, write_signatures_binary, write_signatures_text
from .modmath import next_prime


def _families(choice: str) -> tuple[str, ...]:
    return FAMILY_KINDS if choice == "both" else (choice,)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _say(message: str, out: str | None) -> None:
    # human summary; keep stdout clean when the report itself goes there
    stream = sys.stdout if out is not None else sys.stderr
    stream.write(message + "\n")


def _figure_path(out: str) -> Path:
    p = Path(out)
    return p.with_suffix(".png") if p.suffix else p.with_name(p.name + ".png")


def _add_common(sub, *, prime_default=None):
    sub.add_argument("--family", choices=[*FAMILY_KINDS, "both"], default="both",
                     help="hash family kind to exercise (default: both)")
    sub.add_argument("--prime", type=int, default=prime_default,
                     help="hash modulus; must be prime"
                          + ("" if prime_default else " (default: chosen from the data)"))
    sub.add_argument("--seed", type=int, default=0, help="master seed (default: 0)")
    sub.add_argument("--out", type=str, default=None,
                     help="report file; stdout when omitted")
    sub.add_argument("--format", choices=["csv", "json"], default="csv",
                     help="report format (default: csv)")
    sub.add_argument("--no-plot", action="store_true",
                     help="skip the PNG figure that normally accompanies --out")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minhashlab",
        description="MinHash hash-family validation and benchmarking experiments.")
    subs = parser.add_subparsers(dest="command", required=True)

    uni = subs.add_parser("uniformity", help="chi-square bucket-uniformity runs")
    _add_common(uni, prime_default=7757)
    uni.add_argument("--buckets", type=int, default=100, help="bucket count (default: 100)")
    uni.add_argument("--hashes", type=int, default=1000, help="hash functions per run (default: 1000)")
    uni.add_argument("--runs", type=int, default=100, help="independent runs (default: 100)")
    uni.add_argument("--alpha", type=float, default=0.05, help="significance level (default: 0.05)")

    mhu = subs.add_parser("minhash-uniformity", help="chi-square argmin-choice uniformity runs")
    _add_common(mhu, prime_default=7757)
    mhu.add_argument("--keys", type=int, default=100, help="distinct keys per run (default: 100)")
    mhu.add_argument("--hashes", type=int, default=1000, help="hash functions per run (default: 1000)")
    mhu.add_argument("--runs", type=int, default=100, help="independent runs (default: 100)")
    mhu.add_argument("--alpha", type=float, default=0.05, help="significance level (default: 0.05)")

    est = subs.add_parser("estimate", help="Jaccard-estimation MAE per hash count and family")
    _add_common(est)
    est.add_argument("--corpus", type=str, default=None,
                     help="one-document-per-line text file; synthetic pairs when omitted")
    est.add_argument("--hash-counts", type=str, default="5,10,15",
                     help="comma-separated signature sizes (default: 5,10,15)")
    est.add_argument("--runs", type=int, default=20,
                     help="family seeds per configuration (default: 20)")
    est.add_argument("--pairs", type=int, default=500,
                     help="synthetic pair count (default: 500)")
    est.add_argument("--pair-size", type=int, default=50,
                     help="synthetic set size scale (default: 50)")
    est.add_argument("--j-low", type=float, default=0.1,
                     help="synthetic Jaccard range low end (default: 0.1)")
    est.add_argument("--j-high", type=float, default=0.9,
                     help="synthetic Jaccard range high end (default: 0.9)")

    ben = subs.add_parser("bench", help="paired signing-time comparison of the two families")
    _add_common(ben)
    ben.add_argument("--corpus", type=str, default=None,
                     help="one-document-per-line text file; synthetic corpus when omitted")
    ben.add_argument("--hashes", type=int, default=100_000,
                     help="hash functions per family (default: 100000)")
    ben.add_argument("--runs", type=int, default=10,
                     help="timed repetitions (default: 10)")
    ben.add_argument("--docs", type=int, default=500,
                     help="synthetic corpus size (default: 500)")
    ben.add_argument("--doc-size", type=int, default=100,
                     help="synthetic features per document (default: 100)")

    sgn = subs.add_parser("sign", help="emit signatures for a corpus file")
    sgn.add_argument("--corpus", type=str, required=True,
                     help="one-document-per-line text file")
    sgn.add_argument("--family", choices=list(FAMILY_KINDS), required=True,
                     help="hash family kind (single kind, not 'both')")
    sgn.add_argument("--hashes", type=int, default=128,
                     help="signature length (default: 128)")
    sgn.add_argument("--prime", type=int, default=None,
                     help="requested modulus floor; actual prime is "
                          "next_prime(max(vocabulary, requested))")
    sgn.add_argument("--seed", type=int, default=0, help="family seed (default: 0)")
    sgn.add_argument("--out", type=str, required=True, help="signature file to write")
    sgn.add_argument("--format", choices=["text", "binary"], default="text",
                     help="signature file format (default: text)")
    return parser


def _cmd_uniformity(args, test: str) -> int:
    cells = args.buckets if test == "bucket" else args.keys
    results = {}
    for family in _families(args.family):
        summary, reports = stats.run_uniformity(
            test, family, args.prime, cells, args.hashes, args.runs,
            args.seed, args.alpha)
        results[family] = (summary, reports)
        _say(f"{family}: pass_fraction={summary.pass_fraction:.6g} "
             f"({sum(r.passed for r in reports)}/{summary.runs} runs)", args.out)
    command = "uniformity" if test == "bucket" else "minhash-uniformity"
    if args.format == "csv":
        columns = (report.UNIFORMITY_COLUMNS if test == "bucket"
                   else report.MINHASH_UNIFORMITY_COLUMNS)
        rows = []
        for family, (summary, reps) in results.items():
            rows.extend(report.uniformity_rows(family, summary.config, reps, columns))
        _emit(report.render_csv(columns, rows), args.out)
    else:
        _emit(report.render_json(report.uniformity_payload(command, results)), args.out)
    if args.out and not args.no_plot:
        title = ("Bucket uniformity" if test == "bucket" else "Argmin-choice uniformity")
        plots.save_uniformity_figure(results, _figure_path(args.out), title)
    return 0


def _cmd_estimate(args) -> int:
    counts = [int(v) for v in args.hash_counts.split(",") if v.strip()]
    if not counts:
        raise ValueError("--hash-counts must name at least one signature size")
    if args.corpus is not None:
        data = corpus.build_corpus(args.corpus)
        pairs, mode = bench.corpus_pairs(data.documents, args.seed)
    else:
        pairs = bench.synth_pair_batch(args.pairs, args.pair_size, args.seed,
                                       args.j_low, args.j_high)
        mode = "synthetic"
    max_id = max(max(a.max_id, b.max_id) for a, b in pairs)
    prime = bench.choose_prime(max_id, max(counts), args.prime)
    seeds = [args.seed + i for i in range(args.runs)]
    wanted = _families(args.family)
    rows = [r for r in bench.run_estimation(pairs, counts, seeds, prime=prime)
            if r.family in wanted]
    for r in rows:
        _say(f"{r.family} hashes={r.hash_count}: MAE={r.mae_mean:.6g} +- {r.mae_std:.6g}",
             args.out)
    if args.format == "csv":
        _emit(report.render_csv(
            report.ESTIMATE_COLUMNS,
            report.estimate_rows(rows, prime, len(pairs), len(seeds))), args.out)
    else:
        _emit(report.render_json(
            report.estimate_payload(rows, prime, len(pairs), len(seeds), mode)), args.out)
    if args.out and not args.no_plot:
        plots.save_estimate_figure(rows, _figure_path(args.out))
    return 0


def _cmd_bench(args) -> int:
    if args.family != "both":
        raise ValueError("bench compares the two families; --family must stay 'both'")
    if args.corpus is not None:
        data = corpus.build_corpus(args.corpus)
        docs = [d for d in data.documents if len(d) > 0]
    else:
        docs = corpus.synth_corpus(args.docs, args.doc_size, args.seed)
    result = bench.run_timing(docs, args.hashes, args.runs, args.seed, prime=args.prime)
    _say(f"random:    {result.random_mean:.6g} +- {result.random_std:.6g} s", args.out)
    _say(f"iterative: {result.iterative_mean:.6g} +- {result.iterative_std:.6g} s", args.out)
    _say(f"speedup:   {result.speedup:.6g}x (t={result.t_statistic:.6g}, "
         f"p={result.p_value:.6g})", args.out)
    if args.format == "csv":
        _emit(report.render_csv(report.BENCH_COLUMNS, report.bench_rows(result)), args.out)
    else:
        _emit(report.render_json(report.bench_payload(result)), args.out)
    if args.out and not args.no_plot:
        plots.save_bench_figure(result, _figure_path(args.out))
    return 0


def _cmd_sign(args) -> int:
    data = corpus.build_corpus(args.corpus)
    vocab_size = len(data.vocabulary)
    if vocab_size == 0:
        raise ValueError(f"corpus {args.corpus} holds no tokens to sign")
    if args.prime is not None:
        prime = next_prime(max(vocab_size, args.prime, 2))
    else:
        prime = bench.choose_prime(vocab_size - 1, args.hashes)
    family = make_family(args.family, args.seed, args.hashes, prime)
    records = []
    skipped = 0
    for doc_id, doc in enumerate(data.documents):
        if len(doc) == 0:
            skipped += 1
            continue
        records.append((doc_id, signature(doc, family)))
    if skipped:
        sys.stderr.write(f"skipped {skipped} empty document(s)\n")
    if args.format == "text":
        write_signatures_text(args.out, records)
    else:
        write_signatures_binary(args.out, records)
    sys.stdout.write(f"signed {len(records)} document(s) with prime {prime} "
                     f"into {args.out}\n")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "uniformity":
            return _cmd_uniformity(args, "bucket")
        if args.command == "minhash-uniformity":
            return _cmd_uniformity(args, "minhash")
        if args.command == "estimate":
            return _cmd_estimate(args)
        if args.command == "bench":
            return _cmd_bench(args)
        if args.command == "sign":
            return _cmd_sign(args)
        raise ValueError(f"unknown command {args.command!r}")
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
