"""Report emission: fixed-column CSV and JSON with 6-significant-digit floats."""

from __future__ import annotations

import json
from typing import Any

UNIFORMITY_COLUMNS = ["family", "prime", "buckets", "hashes", "run",
                      "statistic", "dof", "p_value", "passed"]
MINHASH_UNIFORMITY_COLUMNS = ["family", "prime", "keys", "hashes", "run",
                              "statistic", "dof", "p_value", "passed"]
ESTIMATE_COLUMNS = ["family", "hash_count", "prime", "pairs", "seeds",
                    "mae_mean", "mae_std"]
BENCH_COLUMNS = ["rep", "random_seconds", "iterative_seconds"]


def fmt(value) -> str:
    """One CSV cell: floats as 6 significant digits, bools lowercase."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def render_csv(header: list[str], rows: list[list[Any]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _round_floats(obj):
    if isinstance(obj, float):
        return float(f"{obj:.6g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def render_json(payload: dict) -> str:
    return json.dumps(_round_floats(payload), indent=2) + "\n"


def uniformity_rows(family: str, config, reports, columns=UNIFORMITY_COLUMNS) -> list[list[Any]]:
    cells = config.buckets if "buckets" in columns else config.keys
    return [[family, config.prime, cells, config.hashes, run,
             r.statistic, r.dof, r.p_value, r.passed]
            for run, r in enumerate(reports)]


def uniformity_payload(command: str, results: dict) -> dict:
    """results: family -> (ExperimentSummary, reports)."""
    out: dict[str, Any] = {"command": command, "families": {}}
    for family, (summary, reports) in results.items():
        cfg = summary.config
        out["families"][family] = {
            "config": {
                "prime": cfg.prime, "hashes": cfg.hashes,
                "buckets": cfg.buckets, "keys": cfg.keys, "alpha": cfg.alpha,
            },
            "runs": summary.runs,
            "pass_fraction": summary.pass_fraction,
            "reports": [
                {"run": i, "statistic": r.statistic, "dof": r.dof,
                 "p_value": r.p_value, "passed": r.passed}
                for i, r in enumerate(reports)
            ],
        }
    return out


def estimate_rows(rows, prime: int, pairs: int, seeds: int) -> list[list[Any]]:
    return [[r.family, r.hash_count, prime, pairs, seeds, r.mae_mean, r.mae_std]
            for r in rows]


def estimate_payload(rows, prime: int, pairs: int, seeds: int, mode: str) -> dict:
    return {
        "command": "estimate",
        "prime": prime,
        "pairs": pairs,
        "seeds": seeds,
        "pair_mode": mode,
        "rows": [
            {"family": r.family, "hash_count": r.hash_count,
             "mae_mean": r.mae_mean, "mae_std": r.mae_std}
            for r in rows
        ],
    }


def bench_rows(report) -> list[list[Any]]:
    return [[rep, rs, its]
            for rep, (rs, its) in enumerate(zip(report.random_seconds,
                                                report.iterative_seconds))]


def bench_payload(report) -> dict:
    return {
        "command": "bench",
        "prime": report.prime,
        "hashes": report.hashes,
        "documents": report.documents,
        "repetitions": len(report.random_seconds),
        "random_seconds": list(report.random_seconds),
        "iterative_seconds": list(report.iterative_seconds),
        "random_mean": report.random_mean,
        "random_std": report.random_std,
        "iterative_mean": report.iterative_mean,
        "iterative_std": report.iterative_std,
        "speedup": report.speedup,
        "t_statistic": report.t_statistic,
        "p_value": report.p_value,
    }
