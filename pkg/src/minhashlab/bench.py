"""Timing harness and estimation-error experiment for the two families.

Timing is single-threaded wall clock over "generate the family, then sign
every document".  Each repetition builds fresh families for both kinds
from the same derived seed and signs the identical document list, so the
per-repetition pair of times is directly comparable.  One untimed warm-up
repetition runs first (it also absorbs JIT compilation of the signature
kernels).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from .corpus import synth_pair
from .families import derive_seed, make_family
from .minhash import FeatureSet, exact_jaccard, signature
from .modmath import next_prime
from .stats import mean_absolute_error, paired_t_test

FAMILY_ORDER = ("random", "iterative")


@dataclass(frozen=True)
class BenchReport:
    """Paired wall-clock times (seconds) plus summary statistics."""

    random_seconds: tuple[float, ...]
    iterative_seconds: tuple[float, ...]
    random_mean: float
    random_std: float
    iterative_mean: float
    iterative_std: float
    speedup: float
    t_statistic: float
    p_value: float
    prime: int
    hashes: int
    documents: int

    @classmethod
    def from_times(cls, random_seconds, iterative_seconds, prime, hashes, documents):
        rnd = np.asarray(random_seconds, dtype=np.float64)
        itr = np.asarray(iterative_seconds, dtype=np.float64)
        t, p = paired_t_test(rnd, itr)
        return cls(
            random_seconds=tuple(float(v) for v in rnd),
            iterative_seconds=tuple(float(v) for v in itr),
            random_mean=float(rnd.mean()),
            random_std=float(rnd.std(ddof=1)),
            iterative_mean=float(itr.mean()),
            iterative_std=float(itr.std(ddof=1)),
            speedup=float(rnd.mean() / itr.mean()),
            t_statistic=t,
            p_value=p,
            prime=prime,
            hashes=hashes,
            documents=documents,
        )


def choose_prime(max_id: int, hashes: int, requested: int | None = None) -> int:
    """Smallest usable modulus: above every feature id and with headroom
    for an iterative family of the given size, honoring a requested floor."""
    floor = max(max_id + 1, 2 * hashes + 3, requested or 0, 2)
    return next_prime(floor)


def _corpus_ids(corpus) -> list[FeatureSet]:
    docs = list(corpus)
    if not docs:
        raise ValueError("corpus is empty")
    if any(len(d) == 0 for d in docs):
        raise ValueError("timing corpus must not contain empty documents")
    return docs


def run_timing(corpus, hashes: int, repetitions: int, seed: int,
               prime: int | None = None) -> BenchReport:
    """Time family generation plus whole-corpus signing for both kinds.

    Fresh families per repetition (same derived seed feeds both kinds);
    prime defaults to choose_prime over the corpus.  The warm-up
    repetition is not reported.
    """
    docs = _corpus_ids(corpus)
    if repetitions < 2:
        raise ValueError(f"need at least two repetitions, got {repetitions}")
    max_id = max(d.max_id for d in docs)
    if prime is None:
        prime = choose_prime(max_id, hashes)

    def one_pass(kind: str, fam_seed: int) -> float:
        start = time.perf_counter()
        family = make_family(kind, fam_seed, hashes, prime)
        for doc in docs:
            signature(doc, family)
        return time.perf_counter() - start

    # warm-up, untimed: JIT compile and cache warm for both kernels
    warm_seed = derive_seed(seed, repetitions)
    for kind in FAMILY_ORDER:
        one_pass(kind, warm_seed)

    random_times = []
    iterative_times = []
    for rep in range(repetitions):
        fam_seed = derive_seed(seed, rep)
        random_times.append(one_pass("random", fam_seed))
        iterative_times.append(one_pass("iterative", fam_seed))
    return BenchReport.from_times(random_times, iterative_times,
                                  prime, hashes, len(docs))


@dataclass(frozen=True)
class EstimationRow:
    hash_count: int
    family: str
    mae_mean: float
    mae_std: float


def run_estimation(pairs, hash_counts, seeds, prime: int | None = None) -> list[EstimationRow]:
    """Signature-based Jaccard MAE per (hash count, family kind).

    Every (count, kind, seed) gets one fresh family shared by all pairs;
    errors pool over pairs and seeds.  The random and iterative family for
    a given (count, seed) share the same derived seed, pairing the
    comparison.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError("need at least one set pair")
    hash_counts = [int(n) for n in hash_counts]
    if not hash_counts or min(hash_counts) < 1:
        raise ValueError("hash counts must be positive")
    seeds = [int(s) for s in seeds]
    if not seeds:
        raise ValueError("need at least one seed")
    truths = [exact_jaccard(a, b) for a, b in pairs]
    max_id = max(max(a.max_id, b.max_id) for a, b in pairs)
    if prime is None:
        prime = choose_prime(max_id, max(hash_counts))

    rows = []
    for count in hash_counts:
        for kind in FAMILY_ORDER:
            estimates = []
            expected = []
            for seed in seeds:
                family = make_family(kind, derive_seed(seed, count), count, prime)
                for (a, b), truth in zip(pairs, truths):
                    est = _pair_estimate(a, b, family)
                    estimates.append(est)
                    expected.append(truth)
            mean, std = mean_absolute_error(estimates, expected)
            rows.append(EstimationRow(count, kind, mean, std))
    return rows


def _pair_estimate(a: FeatureSet, b: FeatureSet, family) -> float:
    sa = signature(a, family)
    sb = signature(b, family)
    return float(np.mean(sa.mins == sb.mins))


def synth_pair_batch(n_pairs: int, size: int, seed: int,
                     j_low: float = 0.1, j_high: float = 0.9,
                     id_space: int | None = None) -> list[tuple[FeatureSet, FeatureSet]]:
    """Pairs with exact Jaccard values spread uniformly over [j_low, j_high]."""
    if not 0.0 < j_low <= j_high < 1.0:
        raise ValueError(f"need 0 < j_low <= j_high < 1, got [{j_low}, {j_high}]")
    target_rng = np.random.default_rng(derive_seed(seed, 0))
    pairs = []
    for i in range(n_pairs):
        target = float(target_rng.uniform(j_low, j_high))
        pairs.append(synth_pair(target, size, derive_seed(seed, 1, i), id_space=id_space))
    return pairs


def corpus_pairs(docs, seed: int, all_pairs_limit: int = 1000,
                 sample_size: int = 100_000):
    """Document pairs for estimation: every pair for small corpora, a
    uniform sample (with replacement) of index pairs above the limit.

    Empty documents are skipped.  Returns (pairs, mode) where mode records
    which strategy produced them.
    """
    docs = [d for d in docs if len(d) > 0]
    if len(docs) < 2:
        raise ValueError("need at least two non-empty documents")
    if len(docs) <= all_pairs_limit:
        return [(docs[i], docs[j]) for i, j in itertools.combinations(range(len(docs)), 2)], "all-pairs"
    rng = np.random.default_rng(derive_seed(seed, 2))
    pairs = []
    while len(pairs) < sample_size:
        i, j = rng.integers(0, len(docs), size=2)
        if i != j:
            pairs.append((docs[int(i)], docs[int(j)]))
    return pairs, f"sampled-{sample_size}"
