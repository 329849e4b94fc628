"""Bag-of-words ingestion and synthetic set generation.

Corpus files are one document per line.  Tokenization keeps every term
(no stop-word removal, no stemming): lowercase, split on runs of
non-alphanumeric characters, deduplicate, sort.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .minhash import FeatureSet

_TOKEN = re.compile(r"[^\W_]+", re.UNICODE)


def tokenize(text: str) -> tuple[str, ...]:
    """Sorted, deduplicated lowercase terms of one document."""
    return tuple(sorted(set(_TOKEN.findall(text.lower()))))


class Vocabulary:
    """Bijective term <-> id map; ids run 0..M-1 in first-occurrence order."""

    def __init__(self):
        self._term_to_id: dict[str, int] = {}
        self._id_to_term: list[str] = []

    def add(self, term: str) -> int:
        """Id of term, assigning the next free id on first sight."""
        tid = self._term_to_id.get(term)
        if tid is None:
            tid = len(self._id_to_term)
            self._term_to_id[term] = tid
            self._id_to_term.append(term)
        return tid

    def id_of(self, term: str) -> int:
        return self._term_to_id[term]

    def term_of(self, tid: int) -> str:
        return self._id_to_term[tid]

    def __len__(self) -> int:
        return len(self._id_to_term)

    def __contains__(self, term: str) -> bool:
        return term in self._term_to_id

    @property
    def terms(self) -> tuple[str, ...]:
        return tuple(self._id_to_term)


class CorpusData(NamedTuple):
    vocabulary: Vocabulary
    documents: list[FeatureSet]
    empty_documents: int


def build_corpus(path) -> CorpusData:
    """Read a one-document-per-line UTF-8 file into id feature sets.

    Documents with no tokens are kept as empty sets and tallied in
    empty_documents.
    """
    vocab = Vocabulary()
    docs: list[FeatureSet] = []
    empty = 0
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            terms = tokenize(line)
            if not terms:
                empty += 1
            docs.append(FeatureSet([vocab.add(t) for t in terms]))
    return CorpusData(vocab, docs, empty)


def synth_pair(j_target: float, size: int, seed: int,
               id_space: int | None = None) -> tuple[FeatureSet, FeatureSet]:
    """Two random-id sets whose exact Jaccard index is the closest fraction
    k/u to j_target with u <= 2*size.

    The shared part has k ids and the remaining u-k ids are split between
    the two sets.  A target too small to represent (k would be 0) is
    rejected; a target rounding to 1 yields identical sets.
    """
    if not 0.0 < j_target < 1.0:
        raise ValueError(f"target Jaccard must lie in (0, 1), got {j_target}")
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    frac = Fraction(j_target).limit_denominator(2 * size)
    k, u = frac.numerator, frac.denominator
    if k == 0:
        raise ValueError(
            f"target {j_target} is not representable with union size <= {2 * size}")
    if id_space is None:
        id_space = max(64 * size, 1024)
    if id_space < u:
        raise ValueError(f"id space {id_space} too small for union of {u}")
    rng = np.random.default_rng(int(seed))
    ids = rng.choice(id_space, size=u, replace=False).astype(np.int64)
    shared = ids[:k]
    left_extra = (u - k + 1) // 2
    first = FeatureSet(np.concatenate([shared, ids[k:k + left_extra]]))
    second = FeatureSet(np.concatenate([shared, ids[k + left_extra:]]))
    return first, second


def synth_corpus(n_docs: int, doc_size: int, seed: int,
                 id_space: int | None = None) -> list[FeatureSet]:
    """Random feature sets with sizes jittered +-20% around doc_size."""
    if n_docs < 1 or doc_size < 1:
        raise ValueError("need positive document count and size")
    if id_space is None:
        id_space = max(1024, n_docs * doc_size // 5)
    lo = max(1, round(0.8 * doc_size))
    hi = max(lo, round(1.2 * doc_size))
    if id_space < hi:
        raise ValueError(f"id space {id_space} too small for documents of ~{doc_size}")
    rng = np.random.default_rng(int(seed))
    docs = []
    for _ in range(n_docs):
        sz = int(rng.integers(lo, hi + 1))
        docs.append(FeatureSet(rng.choice(id_space, size=sz, replace=False)))
    return docs
