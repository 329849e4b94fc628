"""MinHash signatures over integer feature sets and Jaccard estimation.

A signature stores, for each hash function in a family, the feature id
that attains the minimum hash value (ties go to the smallest id).  Two
signatures built with the same family estimate the Jaccard index of their
source sets by the fraction of positions holding the same feature id.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .families import Family, IterativeFamily, RandomFamily
from .modmath import MAX_VECTOR_PRIME


class FeatureSet:
    """Canonicalized set of non-negative integer feature ids.

    Construction sorts and deduplicates, so downstream results never
    depend on input order.
    """

    __slots__ = ("ids",)

    def __init__(self, ids):
        if isinstance(ids, np.ndarray):
            base = ids.astype(np.int64, copy=False)
        else:
            base = np.array(list(ids), dtype=np.int64)
        arr = np.unique(base)
        if arr.size and int(arr[0]) < 0:
            raise ValueError("feature ids must be non-negative")
        arr.setflags(write=False)
        self.ids = arr

    def __len__(self) -> int:
        return int(self.ids.size)

    def __iter__(self):
        return iter(self.ids.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FeatureSet):
            return NotImplemented
        return self.ids.shape == other.ids.shape and bool(np.all(self.ids == other.ids))

    def __hash__(self):
        return hash(self.ids.tobytes())

    def __repr__(self) -> str:
        return f"FeatureSet(size={len(self)})"

    @property
    def max_id(self) -> int:
        if self.ids.size == 0:
            raise ValueError("empty feature set has no max id")
        return int(self.ids[-1])


@dataclass(frozen=True, eq=False)
class Signature:
    """Per-hash argmin feature ids plus the identity of the family used."""

    mins: np.ndarray
    family_key: tuple = field(default=())

    def __post_init__(self):
        arr = np.ascontiguousarray(self.mins, dtype=np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "mins", arr)

    def __len__(self) -> int:
        return int(self.mins.size)


def exact_jaccard(s1: FeatureSet, s2: FeatureSet) -> float:
    """|s1 & s2| / |s1 | s2|; two empty sets count as identical (1.0)."""
    a, b = s1.ids, s2.ids
    if a.size == 0 and b.size == 0:
        return 1.0
    inter = int(np.intersect1d(a, b, assume_unique=True).size)
    union = int(a.size) + int(b.size) - inter
    return inter / union


def signature(s: FeatureSet, family: Family) -> Signature:
    """MinHash signature of a non-empty feature set under a family.

    mins[i] is the feature id minimizing h_i over the set; equal hash
    values resolve to the smallest feature id.
    """
    if len(s) == 0:
        raise ValueError("cannot build a signature for an empty feature set")
    if s.max_id >= family.prime:
        raise ValueError(
            f"feature id {s.max_id} >= family prime {family.prime}")
    if family.prime <= MAX_VECTOR_PRIME:
        if isinstance(family, RandomFamily):
            mins = kernels.sign_random(s.ids, family.a, family.b, family.prime)
        else:
            mins = kernels.sign_iterative(
                s.ids, family.base.a, family.base.b, family.prime, family.size)
    else:
        mins = _signature_by_rows(s, family)
    return Signature(mins, family.key)


def _signature_by_rows(s: FeatureSet, family: Family) -> np.ndarray:
    # Exact fallback for primes beyond the int64-safe vector range: one
    # eval_all sweep per feature, ascending ids with strict < for ties.
    best = None
    arg = None
    for x in s.ids.tolist():
        h = family.eval_all(x)
        if best is None:
            best = h.copy()
            arg = np.full(family.size, x, dtype=np.int64)
        else:
            better = h < best
            best[better] = h[better]
            arg[better] = x
    return arg


def estimate_jaccard(g1: Signature, g2: Signature) -> float:
    """Fraction of signature positions holding the same feature id."""
    if g1.family_key != g2.family_key:
        raise ValueError(
            f"signatures come from different families: {g1.family_key} vs {g2.family_key}")
    if len(g1) != len(g2):
        raise ValueError("signature lengths differ")
    return float(np.mean(g1.mins == g2.mins))


# ---------------------------------------------------------------------------
# Signature files: one record per object -- object id, N, then N feature ids.
# Text form is whitespace-separated integers, one record per line; binary
# form is the same integers as little-endian unsigned 64-bit words.
# ---------------------------------------------------------------------------


def _record_mins(sig) -> np.ndarray:
    mins = sig.mins if isinstance(sig, Signature) else np.asarray(sig, dtype=np.int64)
    if mins.ndim != 1:
        raise ValueError("signature record must be a 1-d id vector")
    return mins


def write_signatures_text(path, records) -> None:
    """records: iterable of (object_id, Signature-or-id-vector)."""
    with open(path, "w", encoding="utf-8") as fh:
        for obj_id, sig in records:
            mins = _record_mins(sig)
            fh.write(f"{int(obj_id)} {mins.size} ")
            fh.write(" ".join(str(int(v)) for v in mins))
            fh.write("\n")


def read_signatures_text(path) -> list[tuple[int, np.ndarray]]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts:
                continue
            if len(parts) < 2:
                raise ValueError(f"{path}:{lineno}: truncated signature record")
            obj_id, n = int(parts[0]), int(parts[1])
            ids = np.array([int(v) for v in parts[2:]], dtype=np.int64)
            if ids.size != n:
                raise ValueError(
                    f"{path}:{lineno}: record declares {n} ids but carries {ids.size}")
            out.append((obj_id, ids))
    return out


def write_signatures_binary(path, records) -> None:
    """Same records as the text form, as little-endian u64 words."""
    with open(path, "wb") as fh:
        for obj_id, sig in records:
            mins = _record_mins(sig)
            fh.write(struct.pack("<QQ", int(obj_id), mins.size))
            fh.write(mins.astype("<u8").tobytes())


def read_signatures_binary(path) -> list[tuple[int, np.ndarray]]:
    out = []
    with open(path, "rb") as fh:
        while True:
            head = fh.read(16)
            if not head:
                break
            if len(head) < 16:
                raise ValueError(f"{path}: truncated record header")
            obj_id, n = struct.unpack("<QQ", head)
            payload = fh.read(8 * n)
            if len(payload) < 8 * n:
                raise ValueError(f"{path}: truncated record body")
            ids = np.frombuffer(payload, dtype="<u8").astype(np.int64)
            out.append((int(obj_id), ids))
    return out
