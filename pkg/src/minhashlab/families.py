"""Universal hash families over a prime modulus.

Two interchangeable constructions are provided:

* ``RandomFamily`` -- the classic affine family h_i(x) = (a_i*x + b_i) % P
  with independently drawn parameter pairs, one per hash function.
* ``IterativeFamily`` -- a single-parameter reindexing
  h_i(x) = ((a+i)*x + i*b) % P.  Consecutive members differ by the
  constant increment dh = (x+b) % P, so a whole vector of hash values can
  be produced by repeated addition, and any single index directly via
  h_i(x) = (a*x + i*dh) % P.

Families are immutable after construction and all evaluation methods are
pure, so unrestricted concurrent use is safe.  A family drawn from a seed
is fully described by (kind, seed, hashes, prime); ``family_to_json`` /
``family_from_json`` round-trip exactly that description.

Parameters are drawn from numpy's PCG64 generator; bounded draws go
through ``Generator.integers``, which uses rejection-based range reduction
and is therefore unbiased.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

import numpy as np

from .modmath import MAX_VECTOR_PRIME, is_prime

FAMILY_KINDS = ("random", "iterative")


def derive_seed(master: int, *path: int) -> int:
    """Deterministic child seed for (master seed, index path).

    Experiment runs derive their RNG streams through this, so results do
    not depend on scheduling order.
    """
    ss = np.random.SeedSequence([int(master), *(int(p) for p in path)])
    return int(ss.generate_state(1, np.uint64)[0])


def _check_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


@dataclass(frozen=True)
class HashParams:
    """One affine parameter pair (a, b) over prime modulus p.

    a = 0 would collapse the hash to a constant, so it is excluded.
    """

    a: int
    b: int
    p: int

    def __post_init__(self) -> None:
        if not 1 <= self.a < self.p:
            raise ValueError(f"need 1 <= a < p, got a={self.a}, p={self.p}")
        if not 0 <= self.b < self.p:
            raise ValueError(f"need 0 <= b < p, got b={self.b}, p={self.p}")


class RandomFamily:
    """N affine hash functions with independently drawn parameters."""

    kind = "random"

    def __init__(self, a, b, prime: int, seed: int | None = None):
        prime = _check_prime(prime)
        a = np.ascontiguousarray(a, dtype=np.int64)
        b = np.ascontiguousarray(b, dtype=np.int64)
        if a.ndim != 1 or a.shape != b.shape or a.size == 0:
            raise ValueError("parameter arrays must be equal-length, non-empty 1-d")
        if int(a.min()) < 1 or int(a.max()) >= prime:
            raise ValueError("multipliers must lie in [1, prime)")
        if int(b.min()) < 0 or int(b.max()) >= prime:
            raise ValueError("offsets must lie in [0, prime)")
        a.setflags(write=False)
        b.setflags(write=False)
        self.a = a
        self.b = b
        self.prime = prime
        self.seed = None if seed is None else int(seed)

    @property
    def size(self) -> int:
        return self.a.shape[0]

    @property
    def key(self) -> tuple:
        """Identity tuple; signatures are comparable only when keys match."""
        return (self.kind, self.seed, self.size, self.prime)

    def params(self, i: int) -> HashParams:
        return HashParams(int(self.a[i]), int(self.b[i]), self.prime)

    def eval_all(self, x: int) -> np.ndarray:
        """All N hash values of x, as an int64 vector."""
        x = _check_input(x, self.prime)
        if self.prime <= MAX_VECTOR_PRIME:
            return (self.a * x + self.b) % self.prime
        p = self.prime
        return np.array([(ai * x + bi) % p for ai, bi in zip(self.a.tolist(), self.b.tolist())],
                        dtype=np.int64)

    def eval_at(self, x: int, i: int) -> int:
        x = _check_input(x, self.prime)
        if not 0 <= i < self.size:
            raise IndexError(f"hash index {i} out of range [0, {self.size})")
        return (int(self.a[i]) * x + int(self.b[i])) % self.prime

    def __repr__(self) -> str:
        return f"RandomFamily(size={self.size}, prime={self.prime}, seed={self.seed})"


class IterativeFamily:
    """Hash sequence h_i(x) = ((a+i)*x + i*b) % P for i in [0, size).

    Construction requires a + size < P so that every member keeps a
    nonzero multiplier mod P and stays a bijection on [0, P).  Families
    drawn through make_iterative_family additionally keep b + size < P;
    direct construction only needs canonical (a, b).
    """

    kind = "iterative"

    def __init__(self, a: int, b: int, prime: int, size: int, seed: int | None = None):
        prime = _check_prime(prime)
        self.base = HashParams(int(a), int(b), prime)
        size = int(size)
        if size < 1:
            raise ValueError(f"family size must be positive, got {size}")
        if self.base.a + size >= prime:
            raise ValueError(
                f"need a + size < prime to keep every member invertible; "
                f"got a={a}, size={size}, prime={prime}")
        self.prime = prime
        self.size = size
        self.seed = None if seed is None else int(seed)

    @property
    def key(self) -> tuple:
        return (self.kind, self.seed, self.size, self.prime)

    def eval_all(self, x: int) -> np.ndarray:
        """All N hash values of x, as an int64 vector."""
        x = _check_input(x, self.prime)
        a, b, p, n = self.base.a, self.base.b, self.prime, self.size
        h0 = (a * x) % p
        dh = (x + b) % p
        if p <= MAX_VECTOR_PRIME and n * p < 2**62:
            return (h0 + np.arange(n, dtype=np.int64) * dh) % p
        out = np.empty(n, dtype=np.int64)
        h = h0
        for i in range(n):
            out[i] = h
            h += dh
            if h >= p:
                h -= p
        return out

    def eval_at(self, x: int, i: int) -> int:
        """h_i(x) without touching indices 0..i-1."""
        x = _check_input(x, self.prime)
        if not 0 <= i < self.size:
            raise IndexError(f"hash index {i} out of range [0, {self.size})")
        a, b, p = self.base.a, self.base.b, self.prime
        return (a * x + i * ((x + b) % p)) % p

    def __repr__(self) -> str:
        return (f"IterativeFamily(a={self.base.a}, b={self.base.b}, "
                f"prime={self.prime}, size={self.size}, seed={self.seed})")


Family = Union[RandomFamily, IterativeFamily]


def _check_input(x, prime: int) -> int:
    x = int(x)
    if not 0 <= x < prime:
        raise ValueError(f"hash input {x} outside [0, {prime})")
    return x


def sample_random_family(seed: int, hashes: int, prime: int) -> RandomFamily:
    """Draw `hashes` independent parameter pairs: a uniform on [1, prime),
    b uniform on [0, prime)."""
    prime = _check_prime(prime)
    if hashes < 1:
        raise ValueError(f"need at least one hash function, got {hashes}")
    if prime < 3:
        raise ValueError(f"need prime >= 3, got {prime}")
    rng = np.random.default_rng(int(seed))
    a = rng.integers(1, prime, size=hashes, dtype=np.int64)
    b = rng.integers(0, prime, size=hashes, dtype=np.int64)
    return RandomFamily(a, b, prime, seed=seed)


def make_iterative_family(seed: int, hashes: int, prime: int) -> IterativeFamily:
    """Draw one (a, b) pair with both a and b below prime - hashes.

    Rejects primes with no headroom: prime must exceed 2*hashes + 2 so the
    draw ranges [1, prime-hashes) and [0, prime-hashes) are comfortably
    nonempty.
    """
    prime = _check_prime(prime)
    if hashes < 1:
        raise ValueError(f"need at least one hash function, got {hashes}")
    if prime <= 2 * hashes + 2:
        raise ValueError(
            f"prime {prime} leaves no parameter headroom for {hashes} hashes; "
            f"need prime > {2 * hashes + 2}")
    rng = np.random.default_rng(int(seed))
    a = int(rng.integers(1, prime - hashes))
    b = int(rng.integers(0, prime - hashes))
    return IterativeFamily(a, b, prime, hashes, seed=seed)


def make_family(kind: str, seed: int, hashes: int, prime: int) -> Family:
    """Dispatch on family kind ("random" or "iterative")."""
    if kind == "random":
        return sample_random_family(seed, hashes, prime)
    if kind == "iterative":
        return make_iterative_family(seed, hashes, prime)
    raise ValueError(f"unknown family kind {kind!r}; expected one of {FAMILY_KINDS}")


def family_to_json(family: Family) -> str:
    """Serialize a seed-drawn family to a single JSON object."""
    if family.seed is None:
        raise ValueError("family was built from explicit parameters, not a seed; "
                         "cannot serialize it as (kind, seed, hashes, prime)")
    return json.dumps({
        "kind": family.kind,
        "seed": family.seed,
        "hashes": family.size,
        "prime": family.prime,
    })


def family_from_json(text: str) -> Family:
    """Rebuild a family from family_to_json output; exact round-trip."""
    obj = json.loads(text)
    try:
        kind = obj["kind"]
        seed = int(obj["seed"])
        hashes = int(obj["hashes"])
        prime = int(obj["prime"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed family description: {text!r}") from exc
    return make_family(kind, seed, hashes, prime)
