"""Exact modular arithmetic and deterministic prime selection.

Everything here works on plain Python integers, which widen automatically,
so a 64-bit product can never truncate before reduction.
"""

from __future__ import annotations

# Witness set proven complete for every integer below 3.317e24, which covers
# the full 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Primes above 2**63 - 1 are out of scope; the largest one below the cap is
# 2**63 - 25.
PRIME_SEARCH_LIMIT = 2**63 - 1

# Vectorized int64 code paths stay exact as long as a*x + b with
# a, x, b < P fits in a signed 64-bit lane, i.e. P*P + P < 2**63.
MAX_VECTOR_PRIME = 3_037_000_499


def mulmod(a: int, x: int, p: int) -> int:
    """(a * x) % p for canonical residues a, x < p."""
    return (a * x) % p


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 64-bit integers."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n.

    Raises OverflowError once the search would leave the 64-bit range.
    """
    if n < 2:
        raise ValueError(f"next_prime needs n >= 2, got {n}")
    if n == 2:
        return 2
    cand = n | 1
    while True:
        if cand > PRIME_SEARCH_LIMIT:
            raise OverflowError(f"no prime at or above {n} within the 64-bit search range")
        if is_prime(cand):
            return cand
        cand += 2
