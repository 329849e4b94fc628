import numpy as np
import pytest
import sympy

from minhashlab.modmath import PRIME_SEARCH_LIMIT, is_prime, mulmod, next_prime


def mulmod_by_addition(a, x, p):
    """Independent oracle: shift-and-add product, every partial sum < 2p."""
    acc = 0
    a = a % p
    while x:
        if x & 1:
            acc += a
            if acc >= p:
                acc -= p
        a += a
        if a >= p:
            a -= p
        x >>= 1
    return acc


def trial_division_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class TestMulmod:
    def test_small(self):
        assert mulmod(3, 2, 7) == 6

    def test_zero_annihilates(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            p = next_prime(int(rng.integers(2, 2**62)))
            x = int(rng.integers(0, p))
            assert mulmod(0, x, p) == 0
            assert mulmod(x, 0, p) == 0

    def test_p_minus_one_squared(self):
        # (P-1)^2 = P^2 - 2P + 1, so the residue is 1
        assert 7756 * 7756 % 7757 == 1
        assert mulmod(7756, 7756, 7757) == 1

    def test_against_addition_oracle(self):
        rng = np.random.default_rng(42)
        primes = [next_prime(int(rng.integers(2, 2**63 - 2**32))) for _ in range(40)]
        checked = 0
        while checked < 100_000:
            p = primes[checked % len(primes)]
            a = int(rng.integers(0, p))
            x = int(rng.integers(0, p))
            assert mulmod(a, x, p) == mulmod_by_addition(a, x, p)
            checked += 1


class TestIsPrime:
    def test_small_values(self):
        expected = {n: trial_division_prime(n) for n in range(500)}
        for n, want in expected.items():
            assert is_prime(n) == want, n

    def test_strong_pseudoprimes_rejected(self):
        # composites that fool small-base Miller-Rabin subsets
        assert not is_prime(3215031751)            # 151 * 751 * 28351
        assert not is_prime(3825123056546413051)   # strong pseudoprime to bases 2..23
        assert not is_prime(341550071728321)       # strong pseudoprime to bases 2..17

    def test_large_primes(self):
        assert is_prime(2**61 - 1)
        assert is_prime(2**63 - 25)
        assert not is_prime(2**63 - 1)

    def test_random_against_sympy(self):
        rng = np.random.default_rng(7)
        for _ in range(2000):
            n = int(rng.integers(2, 2**63))
            assert is_prime(n) == sympy.isprime(n), n


class TestNextPrime:
    def test_two(self):
        assert next_prime(2) == 2

    def test_5000(self):
        assert next_prime(5000) == 5003
        assert not trial_division_prime(5001)
        assert not trial_division_prime(5002)
        assert trial_division_prime(5003)

    def test_7750_lands_on_7753(self):
        # 7753 is prime, so it, not 7757, is the first prime at or above 7750
        assert trial_division_prime(7753)
        assert next_prime(7750) == 7753
        assert next_prime(7754) == 7757
        assert trial_division_prime(7757)

    def test_fixed_point_on_primes(self):
        for p in (2, 3, 5, 7757, 7753, 104729, 2**61 - 1):
            assert next_prime(p) == p

    def test_lower_bound(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            n = int(rng.integers(2, 10**12))
            p = next_prime(n)
            assert p >= n
            assert is_prime(p)

    def test_rejects_tiny_n(self):
        with pytest.raises(ValueError):
            next_prime(1)
        with pytest.raises(ValueError):
            next_prime(0)

    def test_overflow_past_64_bit_range(self):
        # largest prime below 2**63 is 2**63 - 25
        assert next_prime(2**63 - 25) == 2**63 - 25
        with pytest.raises(OverflowError):
            next_prime(2**63 - 24)
        with pytest.raises(OverflowError):
            next_prime(PRIME_SEARCH_LIMIT + 12345)
