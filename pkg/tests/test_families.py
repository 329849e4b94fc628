import json

import numpy as np
import pytest

from minhashlab.families import (
    HashParams,
    IterativeFamily,
    RandomFamily,
    derive_seed,
    family_from_json,
    family_to_json,
    make_family,
    make_iterative_family,
    sample_random_family,
)
from minhashlab.modmath import MAX_VECTOR_PRIME, next_prime
from minhashlab.stats import chi_square_pvalue


def closed_form(a, b, p, x, i):
    # direct evaluation of the i-th family member, exact Python integers
    return ((a + i) * x + i * b) % p


def recurrence(a, b, p, x, n):
    # sequential walk with a reduction at every step
    out = []
    h = (a * x) % p
    dh = (x + b) % p
    for _ in range(n):
        out.append(h)
        h = (h + dh) % p
    return out


class TestHashParams:
    def test_valid(self):
        hp = HashParams(1, 0, 7757)
        assert (hp.a, hp.b, hp.p) == (1, 0, 7757)

    def test_zero_multiplier_rejected(self):
        with pytest.raises(ValueError):
            HashParams(0, 3, 7757)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            HashParams(7757, 0, 7757)
        with pytest.raises(ValueError):
            HashParams(1, -1, 7757)
        with pytest.raises(ValueError):
            HashParams(1, 7757, 7757)


class TestSampling:
    def test_ranges(self):
        fam = sample_random_family(123, 3, 7757)
        assert fam.size == 3
        assert np.all(fam.a >= 1) and np.all(fam.a < 7757)
        assert np.all(fam.b >= 0) and np.all(fam.b < 7757)

    def test_deterministic(self):
        f1 = sample_random_family(9, 100, 7757)
        f2 = sample_random_family(9, 100, 7757)
        assert np.array_equal(f1.a, f2.a)
        assert np.array_equal(f1.b, f2.b)

    def test_composite_modulus_rejected(self):
        with pytest.raises(ValueError):
            sample_random_family(0, 4, 7756)

    def test_multiplier_uniformity(self):
        # 1e5 draws of a over [1, P); chi-square over 100 equal-width bins
        # whose expected counts come from the exact integer width of each bin
        p = 7757
        draws = 100_000
        fam = sample_random_family(2024, draws, p)
        bins = 100
        idx = (fam.a.astype(np.int64) * bins) // p
        counts = np.bincount(idx, minlength=bins)
        edges = np.ceil(np.arange(bins + 1) * p / bins).astype(np.int64)
        widths = np.diff(edges).astype(np.float64)
        widths[0] -= 1  # value 0 is excluded from the first bin
        expected = widths / (p - 1) * draws
        stat = float((((counts - expected) ** 2) / expected).sum())
        assert chi_square_pvalue(stat, bins - 1) > 0.01

    def test_iterative_draw_headroom(self):
        fam = make_iterative_family(5, 1000, 7757)
        assert fam.base.a + fam.size < fam.prime
        assert fam.base.b + fam.size < fam.prime

    def test_iterative_rejects_without_headroom(self):
        # needs prime > 2*hashes + 2
        with pytest.raises(ValueError):
            make_iterative_family(5, 10_000, 7757)
        with pytest.raises(ValueError):
            make_iterative_family(5, 4000, 7919)
        with pytest.raises(ValueError):
            make_iterative_family(5, 5, 11)
        fam = make_iterative_family(5, 5, 13)
        assert fam.size == 5

    def test_forced_edge_parameters_rejected(self):
        with pytest.raises(ValueError):
            IterativeFamily(7918, 7918, 7919, 4000)

    def test_make_family_dispatch(self):
        assert make_family("random", 0, 2, 7757).kind == "random"
        assert make_family("iterative", 0, 2, 7757).kind == "iterative"
        with pytest.raises(ValueError):
            make_family("tabulation", 0, 2, 7757)


class TestEvaluation:
    def test_iterative_example(self):
        # dh = (2+5) % 7 = 0, so every index repeats h_0 = 6
        fam = IterativeFamily(3, 5, 7, 3)
        assert fam.eval_all(2).tolist() == [6, 6, 6]
        assert fam.eval_at(2, 2) == 6

    def test_random_identity_member(self):
        fam = RandomFamily([1], [0], 7757)
        for x in (0, 1, 42, 7756):
            assert fam.eval_all(x).tolist() == [x]

    def test_eval_at_zero_increment(self):
        fam = make_iterative_family(11, 50, 7757)
        x = 4321
        assert fam.eval_at(x, 0) == (fam.base.a * x) % fam.prime

    def test_eval_at_matches_eval_all_exhaustively(self):
        fam = make_iterative_family(3, 1000, 7757)
        rng = np.random.default_rng(1)
        for x in rng.integers(0, 7757, size=100):
            ref = fam.eval_all(int(x))
            got = np.array([fam.eval_at(int(x), i) for i in range(fam.size)])
            assert np.array_equal(ref, got)

    def test_eval_at_index_errors(self):
        fam = make_iterative_family(3, 10, 7757)
        with pytest.raises(IndexError):
            fam.eval_at(5, 10)
        with pytest.raises(IndexError):
            fam.eval_at(5, -1)

    def test_input_range_checked(self):
        fam = make_iterative_family(3, 10, 7757)
        with pytest.raises(ValueError):
            fam.eval_all(7757)
        with pytest.raises(ValueError):
            fam.eval_all(-1)

    def test_closed_form_equivalence(self):
        # production vector path vs direct formula vs per-step recurrence
        rng = np.random.default_rng(99)
        for _ in range(300):
            p = int(rng.choice([31, 7757, 1000003]))
            n = int(rng.integers(1, 60))
            if p <= 2 * n + 2:
                continue
            fam = make_iterative_family(int(rng.integers(0, 2**63)), n, p)
            x = int(rng.integers(0, p))
            got = fam.eval_all(x).tolist()
            a, b = fam.base.a, fam.base.b
            assert got == [closed_form(a, b, p, x, i) for i in range(n)]
            assert got == recurrence(a, b, p, x, n)

    def test_random_eval_matches_params(self):
        fam = sample_random_family(8, 64, 7757)
        x = 999
        vals = fam.eval_all(x)
        for i in (0, 17, 63):
            hp = fam.params(i)
            assert vals[i] == (hp.a * x + hp.b) % hp.p
            assert fam.eval_at(x, i) == vals[i]

    def test_members_are_bijections(self):
        # distinct inputs never collide under one member while a+i != 0 mod p
        p = 101
        ifam = make_iterative_family(4, 20, p)
        rfam = sample_random_family(4, 20, p)
        for fam in (ifam, rfam):
            table = np.stack([fam.eval_all(x) for x in range(p)])
            for i in range(fam.size):
                assert len(set(table[:, i].tolist())) == p

    def test_big_prime_fallback_matches_formula(self):
        p = next_prime(MAX_VECTOR_PRIME + 1)
        assert p > MAX_VECTOR_PRIME
        ifam = make_iterative_family(21, 8, p)
        rfam = sample_random_family(21, 8, p)
        x = 123456789
        a, b = ifam.base.a, ifam.base.b
        assert ifam.eval_all(x).tolist() == [closed_form(a, b, p, x, i) for i in range(8)]
        got = rfam.eval_all(x)
        want = [(int(ai) * x + int(bi)) % p for ai, bi in zip(rfam.a, rfam.b)]
        assert got.tolist() == want


class TestSerialization:
    def test_round_trip_random(self):
        fam = sample_random_family(5, 32, 7757)
        text = family_to_json(fam)
        obj = json.loads(text)
        assert set(obj) == {"kind", "seed", "hashes", "prime"}
        back = family_from_json(text)
        assert back.key == fam.key
        assert np.array_equal(back.a, fam.a)
        assert np.array_equal(back.b, fam.b)

    def test_round_trip_iterative(self):
        fam = make_iterative_family(17, 64, 7757)
        back = family_from_json(family_to_json(fam))
        assert back.key == fam.key
        assert back.base == fam.base

    def test_unseeded_family_refuses_serialization(self):
        fam = IterativeFamily(3, 5, 7757, 10)
        with pytest.raises(ValueError):
            family_to_json(fam)

    def test_malformed_json_rejected(self):
        with pytest.raises(ValueError):
            family_from_json('{"kind": "random", "seed": 1}')


class TestDeriveSeed:
    def test_deterministic(self):
        assert derive_seed(1, 2, 3) == derive_seed(1, 2, 3)

    def test_paths_distinct(self):
        seen = {derive_seed(0, i) for i in range(1000)}
        assert len(seen) == 1000
        assert derive_seed(0, 1) != derive_seed(1, 0)
