import numpy as np
import pytest

from minhashlab.corpus import Vocabulary, build_corpus, synth_corpus, synth_pair, tokenize
from minhashlab.minhash import exact_jaccard

D1 = "The cat ate the mouse"
D2 = "The mouse ate the cheese"


class TestTokenize:
    def test_worked_example(self):
        assert tokenize(D1) == ("ate", "cat", "mouse", "the")
        assert tokenize(D2) == ("ate", "cheese", "mouse", "the")

    def test_empty(self):
        assert tokenize("") == ()
        assert tokenize("  \t .,;!  ") == ()

    def test_punctuation_and_digits(self):
        assert tokenize("A-B, a_b; 12ab!") == ("12ab", "a", "b")

    def test_case_folding_and_dedup(self):
        assert tokenize("Dog dog DOG") == ("dog",)


class TestVocabulary:
    def test_first_occurrence_order(self):
        v = Vocabulary()
        assert [v.add(t) for t in ("b", "a", "b", "c")] == [0, 1, 0, 2]
        assert v.terms == ("b", "a", "c")

    def test_round_trip_identity(self):
        v = Vocabulary()
        for t in ("x", "y", "z"):
            v.add(t)
        for tid in range(len(v)):
            assert v.id_of(v.term_of(tid)) == tid

    def test_lookup_errors(self):
        v = Vocabulary()
        v.add("only")
        with pytest.raises(KeyError):
            v.id_of("missing")
        with pytest.raises(IndexError):
            v.term_of(5)
        assert "only" in v and "missing" not in v


class TestBuildCorpus:
    def test_worked_pair(self, tmp_path):
        path = tmp_path / "docs.txt"
        path.write_text(f"{D1}\n{D2}\n", encoding="utf-8")
        vocab, docs, empty = build_corpus(path)
        assert len(vocab) == 5
        assert len(docs) == 2
        assert empty == 0
        assert exact_jaccard(docs[0], docs[1]) == pytest.approx(3 / 5)

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("", encoding="utf-8")
        vocab, docs, empty = build_corpus(path)
        assert len(vocab) == 0 and docs == [] and empty == 0

    def test_duplicate_documents(self, tmp_path):
        path = tmp_path / "dup.txt"
        path.write_text(f"{D1}\n{D1}\n", encoding="utf-8")
        _, docs, _ = build_corpus(path)
        assert docs[0] == docs[1]
        assert exact_jaccard(docs[0], docs[1]) == 1.0

    def test_blank_lines_flagged(self, tmp_path):
        path = tmp_path / "gaps.txt"
        path.write_text(f"{D1}\n\n...\n{D2}\n", encoding="utf-8")
        _, docs, empty = build_corpus(path)
        assert len(docs) == 4
        assert empty == 2
        assert len(docs[1]) == 0 and len(docs[2]) == 0

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            build_corpus(tmp_path / "nope.txt")


class TestSynthPair:
    def test_three_fifths_structure(self):
        a, b = synth_pair(0.6, 5, seed=0)
        inter = np.intersect1d(a.ids, b.ids)
        union = np.union1d(a.ids, b.ids)
        assert inter.size == 3 and union.size == 5
        assert exact_jaccard(a, b) == pytest.approx(0.6)

    def test_target_near_one_gives_identical_sets(self):
        a, b = synth_pair(0.999, 5, seed=1)
        assert a == b
        assert exact_jaccard(a, b) == 1.0

    def test_quarter_with_large_size(self):
        a, b = synth_pair(0.25, 100, seed=2)
        assert exact_jaccard(a, b) == pytest.approx(0.25)

    def test_unrepresentable_target(self):
        with pytest.raises(ValueError):
            synth_pair(0.001, 3, seed=0)

    def test_domain_validation(self):
        for bad in (0.0, 1.0, -0.5, 1.5):
            with pytest.raises(ValueError):
                synth_pair(bad, 5, seed=0)

    def test_deterministic(self):
        a1, b1 = synth_pair(0.37, 40, seed=9)
        a2, b2 = synth_pair(0.37, 40, seed=9)
        assert a1 == a2 and b1 == b2

    def test_rational_is_closest_with_bounded_denominator(self):
        # denominator <= 2*size and error <= 1/denominator
        from fractions import Fraction
        rng = np.random.default_rng(4)
        for _ in range(50):
            target = float(rng.uniform(0.05, 0.95))
            size = int(rng.integers(2, 80))
            try:
                a, b = synth_pair(target, size, seed=3)
            except ValueError:
                continue
            got = Fraction(exact_jaccard(a, b)).limit_denominator(2 * size)
            assert got.denominator <= 2 * size
            assert abs(float(got) - target) <= 1.0 / got.denominator

    def test_ids_within_id_space(self):
        a, b = synth_pair(0.5, 10, seed=5, id_space=64)
        assert a.max_id < 64 and b.max_id < 64


class TestSynthCorpus:
    def test_shapes_and_bounds(self):
        docs = synth_corpus(20, 50, seed=0, id_space=2000)
        assert len(docs) == 20
        for d in docs:
            assert 40 <= len(d) <= 60
            assert d.max_id < 2000

    def test_deterministic(self):
        a = synth_corpus(5, 30, seed=1)
        b = synth_corpus(5, 30, seed=1)
        assert all(x == y for x, y in zip(a, b))

    def test_validation(self):
        with pytest.raises(ValueError):
            synth_corpus(0, 10, seed=0)
        with pytest.raises(ValueError):
            synth_corpus(5, 100, seed=0, id_space=50)
