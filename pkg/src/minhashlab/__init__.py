"""MinHash sketching with interchangeable universal hash families.

The library pairs the classic random-parameter affine family with an
iterative single-parameter family whose evaluation loop needs no
multiplication, and ships the uniformity, estimation-error, and timing
experiments that compare them.
"""

from .bench import (
    BenchReport,
    EstimationRow,
    choose_prime,
    corpus_pairs,
    run_estimation,
    run_timing,
    synth_pair_batch,
)
from .corpus import CorpusData, Vocabulary, build_corpus, synth_corpus, synth_pair, tokenize
from .families import (
    FAMILY_KINDS,
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
from .minhash import (
    FeatureSet,
    Signature,
    estimate_jaccard,
    exact_jaccard,
    read_signatures_binary,
    read_signatures_text,
    signature,
    write_signatures_binary,
    write_signatures_text,
)
from .modmath import is_prime, mulmod, next_prime
from .stats import (
    ChiSquareReport,
    ExperimentSummary,
    UniformityConfig,
    bucket_uniformity_experiment,
    chi_square_pvalue,
    mean_absolute_error,
    minhash_uniformity_experiment,
    paired_t_test,
    run_uniformity,
)

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "ChiSquareReport",
    "CorpusData",
    "EstimationRow",
    "ExperimentSummary",
    "FAMILY_KINDS",
    "FeatureSet",
    "HashParams",
    "IterativeFamily",
    "RandomFamily",
    "Signature",
    "UniformityConfig",
    "Vocabulary",
    "bucket_uniformity_experiment",
    "build_corpus",
    "chi_square_pvalue",
    "choose_prime",
    "corpus_pairs",
    "derive_seed",
    "estimate_jaccard",
    "exact_jaccard",
    "family_from_json",
    "family_to_json",
    "is_prime",
    "make_family",
    "make_iterative_family",
    "mean_absolute_error",
    "minhash_uniformity_experiment",
    "mulmod",
    "next_prime",
    "paired_t_test",
    "read_signatures_binary",
    "read_signatures_text",
    "run_estimation",
    "run_timing",
    "run_uniformity",
    "sample_random_family",
    "signature",
    "synth_corpus",
    "synth_pair",
    "synth_pair_batch",
    "tokenize",
    "write_signatures_binary",
    "write_signatures_text",
]
