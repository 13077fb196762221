"""Keyword recognition in noisy speech transcripts.

Thin Python layer over the C++ core: Porter stemming, pronouncing-dictionary
lookup, phoneme pruning, channel fusion and corpus evaluation.
"""

from ._core import (
    ClassificationError,
    DataError,
    InvalidKeyword,
    IoError,
    Lexicon,
    ParseError,
    __version__,
    detect,
    evaluate,
    measure,
    normalize,
    number_to_words,
    pattern_count,
    phonemize,
    prune,
    stem,
    tokenize,
    write_synthetic_corpus,
)

__all__ = [
    "ClassificationError",
    "DataError",
    "InvalidKeyword",
    "IoError",
    "Lexicon",
    "ParseError",
    "__version__",
    "detect",
    "evaluate",
    "measure",
    "normalize",
    "number_to_words",
    "pattern_count",
    "phonemize",
    "prune",
    "stem",
    "tokenize",
    "write_synthetic_corpus",
]
