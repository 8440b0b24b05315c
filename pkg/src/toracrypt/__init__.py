"""Letter-stream cryptanalysis toolkit.

Core pieces: corpus ingestion and transliteration, equidistant-letter-
sequence search, max n-gram statistics, approximate entropy, grid
row-order search, a composable transposition-key algebra, and
number-theoretic claim verifiers.
"""

from .corpus import (
    ALPHABET,
    ALPHABET_SIZE,
    Alphabet,
    CorpusFormatError,
    LetterStream,
    MarkerError,
    Pattern,
    TransliterationError,
    encode_pattern,
    extract_t2,
    letter_histogram,
    load_corpus,
)
from .els import ElsMatch, SkipRange, extend, find_at_skip, find_minimal, proximity
from .grid import (
    Grid,
    arrange,
    factor_rectangles,
    find_row_orders,
    permute_rows,
    read_column,
    render_bit_grid,
)
from .numth import FactorizationResult, factorize, is_emirp, is_prime, is_semiprime, reverse_decimal
from .permute import (
    KeyLibrary,
    PermutationKey,
    apply_key,
    build_t2_library,
    compose,
    identity_key,
    inverse,
    key_from_grid,
    key_order,
)
from .stats import NGramReport, approx_entropy, max_ngram, max_pair, max_quad, max_trip

__version__ = "0.1.0"

__all__ = [
    "ALPHABET",
    "ALPHABET_SIZE",
    "Alphabet",
    "CorpusFormatError",
    "ElsMatch",
    "FactorizationResult",
    "Grid",
    "KeyLibrary",
    "LetterStream",
    "MarkerError",
    "NGramReport",
    "Pattern",
    "PermutationKey",
    "SkipRange",
    "TransliterationError",
    "apply_key",
    "approx_entropy",
    "arrange",
    "build_t2_library",
    "compose",
    "encode_pattern",
    "extend",
    "extract_t2",
    "factor_rectangles",
    "factorize",
    "find_at_skip",
    "find_minimal",
    "find_row_orders",
    "identity_key",
    "inverse",
    "is_emirp",
    "is_prime",
    "is_semiprime",
    "key_from_grid",
    "key_order",
    "letter_histogram",
    "load_corpus",
    "max_ngram",
    "max_pair",
    "max_quad",
    "max_trip",
    "permute_rows",
    "proximity",
    "read_column",
    "render_bit_grid",
    "reverse_decimal",
]
