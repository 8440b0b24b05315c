from __future__ import annotations

import numpy as np
import pytest

from toracrypt import LetterStream, kernels, load_corpus

# Consonantal text of the 85-letter block between the inverted nuns
# (Numbers 10:35-36), used as a structural fixture.
T2_HEBREW = (
    "ויהיבנסעהארןויאמרמשהקומהיהוהויפצואיביךוינסומשנאיךמפניך"
    "ובנחהיאמרשובהיהוהרבבותאלפיישראל"
)


def make_stream(rng: np.random.Generator, length: int, alphabet: int = 22) -> LetterStream:
    return LetterStream(rng.integers(0, alphabet, length, dtype=np.uint8), "random")


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    with kernels.use_backend(request.param):
        yield request.param


@pytest.fixture(scope="session")
def t2_stream() -> LetterStream:
    stream = load_corpus(T2_HEBREW, "hebrew", source_tag="t2-fixture")
    assert len(stream) == 85
    return stream


@pytest.fixture(scope="session")
def mini_corpus_latin(t2_stream) -> str:
    # A small corpus shaped like the real thing: text, marker, T2, marker, text.
    return "BRA$'TBRA" + "[NUN]" + t2_stream.to_latin() + "[NUN]" + "$MYNHLK!M"


@pytest.fixture(scope="session")
def mini_corpus(mini_corpus_latin) -> LetterStream:
    return load_corpus(mini_corpus_latin, "latin", source_tag="mini-corpus")
