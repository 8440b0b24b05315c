"""Letter streams, transliteration and corpus ingestion.

Everything downstream works on a LetterStream: a validated sequence of
22 base letter codes (final Hebrew forms normalized at load) plus marker
annotations for the two inverted nuns that bracket the T2 block.
"""

from __future__ import annotations

import hashlib
import unicodedata

import numpy as np

ALPHABET_SIZE = 22

# Expected size of the block between the inverted-nun markers.
T2_LENGTH = 85

NUN_MARKER = "inverted-nun"

# Unicode HEBREW PUNCTUATION NUN HAFUKHA, used by editions that mark the
# inverted nuns explicitly.
NUN_HAFUKHA = "׆"

# ASCII marker token accepted/emitted by the Latin transliteration format.
NUN_TOKEN = "[NUN]"


class CorpusFormatError(ValueError):
    """Raw input cannot be turned into a letter stream."""


class TransliterationError(ValueError):
    """A character is outside the transliteration alphabet."""


class MarkerError(ValueError):
    """Inverted-nun markers are missing, duplicated or inconsistent."""


# One row per base letter: (name, latin symbol, hebrew codepoint).
# Vav is written "!" (the symbol used for it in pattern notation); "V" is
# accepted as an input alias.  Tet gets "+" so the Latin column stays a
# bijection ("T" belongs to tav).
_LETTER_TABLE = [
    ("alef", "A", "א"),
    ("bet", "B", "ב"),
    ("gimel", "G", "ג"),
    ("dalet", "D", "ד"),
    ("hey", "H", "ה"),
    ("vav", "!", "ו"),
    ("zayin", "Z", "ז"),
    ("chet", "X", "ח"),
    ("tet", "+", "ט"),
    ("yud", "'", "י"),
    ("kaf", "K", "כ"),
    ("lamed", "L", "ל"),
    ("mem", "M", "מ"),
    ("nun", "N", "נ"),
    ("samech", "S", "ס"),
    ("ayin", "Y", "ע"),
    ("pey", "P", "פ"),
    ("tzadi", "C", "צ"),
    ("kuf", "Q", "ק"),
    ("resh", "R", "ר"),
    ("shin", "$", "ש"),
    ("tav", "T", "ת"),
]

# Final-form codepoints -> base codepoint.
_FINAL_FORMS = {
    "ך": "כ",  # kaf
    "ם": "מ",  # mem
    "ן": "נ",  # nun
    "ף": "פ",  # pey
    "ץ": "צ",  # tzadi
}

_INPUT_ALIASES = {"V": "vav"}


class Alphabet:
    """The 22-letter alphabet with its Latin and Hebrew transliterations."""

    def __init__(self) -> None:
        self.names = tuple(name for name, _, _ in _LETTER_TABLE)
        self.latin = tuple(latin for _, latin, _ in _LETTER_TABLE)
        self.hebrew = tuple(heb for _, _, heb in _LETTER_TABLE)
        self.code_of_name = {name: i for i, name in enumerate(self.names)}
        self.code_of_latin = {sym: i for i, sym in enumerate(self.latin)}
        self.code_of_hebrew = {heb: i for i, heb in enumerate(self.hebrew)}
        for alias, name in _INPUT_ALIASES.items():
            self.code_of_latin[alias] = self.code_of_name[name]
        self.final_form_map = {
            final: self.code_of_hebrew[base] for final, base in _FINAL_FORMS.items()
        }
        self._check()

    def _check(self) -> None:
        assert len(self.names) == ALPHABET_SIZE
        assert len(set(self.latin)) == ALPHABET_SIZE
        assert len(set(self.hebrew)) == ALPHABET_SIZE
        assert len(self.final_form_map) == 5
        for code, sym in enumerate(self.latin):
            assert self.code_of_latin[sym] == code

    def to_latin(self, symbols) -> str:
        return "".join(self.latin[code] for code in symbols)

    def to_hebrew(self, symbols) -> str:
        return "".join(self.hebrew[code] for code in symbols)


ALPHABET = Alphabet()

NUN_CODE = ALPHABET.code_of_name["nun"]


class LetterStream:
    """Immutable run of letter codes with provenance and marker annotations.

    ``markers`` is a tuple of ``(index, kind)`` pairs; an inverted-nun
    marker sits at the index of its (retained) nun letter.
    """

    __slots__ = ("symbols", "source_tag", "markers")

    def __init__(self, symbols, source_tag: str = "", markers=()) -> None:
        arr = np.asarray(symbols, dtype=np.uint8)
        if arr.ndim != 1:
            arr = arr.reshape(-1)
        if arr.size and int(arr.max()) >= ALPHABET_SIZE:
            bad = int(np.argmax(arr >= ALPHABET_SIZE))
            raise ValueError(f"symbol {arr[bad]} at index {bad} is not a letter code")
        arr.setflags(write=False)
        markers = tuple((int(i), str(kind)) for i, kind in markers)
        prev = -1
        for idx, kind in markers:
            if not 0 <= idx < arr.size:
                raise MarkerError(f"marker index {idx} outside stream of length {arr.size}")
            if idx <= prev:
                raise MarkerError("marker indices must be strictly increasing")
            if kind == NUN_MARKER and arr[idx] != NUN_CODE:
                raise MarkerError(f"inverted-nun marker at index {idx} does not sit on a nun")
            prev = idx
        self.symbols = arr
        self.source_tag = source_tag
        self.markers = markers

    def __len__(self) -> int:
        return int(self.symbols.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LetterStream):
            return NotImplemented
        return (
            len(self) == len(other)
            and bool(np.array_equal(self.symbols, other.symbols))
            and self.markers == other.markers
        )

    def __repr__(self) -> str:
        return f"LetterStream(len={len(self)}, markers={len(self.markers)}, tag={self.source_tag!r})"

    @property
    def marker_indices(self) -> tuple[int, ...]:
        return tuple(idx for idx, _ in self.markers)

    def sub(self, start: int, stop: int, source_tag: str | None = None) -> LetterStream:
        """Contiguous sub-stream; contained markers are kept, re-indexed."""
        start = max(0, start)
        stop = min(len(self), stop)
        inner = tuple(
            (idx - start, kind) for idx, kind in self.markers if start <= idx < stop
        )
        tag = source_tag if source_tag is not None else self.source_tag
        return LetterStream(self.symbols[start:stop], tag, inner)

    def to_latin(self, markers: bool = True, wrap: int = 0) -> str:
        """Canonical Latin rendering; marker nuns appear as the [NUN] token.

        ``wrap`` > 0 breaks the text into lines of that many symbols
        (tokens never split, so the result reloads cleanly).
        """
        marked = {idx for idx, kind in self.markers if kind == NUN_MARKER}
        if not markers:
            marked = set()
        tokens = [
            NUN_TOKEN if i in marked else ALPHABET.latin[code]
            for i, code in enumerate(self.symbols)
        ]
        if wrap <= 0:
            return "".join(tokens)
        lines = ("".join(tokens[i : i + wrap]) for i in range(0, len(tokens), wrap))
        return "\n".join(lines)

    def checksum(self) -> str:
        """SHA-256 of the canonical Latin rendering (markers included)."""
        return hashlib.sha256(self.to_latin().encode("ascii")).hexdigest()


class Pattern:
    """A query word as letter codes, plus the Latin string it came from."""

    __slots__ = ("symbols", "latin")

    def __init__(self, symbols, latin: str = "") -> None:
        self.symbols = tuple(int(c) for c in symbols)
        for c in self.symbols:
            if not 0 <= c < ALPHABET_SIZE:
                raise ValueError(f"symbol {c} is not a letter code")
        self.latin = latin if latin else ALPHABET.to_latin(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pattern):
            return NotImplemented
        return self.symbols == other.symbols

    def __repr__(self) -> str:
        return f"Pattern({self.latin!r})"

    def to_latin(self) -> str:
        return ALPHABET.to_latin(self.symbols)


def encode_pattern(latin: str) -> Pattern:
    """Encode a Latin-transliterated word ('=yud, !=vav, $=shin, +=tet)."""
    symbols = []
    for i, ch in enumerate(latin):
        code = ALPHABET.code_of_latin.get(ch.upper())
        if code is None:
            raise TransliterationError(
                f"character {ch!r} at position {i} is not in the transliteration alphabet"
            )
        symbols.append(code)
    return Pattern(symbols, latin)


def _load_hebrew(text: str, source_tag: str) -> LetterStream:
    text = unicodedata.normalize("NFKC", text)
    symbols: list[int] = []
    markers: list[tuple[int, str]] = []
    for i, ch in enumerate(text):
        code = ALPHABET.code_of_hebrew.get(ch)
        if code is None:
            code = ALPHABET.final_form_map.get(ch)
        if code is not None:
            symbols.append(code)
            continue
        if ch == NUN_HAFUKHA:
            # The inverted nun counts as a letter and is remembered as a marker.
            markers.append((len(symbols), NUN_MARKER))
            symbols.append(NUN_CODE)
            continue
        cat = unicodedata.category(ch)
        if cat[0] in "MZPNC":
            continue  # points/accents, spacing, punctuation, digits, controls
        raise CorpusFormatError(f"character {ch!r} at position {i} is not a Hebrew letter")
    return LetterStream(symbols, source_tag, markers)


def _load_latin(text: str, source_tag: str) -> LetterStream:
    symbols: list[int] = []
    markers: list[tuple[int, str]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if text[i : i + len(NUN_TOKEN)].upper() == NUN_TOKEN:
            markers.append((len(symbols), NUN_MARKER))
            symbols.append(NUN_CODE)
            i += len(NUN_TOKEN)
            continue
        if ch.isspace():
            i += 1
            continue
        code = ALPHABET.code_of_latin.get(ch.upper())
        if code is None:
            raise CorpusFormatError(
                f"character {ch!r} at position {i} is not in the transliteration alphabet"
            )
        symbols.append(code)
        i += 1
    return LetterStream(symbols, source_tag, markers)


def load_corpus(data: bytes | str, fmt: str, source_tag: str = "") -> LetterStream:
    """Ingest raw text into a validated letter stream.

    ``fmt`` is "hebrew-utf8" or "latin-translit" ("hebrew"/"latin" for
    short).  Final forms are normalized, whitespace/points/punctuation are
    stripped, and inverted nuns are kept as nun letters plus a marker.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusFormatError(f"undecodable byte at offset {exc.start}") from exc
    else:
        text = data
    key = fmt.strip().lower()
    if key in ("hebrew-utf8", "hebrew"):
        return _load_hebrew(text, source_tag)
    if key in ("latin-translit", "latin"):
        return _load_latin(text, source_tag)
    raise ValueError(f"unknown corpus format {fmt!r}")


def extract_t2(stream: LetterStream, expected_length: int | None = None) -> LetterStream:
    """The sub-stream strictly between the two inverted-nun markers.

    ``expected_length`` defaults to 85 for streams whose source_tag marks
    them as the reference corpus; pass an int to enforce a length, or
    leave None to accept whatever is there.
    """
    nuns = [idx for idx, kind in stream.markers if kind == NUN_MARKER]
    if len(nuns) != 2:
        raise MarkerError(f"expected exactly 2 inverted-nun markers, found {len(nuns)}")
    if expected_length is None and "reference" in stream.source_tag:
        expected_length = T2_LENGTH
    out = stream.sub(nuns[0] + 1, nuns[1], source_tag=f"t2({stream.source_tag})")
    if expected_length is not None and len(out) != expected_length:
        raise MarkerError(
            f"block between markers has {len(out)} letters, expected {expected_length}"
        )
    return out


def letter_histogram(stream: LetterStream) -> dict[int, int]:
    """Count of each letter code present; counts sum to the stream length."""
    counts = np.bincount(stream.symbols, minlength=0)
    return {code: int(c) for code, c in enumerate(counts) if c}


def load_offset_annotations(text: str) -> list[tuple[int, int, str]]:
    """Parse an offset-annotation sidecar: TSV lines "start  end  label".

    Offsets are letter indexes, end exclusive.  Blank lines and #-comments
    are ignored.  This is the only verse-lookup mechanism provided;
    scripture formats are not parsed.
    """
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise CorpusFormatError(f"sidecar line {lineno}: expected 3 tab-separated fields")
        start, end, label = parts
        try:
            out.append((int(start), int(end), label))
        except ValueError as exc:
            raise CorpusFormatError(f"sidecar line {lineno}: non-integer offset") from exc
    out.sort()
    return out


def annotation_for(annotations: list[tuple[int, int, str]], index: int) -> str:
    """Label of the annotation span containing ``index``, or ""."""
    for start, end, label in annotations:
        if start <= index < end:
            return label
    return ""
