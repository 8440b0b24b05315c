"""Equidistant-letter-sequence search.

An ELS occurrence is an arithmetic index progression start, start+skip,
... whose letters spell a pattern.  Negative skips read the pattern
against stream direction.  Skip 1 is the surface text; minimal-skip
searches therefore start at 2 by default.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .corpus import LetterStream, Pattern

DEFAULT_MIN_SKIP = 2


@dataclass(frozen=True)
class ElsMatch:
    """One occurrence: start index, skip, pattern length."""

    start: int
    skip: int
    length: int

    @property
    def indices(self) -> range:
        return range(self.start, self.start + self.length * self.skip, self.skip)

    @property
    def span(self) -> tuple[int, int]:
        """(lowest, highest) letter index touched by the progression."""
        ids = self.indices
        return (min(ids[0], ids[-1]), max(ids[0], ids[-1]))

    def verify(self, stream: LetterStream, pattern: Pattern) -> bool:
        """Re-check the type invariants against a concrete stream/pattern."""
        if self.length != len(pattern):
            return False
        n = len(stream)
        for k, idx in enumerate(self.indices):
            if not 0 <= idx < n or stream.symbols[idx] != pattern.symbols[k]:
                return False
        return True


@dataclass(frozen=True)
class SkipRange:
    """Absolute-skip search bounds; both signs searched when include_negative."""

    min_skip: int
    max_skip: int
    include_negative: bool = True

    def __post_init__(self) -> None:
        if self.min_skip < 1:
            raise ValueError("min_skip must be >= 1")
        if self.max_skip < self.min_skip:
            raise ValueError("max_skip must be >= min_skip")


def default_skip_range(stream: LetterStream, pattern: Pattern) -> SkipRange:
    """[2, (N-1)//(len-1)], both signs: every skip that still fits the stream."""
    if len(pattern) > 1:
        widest = max(DEFAULT_MIN_SKIP, (len(stream) - 1) // (len(pattern) - 1))
    else:
        widest = DEFAULT_MIN_SKIP
    return SkipRange(DEFAULT_MIN_SKIP, widest, include_negative=True)


def find_at_skip(stream: LetterStream, pattern: Pattern, skip: int) -> list[ElsMatch]:
    """Every match of the pattern at one fixed skip, sorted by start."""
    if len(pattern) == 0:
        raise ValueError("pattern must be non-empty")
    starts = kernels.els_scan(stream.symbols, pattern.symbols, skip)
    return [ElsMatch(int(s), skip, len(pattern)) for s in starts]


def find_minimal(
    stream: LetterStream, pattern: Pattern, skip_range: SkipRange | None = None
) -> ElsMatch | None:
    """A minimal-|skip| match within the range, or None.

    Ties at the same |skip| break to the smaller start index, then to the
    positive skip.
    """
    if len(pattern) == 0:
        raise ValueError("pattern must be non-empty")
    if skip_range is None:
        skip_range = default_skip_range(stream, pattern)
    for step in range(skip_range.min_skip, skip_range.max_skip + 1):
        skips = (step, -step) if skip_range.include_negative else (step,)
        best: ElsMatch | None = None
        for skip in skips:
            starts = kernels.els_scan(stream.symbols, pattern.symbols, skip)
            if starts.size == 0:
                continue
            cand = ElsMatch(int(starts[0]), skip, len(pattern))
            if best is None or (cand.start, cand.skip < 0) < (best.start, best.skip < 0):
                best = cand
        if best is not None:
            return best
    return None


def extend(stream: LetterStream, match: ElsMatch, back: int, fwd: int) -> tuple[int, ...]:
    """Letters along the widened progression, in progression order.

    ``back`` extra steps before the match and ``fwd`` after it; the result
    has back + match.length + fwd letters.
    """
    if back < 0 or fwd < 0:
        raise ValueError("back and fwd must be >= 0")
    first = match.start - back * match.skip
    count = back + match.length + fwd
    n = len(stream)
    out = []
    idx = first
    for _ in range(count):
        if not 0 <= idx < n:
            raise IndexError(f"extension index {idx} is outside the stream")
        out.append(int(stream.symbols[idx]))
        idx += match.skip
    return tuple(out)


def proximity(m1: ElsMatch, m2: ElsMatch) -> int:
    """Letter gap between the two matches' index spans (0 when they overlap)."""
    lo1, hi1 = m1.span
    lo2, hi2 = m2.span
    if lo1 > lo2:
        (lo1, hi1), (lo2, hi2) = (lo2, hi2), (lo1, hi1)
    return max(0, lo2 - hi1)
