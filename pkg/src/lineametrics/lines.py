"""Line-length profiles, within-line boundary placement, and cut violations."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corpus import ProseDocument, VerseDocument, WordLengthHistogram
from .errors import EmptyCorpusError, InvalidParameterError
from .spectrum import internal_boundary_proportion

__all__ = [
    "VerseProfile",
    "line_length_profile",
    "BoundaryProfile",
    "boundary_array",
    "boundary_profile",
    "alternation_index",
    "ViolationCount",
    "expected_violations",
    "cut_violations",
    "VaryUpResult",
    "vary_up_lineation",
    "variant_ratio",
    "ProfileComparison",
    "profile_vs_word_lengths",
    "mean_word_length_by_class",
]


@dataclass(frozen=True)
class VerseProfile:
    """Histogram of line lengths with the modal (core) length singled out."""

    histogram: dict[int, int]
    core_length: int
    variant_count: int

    @classmethod
    def from_histogram(cls, histogram: dict[int, int]) -> "VerseProfile":
        cleaned = {int(n): int(c) for n, c in histogram.items() if c > 0}
        if not cleaned:
            raise EmptyCorpusError("empty corpus")
        # Modal length; ties break toward the smaller length.
        core = min(cleaned, key=lambda n: (-cleaned[n], n))
        variants = sum(c for n, c in cleaned.items() if n != core)
        return cls(dict(sorted(cleaned.items())), core, variants)

    @property
    def line_count(self) -> int:
        return sum(self.histogram.values())


def line_length_profile(document: VerseDocument) -> VerseProfile:
    if document.line_count == 0:
        raise EmptyCorpusError("empty corpus")
    histogram: dict[int, int] = {}
    for line in document.lines:
        histogram[line.length] = histogram.get(line.length, 0) + 1
    return VerseProfile.from_histogram(histogram)


@dataclass(frozen=True)
class BoundaryProfile:
    """Per-position word-boundary frequencies for lines of one exact length.

    freq[n-1] is the fraction of lines with a word boundary immediately
    after syllable position n; the final position is always a boundary.
    """

    line_length: int
    freq: np.ndarray
    line_count: int

    def at(self, position: int) -> float:
        if not 1 <= position <= self.line_length:
            raise InvalidParameterError(
                f"position {position} outside 1..{self.line_length}"
            )
        return float(self.freq[position - 1])


def boundary_array(profile: "BoundaryProfile | Sequence[float] | np.ndarray") -> np.ndarray:
    """Validate a boundary profile and return it as a float array.

    Accepts a BoundaryProfile or any flat sequence of frequencies in [0, 1]
    whose final entry is 1 (a line always ends at a word end).
    """
    if isinstance(profile, BoundaryProfile):
        x = np.asarray(profile.freq, dtype=np.float64)
    else:
        x = np.asarray(profile, dtype=np.float64)
    if x.ndim != 1 or x.size < 1:
        raise InvalidParameterError("boundary profile must be a flat sequence")
    if np.any(x < 0) or np.any(x > 1):
        raise InvalidParameterError("boundary frequencies must lie in [0, 1]")
    if abs(x[-1] - 1.0) > 1e-9:
        raise InvalidParameterError("the final position must always be a boundary")
    return x


def boundary_profile(document: VerseDocument, line_length: int) -> BoundaryProfile:
    """Boundary frequencies over all lines of exactly the given length."""
    totals = np.zeros(line_length, dtype=np.int64)
    matched = 0
    for line in document.lines:
        if line.length != line_length:
            continue
        matched += 1
        ends = np.cumsum(line.word_counts)
        totals[ends - 1] += 1
    if matched == 0:
        raise EmptyCorpusError(f"no lines of length {line_length}")
    return BoundaryProfile(line_length, totals / matched, matched)


def alternation_index(profile: BoundaryProfile) -> float:
    """Mean boundary frequency at odd positions minus that at even positions.

    The line-end position is excluded from both sides, so the index reads
    positive where odd positions carry more boundaries.
    """
    n = profile.line_length
    if n < 4:
        raise InvalidParameterError("alternation index needs line length >= 4")
    positions = np.arange(1, n + 1)
    odd = profile.freq[(positions % 2 == 1) & (positions <= n - 1)]
    even = profile.freq[(positions % 2 == 0) & (positions <= n - 2)]
    return float(odd.mean() - even.mean())


@dataclass(frozen=True)
class ViolationCount:
    """Line-boundary cuts falling inside words for a fixed segmentation."""

    line_length: int
    cuts: int
    exact: int | None
    expected: float


def expected_violations(
    syllable_total: int, line_length: int, internal_proportion: float
) -> float:
    """Expected word-internal cuts when slicing every line_length syllables."""
    if line_length < 1:
        raise InvalidParameterError("line length must be >= 1")
    if syllable_total < line_length:
        raise InvalidParameterError("document shorter than one line")
    return (syllable_total // line_length) * internal_proportion


def cut_violations(
    document: ProseDocument,
    line_length: int,
    internal_proportion: float | None = None,
) -> ViolationCount:
    """Count cuts at multiples of line_length that land inside words.

    The expected count uses the document's own internal-boundary proportion
    unless one is supplied.
    """
    total = document.syllable_total
    if total < line_length:
        raise InvalidParameterError("document shorter than one line")
    if internal_proportion is None:
        internal_proportion = internal_boundary_proportion(
            WordLengthHistogram.from_lengths(document.counts)
        )
    is_end = np.zeros(total + 1, dtype=bool)
    is_end[np.cumsum(document.counts)] = True
    cut_positions = np.arange(line_length, total + 1, line_length)
    exact = int(np.count_nonzero(~is_end[cut_positions]))
    return ViolationCount(
        line_length,
        cuts=int(cut_positions.size),
        exact=exact,
        expected=expected_violations(total, line_length, internal_proportion),
    )


@dataclass(frozen=True)
class VaryUpResult:
    """Greedy lineation that extends past the target to the next word end."""

    profile: VerseProfile
    lengths: np.ndarray
    partial_length: int | None


def vary_up_lineation(document: ProseDocument, line_length: int) -> VaryUpResult:
    """Segment greedily: close each line at the first word end at or past
    the target length, so every emitted line has length >= line_length.

    A trailing stretch shorter than the target is reported separately and
    excluded from the histogram.
    """
    total = document.syllable_total
    if total < line_length:
        raise InvalidParameterError("document shorter than one line")
    ends = np.cumsum(document.counts)
    lengths: list[int] = []
    start = 0
    partial: int | None = None
    while True:
        target = start + line_length
        if target > total:
            partial = total - start if total > start else None
            break
        idx = int(np.searchsorted(ends, target, side="left"))
        end = int(ends[idx])
        lengths.append(end - start)
        start = end
        if start == total:
            break
    histogram: dict[int, int] = {}
    for length in lengths:
        histogram[length] = histogram.get(length, 0) + 1
    return VaryUpResult(
        VerseProfile.from_histogram(histogram),
        np.asarray(lengths, dtype=np.int64),
        partial,
    )


def variant_ratio(
    verse: VerseProfile,
    prose_hist: WordLengthHistogram,
    verse_syllable_total: int,
) -> float:
    """Observed variant lines relative to the violations a matched prose
    text predicts for the verse's core length."""
    expected = expected_violations(
        verse_syllable_total,
        verse.core_length,
        internal_boundary_proportion(prose_hist),
    )
    if expected == 0:
        raise InvalidParameterError("expected violations is zero")
    return verse.variant_count / expected


@dataclass(frozen=True)
class ProfileComparison:
    """Line-length profile aligned against a word-length distribution."""

    pairs: list[tuple[int, int, float, float]]
    tv_distance: float


def profile_vs_word_lengths(
    profile: VerseProfile,
    histogram: WordLengthHistogram,
    shift: int = 0,
) -> ProfileComparison:
    """Align line length core+j with word length 1+j+shift and compare.

    Both sides are renormalized over the positions they share; the result
    carries the aligned pairs and the total-variation distance between the
    renormalized distributions.
    """
    core = profile.core_length
    shared: list[tuple[int, int, float, float]] = []
    line_mass = 0.0
    word_mass = 0.0
    for line_len, line_count in profile.histogram.items():
        j = line_len - core
        if j < 0:
            continue
        word_len = 1 + j + shift
        word_count = histogram.counts.get(word_len, 0.0)
        if word_count <= 0:
            continue
        shared.append((line_len, word_len, float(line_count), float(word_count)))
        line_mass += line_count
        word_mass += word_count
    if not shared or line_mass == 0 or word_mass == 0:
        raise InvalidParameterError("no shared support between the profiles")
    pairs = [
        (line_len, word_len, lc / line_mass, wc / word_mass)
        for line_len, word_len, lc, wc in shared
    ]
    tv = 0.5 * sum(abs(p_line - p_word) for _, _, p_line, p_word in pairs)
    return ProfileComparison(pairs, tv)


def mean_word_length_by_class(document: VerseDocument) -> dict[int, float]:
    """Mean syllables per word for each line-length class."""
    syllables: dict[int, int] = {}
    words: dict[int, int] = {}
    for line in document.lines:
        n = line.length
        syllables[n] = syllables.get(n, 0) + n
        words[n] = words.get(n, 0) + len(line.word_counts)
    return {n: syllables[n] / words[n] for n in sorted(syllables)}
