"""Deterministic corpus generators for statistical oracles.

All randomness comes from SplitMix64 (Steele, Lea & Flood 2014) used in
counter mode: draw i of a stream is the SplitMix64 output for state
seed + (i+1) * 0x9E3779B97F4A7C15. The generator is tiny, published with
reference outputs, and trivially portable, so identical (parameters, seed)
reproduce byte-identical documents on any platform. Uniform doubles take
the top 53 bits of each output.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .corpus import LineRecord, ProseDocument, VerseDocument
from .errors import InvalidParameterError
from .lines import BoundaryProfile, boundary_array

__all__ = [
    "splitmix64",
    "uniforms",
    "geometric_prose",
    "lines_from_profile",
    "placeholder_word",
    "render_prose",
    "render_verse",
]

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)

GEOMETRIC_TRUNCATION = 40


def splitmix64(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """SplitMix64 outputs offset+1 .. offset+count for the given seed."""
    if count < 0 or offset < 0:
        raise InvalidParameterError("count and offset must be non-negative")
    base = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    idx = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    z = (base + idx * _GOLDEN) & _MASK
    z = ((z ^ (z >> np.uint64(30))) * _MIX1) & _MASK
    z = ((z ^ (z >> np.uint64(27))) * _MIX2) & _MASK
    return z ^ (z >> np.uint64(31))


def uniforms(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Doubles in [0, 1) built from the top 53 bits of each output."""
    return (splitmix64(seed, count, offset) >> np.uint64(11)) * 2.0**-53


def _truncated_geometric_cdf(q: float, max_length: int) -> np.ndarray:
    lengths = np.arange(1, max_length + 1)
    pmf = q * (1.0 - q) ** (lengths - 1)
    pmf = pmf / pmf.sum()
    return np.cumsum(pmf)


def geometric_prose(q: float, words: int, seed: int) -> ProseDocument:
    """Independent word lengths from a geometric distribution.

    The distribution is truncated at 40 syllables and renormalized; the
    tail beyond that carries negligible mass for any practical q.
    """
    if not 0.0 < q <= 1.0:
        raise InvalidParameterError("q must lie in (0, 1]")
    if words < 1:
        raise InvalidParameterError("word count must be >= 1")
    cdf = _truncated_geometric_cdf(q, GEOMETRIC_TRUNCATION)
    draws = uniforms(seed, words)
    counts = np.searchsorted(cdf, draws, side="right") + 1
    return ProseDocument(counts.astype(np.int64))


def lines_from_profile(
    profile: BoundaryProfile | Sequence[float] | np.ndarray,
    lines: int,
    seed: int,
) -> VerseDocument:
    """Independent lines of one length drawn from a boundary profile.

    Each interior position of each line receives a boundary with its
    profile frequency; the final position is always a boundary, and word
    lengths are the gaps between boundaries. The uniform stream is consumed
    line by line, position by position.
    """
    x = boundary_array(profile)
    if lines < 1:
        raise InvalidParameterError("line count must be >= 1")
    length = x.size
    interior = x[:-1]
    draws = uniforms(seed, lines * (length - 1)).reshape(lines, length - 1)
    bounds = np.ones((lines, length), dtype=bool)
    bounds[:, :-1] = draws < interior
    # Word lengths are gaps between boundary positions over the whole
    # concatenated stream; line-final boundaries keep words inside lines.
    positions = np.flatnonzero(bounds.ravel()) + 1
    word_lengths = np.diff(positions, prepend=0)
    line_of_word = (positions - 1) // length
    words_per_line = np.bincount(line_of_word, minlength=lines)
    pieces = np.split(word_lengths, np.cumsum(words_per_line)[:-1])
    return VerseDocument(
        LineRecord(tuple(int(c) for c in piece)) for piece in pieces
    )


def placeholder_word(syllables: int) -> str:
    """A pseudo-word of consonant-vowel units the heuristic counts exactly."""
    if syllables < 1:
        raise InvalidParameterError("syllable count must be >= 1")
    return "da" * syllables


def render_prose(document: ProseDocument, words_per_line: int = 20) -> str:
    """Placeholder text for a prose document, wrapped for readability."""
    words = [placeholder_word(int(c)) for c in document.counts]
    rows = [
        " ".join(words[i : i + words_per_line])
        for i in range(0, len(words), words_per_line)
    ]
    return "\n".join(rows) + "\n" if rows else ""


def render_verse(document: VerseDocument) -> str:
    """Placeholder text for a verse document, one line per text line."""
    rows = [
        " ".join(placeholder_word(c) for c in line.word_counts)
        for line in document.lines
    ]
    return "\n".join(rows) + "\n" if rows else ""
