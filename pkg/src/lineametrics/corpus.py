"""Documents as syllable-count sequences, with line structure for verse."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import EmptyCorpusError, InvalidParameterError
from .syllables import SyllableLexicon, SyllabifiedText, syllabify_text

__all__ = [
    "ProseDocument",
    "LineRecord",
    "VerseDocument",
    "WordLengthHistogram",
    "prose_from_text",
    "verse_from_text",
    "load_prose",
    "load_verse",
    "word_length_histogram",
]


@dataclass(frozen=True)
class ProseDocument:
    """An unlineated document: the ordered syllable counts of its words."""

    counts: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.counts, dtype=np.int64)
        if arr.ndim != 1:
            raise InvalidParameterError("counts must be a flat sequence")
        if arr.size and arr.min() < 1:
            raise InvalidParameterError("all syllable counts must be >= 1")
        object.__setattr__(self, "counts", arr)

    @property
    def word_total(self) -> int:
        return int(self.counts.size)

    @property
    def syllable_total(self) -> int:
        return int(self.counts.sum())


@dataclass(frozen=True)
class LineRecord:
    """One verse line: the syllable counts of its words, in order."""

    word_counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.word_counts:
            raise InvalidParameterError("a line must contain at least one word")
        if any(c < 1 for c in self.word_counts):
            raise InvalidParameterError("all syllable counts must be >= 1")

    @property
    def length(self) -> int:
        return sum(self.word_counts)


@dataclass(frozen=True)
class VerseDocument:
    """A lineated document; concatenating its lines gives the prose view."""

    lines: tuple[LineRecord, ...]

    def __init__(self, lines: Iterable[LineRecord]):
        object.__setattr__(self, "lines", tuple(lines))

    @property
    def line_count(self) -> int:
        return len(self.lines)

    def as_prose(self) -> ProseDocument:
        flat = [c for line in self.lines for c in line.word_counts]
        return ProseDocument(np.asarray(flat, dtype=np.int64))


def prose_from_text(
    text: str, lexicon: SyllableLexicon
) -> tuple[ProseDocument, SyllabifiedText]:
    """Syllabify a whole text as one stream; newlines are plain whitespace."""
    result = syllabify_text(text, lexicon)
    return ProseDocument(np.asarray(result.counts, dtype=np.int64)), result


def verse_from_text(
    text: str, lexicon: SyllableLexicon
) -> tuple[VerseDocument, SyllabifiedText]:
    """Syllabify line by line; blank lines and wordless lines are skipped."""
    lines: list[LineRecord] = []
    tokens = []
    unknown: Counter = Counter()
    for raw_line in text.splitlines():
        result = syllabify_text(raw_line, lexicon)
        if not result.tokens:
            continue
        lines.append(LineRecord(tuple(result.counts)))
        tokens.extend(result.tokens)
        unknown.update(result.unknown_words)
    return VerseDocument(lines), SyllabifiedText(tokens, unknown)


def _read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc}") from exc


def load_prose(path: str | Path, lexicon: SyllableLexicon) -> ProseDocument:
    document, _ = prose_from_text(_read_text(path), lexicon)
    return document


def load_verse(path: str | Path, lexicon: SyllableLexicon) -> VerseDocument:
    document, _ = verse_from_text(_read_text(path), lexicon)
    return document


class WordLengthHistogram:
    """Word counts keyed by syllable length.

    Counts may be fractional so that ideal model histograms fit the same
    interface as observed ones.
    """

    def __init__(self, counts: Mapping[int, float]):
        cleaned: dict[int, float] = {}
        for length, count in counts.items():
            if int(length) < 1:
                raise InvalidParameterError("word lengths must be >= 1")
            if count < 0:
                raise InvalidParameterError("counts must be non-negative")
            if count > 0:
                cleaned[int(length)] = float(count)
        if not cleaned:
            raise EmptyCorpusError("empty corpus")
        self.counts = dict(sorted(cleaned.items()))

    @classmethod
    def from_lengths(cls, lengths: Sequence[int] | np.ndarray) -> "WordLengthHistogram":
        lengths = np.asarray(lengths, dtype=np.int64)
        if lengths.size == 0:
            raise EmptyCorpusError("empty corpus")
        values, freqs = np.unique(lengths, return_counts=True)
        return cls({int(v): int(f) for v, f in zip(values, freqs)})

    @classmethod
    def load(cls, path: str | Path) -> "WordLengthHistogram":
        """Read a TSV histogram, one ``length<TAB>count`` entry per line."""
        counts: dict[int, float] = {}
        with open(path, encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    length, count = line.split("\t")
                    counts[int(length)] = float(count)
                except ValueError as exc:
                    raise InvalidParameterError(
                        f"{path}:{lineno}: malformed histogram line {line!r}"
                    ) from exc
        return cls(counts)

    @property
    def max_length(self) -> int:
        return max(self.counts)

    @property
    def word_total(self) -> float:
        return sum(self.counts.values())

    @property
    def syllable_total(self) -> float:
        return sum(n * c for n, c in self.counts.items())

    @property
    def mean_word_length(self) -> float:
        return self.syllable_total / self.word_total

    def proportions(self) -> dict[int, float]:
        """Normalized frequencies; they sum to one."""
        total = self.word_total
        return {n: c / total for n, c in self.counts.items()}


def word_length_histogram(document: ProseDocument) -> WordLengthHistogram:
    if document.word_total == 0:
        raise EmptyCorpusError("empty corpus")
    return WordLengthHistogram.from_lengths(document.counts)
