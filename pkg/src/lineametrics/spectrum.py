"""Whole-word run statistics over a circularized document.

The run spectrum records, for each span length n, how often a stretch of
complete words totalling exactly n syllables occurs: the document is closed
into a circle, and every word boundary is walked forward through cumulative
word sums. The count for each n is normalized by the number of boundaries
walked, so the value at n is the fraction of word starts whose run hits n
exactly. Unlineated English sits at a flat level equal to the reciprocal
mean word length; lineated text shows peaks at the line length and its
multiples.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .corpus import ProseDocument, VerseDocument, WordLengthHistogram
from .errors import EmptyCorpusError, InvalidParameterError

__all__ = [
    "RunSpectrum",
    "run_spectrum",
    "internal_boundary_proportion",
    "GeometricWordModel",
    "fit_geometric",
    "TransitionMatrix",
    "transition_matrix",
    "PeakSignificance",
    "peak_significance",
]

DEFAULT_MAX_RUN = 30


@dataclass(frozen=True)
class RunSpectrum:
    """Normalized whole-word run frequencies for spans 1..max_run."""

    raw_counts: np.ndarray
    word_total: int
    syllable_total: int

    @property
    def max_run(self) -> int:
        return int(self.raw_counts.size)

    @property
    def values(self) -> np.ndarray:
        """Per-boundary frequencies; index 0 holds the value for span 1."""
        return self.raw_counts / self.word_total

    def value(self, n: int) -> float:
        if not 1 <= n <= self.max_run:
            raise InvalidParameterError(f"span {n} outside 1..{self.max_run}")
        return float(self.raw_counts[n - 1]) / self.word_total

    def mean(self) -> float:
        return float(self.values.mean())


def _boundary_indicator(document: ProseDocument) -> np.ndarray:
    """1.0 at every gap index that ends a word, over gaps 0..I-1.

    Gap i sits after syllable i+1; the last gap (I-1) closes the circle and
    is always a word end.
    """
    ends = np.cumsum(document.counts) - 1
    indicator = np.zeros(document.syllable_total, dtype=np.float64)
    indicator[ends] = 1.0
    return indicator


def run_spectrum(
    document: ProseDocument | VerseDocument, max_run: int = DEFAULT_MAX_RUN
) -> RunSpectrum:
    """Count exact whole-word spans of 1..max_run syllables on the circle.

    Verse documents are analyzed as their concatenated word stream; the
    circular closure joins the end of the document to its beginning.
    """
    if isinstance(document, VerseDocument):
        document = document.as_prose()
    if document.word_total == 0:
        raise EmptyCorpusError("empty corpus")
    if max_run < 1:
        raise InvalidParameterError("max_run must be >= 1")
    indicator = _boundary_indicator(document)
    counts = np.empty(max_run, dtype=np.int64)
    for n in range(1, max_run + 1):
        # A span of n starting at boundary g matches iff gap (g+n) mod I is
        # also a boundary, i.e. the circular autocorrelation at lag n.
        counts[n - 1] = int(round(indicator @ np.roll(indicator, -(n % indicator.size))))
    return RunSpectrum(counts, document.word_total, document.syllable_total)


def internal_boundary_proportion(histogram: WordLengthHistogram) -> float:
    """Fraction of syllable boundaries that fall inside words.

    A word of n syllables contributes n-1 internal boundaries out of its n
    boundaries, so the proportion is sum((n-1)*c_n) / sum(n*c_n).
    """
    internal = sum((n - 1) * c for n, c in histogram.counts.items())
    total = histogram.syllable_total
    if total <= 0:
        raise EmptyCorpusError("empty corpus")
    return internal / total


@dataclass(frozen=True)
class GeometricWordModel:
    """Memoryless word-length model: P(length=n) = q * (1-q)^(n-1)."""

    q: float

    def __post_init__(self) -> None:
        if not 0.0 < self.q <= 1.0:
            raise InvalidParameterError("q must lie in (0, 1]")

    def pmf(self, n: int) -> float:
        if n < 1:
            raise InvalidParameterError("word length must be >= 1")
        return self.q * (1.0 - self.q) ** (n - 1)

    def histogram(
        self, max_length: int = 40, total: float = 1.0
    ) -> WordLengthHistogram:
        """Ideal histogram truncated at max_length and renormalized."""
        raw = {n: self.pmf(n) for n in range(1, max_length + 1)}
        mass = sum(raw.values())
        return WordLengthHistogram({n: total * p / mass for n, p in raw.items()})

    @property
    def mean_word_length(self) -> float:
        return 1.0 / self.q


def fit_geometric(histogram: WordLengthHistogram) -> GeometricWordModel:
    """Estimate q as the reciprocal of the mean word length (words/syllables)."""
    return GeometricWordModel(histogram.word_total / histogram.syllable_total)


@dataclass(frozen=True)
class TransitionMatrix:
    """Bigram word-length transitions P(next=n | previous=m)."""

    probabilities: np.ndarray
    pair_counts: np.ndarray
    correlation: float
    degenerate: bool

    @property
    def max_length(self) -> int:
        return int(self.probabilities.shape[0])

    def probability(self, following: int, given: int) -> float:
        """P(an n-syllable word follows an m-syllable word)."""
        k = self.max_length
        if not (1 <= following <= k and 1 <= given <= k):
            raise InvalidParameterError("lengths outside observed range")
        return float(self.probabilities[given - 1, following - 1])

    def marginal(self) -> np.ndarray:
        totals = self.pair_counts.sum()
        return self.pair_counts.sum(axis=0) / totals


def transition_matrix(document: ProseDocument | VerseDocument) -> TransitionMatrix:
    """Adjacent word-length transition probabilities plus their correlation."""
    if isinstance(document, VerseDocument):
        document = document.as_prose()
    if document.word_total < 2:
        raise EmptyCorpusError("need at least two words for adjacency statistics")
    counts = document.counts
    prev, nxt = counts[:-1], counts[1:]
    k = int(counts.max())
    flat = np.bincount((prev - 1) * k + (nxt - 1), minlength=k * k)
    pair_counts = flat.reshape(k, k).astype(np.int64)
    row_sums = pair_counts.sum(axis=1, keepdims=True)
    with np.errstate(invalid="ignore", divide="ignore"):
        probabilities = np.where(row_sums > 0, pair_counts / row_sums, 0.0)
    degenerate = bool(prev.std() == 0 or nxt.std() == 0)
    if degenerate:
        correlation = 0.0
    else:
        correlation = float(np.corrcoef(prev, nxt)[0, 1])
    return TransitionMatrix(probabilities, pair_counts, correlation, degenerate)


@dataclass(frozen=True)
class PeakSignificance:
    """How far the value at the core length stands above the off-peak level."""

    z_score: float
    peak_value: float
    baseline_mean: float
    baseline_std: float
    degenerate: bool


def peak_significance(spectrum: RunSpectrum, core_length: int) -> PeakSignificance:
    """Z-score of the core-length value against non-multiple spans.

    The baseline excludes every multiple of the core length so that
    harmonics of a genuine peak do not inflate the spread.
    """
    if core_length < 1:
        raise InvalidParameterError("core length must be >= 1")
    if spectrum.max_run < 2 * core_length:
        raise InvalidParameterError(
            "max_run must be at least twice the core length for a stable baseline"
        )
    values = spectrum.values
    spans = np.arange(1, spectrum.max_run + 1)
    off_peak = values[spans % core_length != 0]
    peak = float(values[core_length - 1])
    mu = float(off_peak.mean())
    sigma = float(off_peak.std())
    if sigma == 0.0:
        z = 0.0 if peak == mu else math.copysign(math.inf, peak - mu)
        return PeakSignificance(z, peak, mu, sigma, degenerate=True)
    return PeakSignificance((peak - mu) / sigma, peak, mu, sigma, degenerate=False)
