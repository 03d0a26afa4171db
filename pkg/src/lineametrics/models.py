"""Run spectra induced by within-line boundary placement, plus closed-form
models of that placement.

For a corpus built from a single line type of length N, the boundary
frequencies x_1..x_N inside the line determine the expected run spectrum:
a span of n syllables needs a boundary to start from (weight x_l / X) and
a boundary to land on (weight x at position l+n, wrapping modulo N). The
resulting spectrum is periodic, symmetric within each period, and maximal
at the line length; two parametric profiles (flat, and odd/even
alternating) admit closed forms that these functions also evaluate.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corpus import VerseDocument
from .errors import EmptyCorpusError, InvalidParameterError
from .lines import (
    BoundaryProfile,
    boundary_array,
    boundary_profile,
    line_length_profile,
)
from .spectrum import DEFAULT_MAX_RUN, RunSpectrum, run_spectrum

__all__ = [
    "InducedSpectrum",
    "induced_spectrum",
    "induced_spectrum_convolution",
    "FlatLineModel",
    "OscillatingLineModel",
    "DeltaGrid",
    "delta_grid",
    "PropertyReport",
    "verify_spectrum_properties",
    "SpectrumComparison",
    "measured_vs_induced",
]

PROPERTY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class InducedSpectrum:
    """One period of the spectrum induced by a within-line boundary profile."""

    period: int
    values: np.ndarray
    boundary_sum: float

    def value(self, n: int) -> float:
        """Value at span n, using the periodic extension for n > period."""
        if n < 1:
            raise InvalidParameterError("span must be >= 1")
        return float(self.values[(n - 1) % self.period])

    def extend(self, max_run: int) -> np.ndarray:
        """Periodic extension over spans 1..max_run."""
        if max_run < 1:
            raise InvalidParameterError("max_run must be >= 1")
        reps = -(-max_run // self.period)
        return np.tile(self.values, reps)[:max_run]

    def mean(self) -> float:
        return float(self.values.mean())


def induced_spectrum(
    profile: BoundaryProfile | Sequence[float] | np.ndarray,
) -> InducedSpectrum:
    """Induce one period of the run spectrum from boundary frequencies.

    values[n-1] = (1/X) * sum_l x_l * x_{l+n mod N} with X = sum(x); the
    wrap index rule maps residue 0 back to position N.
    """
    x = boundary_array(profile)
    n_len = x.size
    boundary_sum = float(x.sum())
    values = np.empty(n_len, dtype=np.float64)
    for n in range(1, n_len + 1):
        values[n - 1] = float(x @ np.roll(x, -(n % n_len))) / boundary_sum
    return InducedSpectrum(n_len, values, boundary_sum)


def induced_spectrum_convolution(
    profile: BoundaryProfile | Sequence[float] | np.ndarray,
) -> InducedSpectrum:
    """Same spectrum via polynomial convolution of x with its reversal.

    The linear cross-correlation coefficients are folded modulo the period;
    the result must match induced_spectrum to floating-point accuracy.
    """
    x = boundary_array(profile)
    n_len = x.size
    boundary_sum = float(x.sum())
    conv = np.convolve(x, x[::-1])
    # conv[k] is the linear autocorrelation at lag (n_len - 1 - k); the
    # circular value at lag n adds the wrapped lag n - N.
    values = np.empty(n_len, dtype=np.float64)
    for n in range(1, n_len + 1):
        total = conv[2 * n_len - 1 - n]
        if n < n_len:
            total = total + conv[n_len - 1 - n]
        values[n - 1] = float(total) / boundary_sum
    return InducedSpectrum(n_len, values, boundary_sum)


@dataclass(frozen=True)
class FlatLineModel:
    """Uniform interior boundary rate alpha with a guaranteed line-end boundary."""

    alpha: float
    length: int

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha <= 1.0:
            raise InvalidParameterError("alpha must lie in (0, 1]")
        if self.length < 2:
            raise InvalidParameterError("line length must be >= 2")

    def boundary_profile(self) -> np.ndarray:
        x = np.full(self.length, self.alpha, dtype=np.float64)
        x[-1] = 1.0
        return x

    @property
    def boundary_sum(self) -> float:
        return 1.0 + (self.length - 1) * self.alpha

    def mean_value(self) -> float:
        """Average spectrum level: alpha + (1 - alpha) / N."""
        return self.alpha + (1.0 - self.alpha) / self.length

    def peak_delta(self) -> float:
        """Peak height above the off-peak level: (1 - alpha)^2 / X."""
        return (1.0 - self.alpha) ** 2 / self.boundary_sum

    def spectrum(self) -> InducedSpectrum:
        """Closed-form induced spectrum of the flat profile."""
        n_len, alpha = self.length, self.alpha
        x_sum = self.boundary_sum
        off = (2.0 * alpha + (n_len - 2) * alpha**2) / x_sum
        peak = (1.0 + (n_len - 1) * alpha**2) / x_sum
        values = np.full(n_len, off, dtype=np.float64)
        values[-1] = peak
        return InducedSpectrum(n_len, values, x_sum)


@dataclass(frozen=True)
class OscillatingLineModel:
    """Alternating interior rates: alpha after odd positions, beta after even."""

    alpha: float
    beta: float
    length: int

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha <= 1.0 or not 0.0 < self.beta <= 1.0:
            raise InvalidParameterError("alpha and beta must lie in (0, 1]")
        if self.length < 4 or self.length % 2 != 0:
            raise InvalidParameterError("line length must be even and >= 4")

    def boundary_profile(self) -> np.ndarray:
        x = np.empty(self.length, dtype=np.float64)
        x[0::2] = self.alpha
        x[1::2] = self.beta
        x[-1] = 1.0
        return x

    @property
    def boundary_sum(self) -> float:
        half = self.length // 2
        return half * self.alpha + (half - 1) * self.beta + 1.0

    def mean_value(self) -> float:
        """Average spectrum level: (alpha + beta) / 2 + (1 - beta) / N."""
        return (self.alpha + self.beta) / 2.0 + (1.0 - self.beta) / self.length

    def even_odd_delta(self) -> float:
        """Spectrum value at even spans minus that at odd spans."""
        gap = self.alpha - self.beta
        return (gap / self.boundary_sum) * (
            self.length * gap / 2.0 - 2.0 * (1.0 - self.beta)
        )

    def peak_delta(self) -> float:
        """Line-length peak above the even-span level: (1 - beta)^2 / X."""
        return (1.0 - self.beta) ** 2 / self.boundary_sum

    def spectrum(self) -> InducedSpectrum:
        """Closed-form induced spectrum of the alternating profile."""
        n_len, alpha, beta = self.length, self.alpha, self.beta
        x_sum = self.boundary_sum
        odd = (2.0 * alpha + (n_len - 2) * alpha * beta) / x_sum
        even = (
            2.0 * beta + (n_len / 2.0) * alpha**2 + ((n_len - 4) / 2.0) * beta**2
        ) / x_sum
        peak = (
            1.0 + (n_len / 2.0) * alpha**2 + ((n_len - 2) / 2.0) * beta**2
        ) / x_sum
        values = np.empty(n_len, dtype=np.float64)
        values[0::2] = odd
        values[1::2] = even
        values[-1] = peak
        return InducedSpectrum(n_len, values, x_sum)


@dataclass(frozen=True)
class DeltaGrid:
    """Even-odd and peak contrasts of the alternating model over a parameter grid."""

    length: int
    alphas: np.ndarray
    betas: np.ndarray
    even_odd: np.ndarray
    peak: np.ndarray

    def negative_even_odd_fraction(self) -> float:
        """Fraction of grid cells where even spans sit below odd spans."""
        return float(np.count_nonzero(self.even_odd < 0) / self.even_odd.size)


def delta_grid(
    length: int,
    alpha_range: tuple[float, float] = (0.01, 1.0),
    beta_range: tuple[float, float] = (0.01, 1.0),
    steps: int = 100,
) -> DeltaGrid:
    """Evaluate the alternating-model contrasts on a dense (alpha, beta) grid.

    Rows index beta, columns index alpha.
    """
    if steps < 2:
        raise InvalidParameterError("steps must be >= 2")
    alphas = np.linspace(alpha_range[0], alpha_range[1], steps)
    betas = np.linspace(beta_range[0], beta_range[1], steps)
    if np.any(alphas <= 0) or np.any(betas <= 0):
        raise InvalidParameterError("grid parameters must stay in (0, 1]")
    alpha_grid, beta_grid = np.meshgrid(alphas, betas)
    half = length // 2
    if length < 4 or length % 2 != 0:
        raise InvalidParameterError("line length must be even and >= 4")
    x_sum = half * alpha_grid + (half - 1) * beta_grid + 1.0
    gap = alpha_grid - beta_grid
    even_odd = (gap / x_sum) * (length * gap / 2.0 - 2.0 * (1.0 - beta_grid))
    peak = (1.0 - beta_grid) ** 2 / x_sum
    return DeltaGrid(length, alphas, betas, even_odd, peak)


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of checking the structural identities of an induced spectrum."""

    passed: bool
    failures: list[str]

    def __bool__(self) -> bool:
        return self.passed


def verify_spectrum_properties(
    profile: BoundaryProfile | Sequence[float] | np.ndarray,
    tolerance: float = PROPERTY_TOLERANCE,
) -> PropertyReport:
    """Check the five structural identities of the induced spectrum.

    Verified to the given tolerance: periodic extension matches the base
    period; values are symmetric within the period; the mean equals the
    boundary sum over the period length; the line-length value is maximal;
    and its excess over the mean equals the variance of the profile divided
    by the boundary sum.
    """
    x = boundary_array(profile)
    spec = induced_spectrum(x)
    n_len = spec.period
    values = spec.values
    failures: list[str] = []

    extended = spec.extend(2 * n_len)
    bad = np.nonzero(np.abs(extended[n_len:] - values) > tolerance)[0]
    if bad.size:
        failures.append(f"periodicity broken at span {int(bad[0]) + n_len + 1}")

    for n in range(1, n_len):
        if abs(spec.value(n) - spec.value(n_len - n)) > tolerance:
            failures.append(f"symmetry broken at span {n}")
            break

    mean_expected = spec.boundary_sum / n_len
    if abs(spec.mean() - mean_expected) > tolerance:
        failures.append("mean does not equal boundary_sum / period")

    if np.any(values > values[-1] + tolerance):
        worst = int(np.argmax(values - values[-1])) + 1
        failures.append(f"value at span {worst} exceeds the line-length value")

    variance_form = float(np.sum((x - x.mean()) ** 2)) / spec.boundary_sum
    if abs((values[-1] - spec.mean()) - variance_form) > tolerance:
        failures.append("peak excess does not equal profile variance / boundary sum")

    return PropertyReport(not failures, failures)


@dataclass(frozen=True)
class SpectrumComparison:
    """Measured run spectrum against the profile-induced prediction."""

    core_length: int
    spans: np.ndarray
    measured: np.ndarray
    induced: np.ndarray
    rmse: float
    measured_peak: int
    induced_peak: int


def measured_vs_induced(
    document: VerseDocument, max_run: int = DEFAULT_MAX_RUN
) -> SpectrumComparison:
    """Compare the document's run spectrum with the one its core-class
    boundary profile induces, extended periodically over 1..max_run."""
    profile_info = line_length_profile(document)
    core = profile_info.core_length
    if profile_info.histogram.get(core, 0) < 2:
        raise EmptyCorpusError("need at least two core-length lines")
    core_profile = boundary_profile(document, core)
    induced = induced_spectrum(core_profile).extend(max_run)
    measured_spec: RunSpectrum = run_spectrum(document, max_run)
    measured = measured_spec.values
    rmse = float(np.sqrt(np.mean((measured - induced) ** 2)))
    return SpectrumComparison(
        core_length=core,
        spans=np.arange(1, max_run + 1),
        measured=measured,
        induced=induced,
        rmse=rmse,
        measured_peak=int(np.argmax(measured)) + 1,
        induced_peak=int(np.argmax(induced)) + 1,
    )
