import math

import numpy as np
import pytest

from lineametrics import (
    EmptyCorpusError,
    GeometricWordModel,
    InvalidParameterError,
    ProseDocument,
    WordLengthHistogram,
    fit_geometric,
    internal_boundary_proportion,
    peak_significance,
    run_spectrum,
    transition_matrix,
)
from lineametrics.spectrum import RunSpectrum
from lineametrics.synth import geometric_prose

from helpers import brute_force_run_counts


def spectrum_of(counts, max_run):
    return run_spectrum(ProseDocument(np.asarray(counts, dtype=np.int64)), max_run)


class TestRunSpectrum:
    def test_against_brute_force_enumeration(self):
        rng = np.random.default_rng(2024)
        for _ in range(200):
            size = int(rng.integers(1, 13))
            counts = rng.integers(1, 6, size=size).tolist()
            max_run = int(rng.integers(1, 15))
            expected = brute_force_run_counts(counts, max_run)
            got = spectrum_of(counts, max_run)
            assert got.raw_counts.tolist() == expected

    def test_small_circular_example(self):
        # Oracle-enumerated: counts [1,2,1] give span hits (2,2,2,3) over
        # three word-start boundaries.
        spec = spectrum_of([1, 2, 1], 4)
        assert spec.raw_counts.tolist() == brute_force_run_counts([1, 2, 1], 4)
        assert spec.raw_counts.tolist() == [2, 2, 2, 3]
        assert np.allclose(spec.values, [2 / 3, 2 / 3, 2 / 3, 1.0])

    def test_all_monosyllables_flat_at_one(self):
        spec = spectrum_of([1] * 50, 30)
        assert np.all(spec.values == 1.0)

    def test_rotation_invariance(self):
        rng = np.random.default_rng(7)
        counts = rng.integers(1, 5, size=40).tolist()
        base = spectrum_of(counts, 20).raw_counts
        for shift in (1, 7, 19):
            rotated = counts[shift:] + counts[:shift]
            assert spectrum_of(rotated, 20).raw_counts.tolist() == base.tolist()

    def test_geometric_prose_is_flat(self):
        doc = geometric_prose(0.7, 200_000, seed=5)
        spec = run_spectrum(doc, 30)
        bound = 4 * math.sqrt(0.21 / doc.syllable_total)
        assert float(np.abs(spec.values - 0.7).max()) < bound

    def test_mean_tracks_boundary_density(self):
        # Whole-spectrum mean approximates words/syllables for long ranges.
        rng = np.random.default_rng(11)
        for _ in range(5):
            counts = rng.integers(1, 5, size=3000)
            doc = ProseDocument(counts)
            spec = run_spectrum(doc, 25)
            density = doc.word_total / doc.syllable_total
            assert spec.mean() == pytest.approx(density, rel=0.05)

    def test_empty_document_rejected(self):
        with pytest.raises(EmptyCorpusError):
            spectrum_of([], 10)

    def test_value_accessor_bounds(self):
        spec = spectrum_of([1, 2], 5)
        assert spec.value(1) == spec.values[0]
        with pytest.raises(InvalidParameterError):
            spec.value(6)


class TestInternalBoundaryProportion:
    def test_monosyllables(self):
        assert internal_boundary_proportion(WordLengthHistogram({1: 10})) == 0.0

    def test_novel_fixture_exact_ratio(self, novel_histogram):
        value = internal_boundary_proportion(novel_histogram)
        assert value == pytest.approx(138_785 / 456_611, abs=1e-12)
        assert value == pytest.approx(0.30395, abs=1e-5)

    @pytest.mark.parametrize("q", [0.5, 0.6, 0.7, 0.8])
    def test_geometric_closed_form(self, q):
        hist = GeometricWordModel(q).histogram(max_length=40)
        assert internal_boundary_proportion(hist) == pytest.approx(1 - q, abs=1e-9)

    def test_identity_with_fit(self):
        # proportion == 1 - q_hat holds for any histogram, because both
        # reduce to 1 - words/syllables.
        rng = np.random.default_rng(3)
        for _ in range(20):
            lengths = rng.integers(1, 9, size=200)
            hist = WordLengthHistogram.from_lengths(lengths)
            q_hat = fit_geometric(hist).q
            assert internal_boundary_proportion(hist) == pytest.approx(
                1 - q_hat, abs=1e-12
            )


class TestFitGeometric:
    def test_monosyllables(self):
        assert fit_geometric(WordLengthHistogram({1: 5})).q == 1.0

    def test_novel_fixture(self, novel_histogram):
        model = fit_geometric(novel_histogram)
        assert model.q == pytest.approx(317_826 / 456_611, abs=1e-12)
        assert model.q == pytest.approx(0.6961, abs=1e-4)
        assert 1 - model.q == pytest.approx(0.3039, abs=1e-4)

    def test_pmf_normalizes(self):
        model = GeometricWordModel(0.6)
        assert sum(model.pmf(n) for n in range(1, 200)) == pytest.approx(1.0)

    def test_invalid_q_rejected(self):
        with pytest.raises(InvalidParameterError):
            GeometricWordModel(0.0)
        with pytest.raises(InvalidParameterError):
            GeometricWordModel(1.5)


class TestTransitionMatrix:
    def test_degenerate_monosyllables(self):
        doc = ProseDocument(np.array([1, 1, 1, 1]))
        result = transition_matrix(doc)
        assert result.probability(1, given=1) == 1.0
        assert result.degenerate
        assert result.correlation == 0.0

    def test_needs_two_words(self):
        with pytest.raises(EmptyCorpusError):
            transition_matrix(ProseDocument(np.array([2])))

    def test_synthetic_independence(self):
        doc = geometric_prose(0.7, 200_000, seed=17)
        result = transition_matrix(doc)
        assert abs(result.correlation) < 0.01

    def test_rows_match_marginal(self):
        doc = geometric_prose(0.7, 200_000, seed=23)
        result = transition_matrix(doc)
        marginal = result.marginal()
        row_totals = result.pair_counts.sum(axis=1)
        for m in range(result.max_length):
            if row_totals[m] < 10_000:
                continue
            deviation = np.abs(result.probabilities[m] - marginal).max()
            assert deviation < 0.01

    def test_rows_sum_to_one(self):
        doc = ProseDocument(np.array([1, 2, 3, 2, 1, 2]))
        result = transition_matrix(doc)
        sums = result.probabilities.sum(axis=1)
        for m, total in enumerate(sums, start=1):
            if result.pair_counts[m - 1].sum() > 0:
                assert total == pytest.approx(1.0)


class TestPeakSignificance:
    def test_flat_spectrum_degenerate(self):
        spec = spectrum_of([1] * 40, 30)
        result = peak_significance(spec, 10)
        assert result.degenerate
        assert result.z_score == 0.0

    def test_constructed_peak_infinite(self):
        counts = np.full(30, 5, dtype=np.int64)
        counts[9] = 8
        counts[19] = 8
        counts[29] = 8
        spec = RunSpectrum(counts, word_total=10, syllable_total=100)
        result = peak_significance(spec, 10)
        assert result.degenerate
        assert result.z_score == math.inf

    def test_needs_wide_spectrum(self):
        spec = spectrum_of([1, 2, 1], 10)
        with pytest.raises(InvalidParameterError):
            peak_significance(spec, 8)

    def test_geometric_prose_has_no_peak(self):
        doc = geometric_prose(0.7, 200_000, seed=31)
        spec = run_spectrum(doc, 30)
        assert abs(peak_significance(spec, 10).z_score) < 3
