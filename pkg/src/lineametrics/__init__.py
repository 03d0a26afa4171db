"""Word-boundary statistics for lineated and unlineated English text.

The package measures how whole-word runs of syllables distribute through a
document (flat for prose, peaked at the line length for verse), the
placement of word boundaries inside verse lines, the spectra such placement
induces, and closed-form models of both, together with seeded generators
for synthetic corpora and a reporting CLI.
"""
from .corpus import (
    LineRecord,
    ProseDocument,
    VerseDocument,
    WordLengthHistogram,
    load_prose,
    load_verse,
    prose_from_text,
    verse_from_text,
    word_length_histogram,
)
from .errors import EmptyCorpusError, InvalidParameterError, LineametricsError
from .lines import (
    BoundaryProfile,
    VerseProfile,
    alternation_index,
    boundary_profile,
    cut_violations,
    expected_violations,
    line_length_profile,
    mean_word_length_by_class,
    profile_vs_word_lengths,
    variant_ratio,
    vary_up_lineation,
)
from .models import (
    FlatLineModel,
    InducedSpectrum,
    OscillatingLineModel,
    delta_grid,
    induced_spectrum,
    induced_spectrum_convolution,
    measured_vs_induced,
    verify_spectrum_properties,
)
from .spectrum import (
    GeometricWordModel,
    RunSpectrum,
    TransitionMatrix,
    fit_geometric,
    internal_boundary_proportion,
    peak_significance,
    run_spectrum,
    transition_matrix,
)
from .syllables import (
    SyllableLexicon,
    Token,
    count_syllables,
    syllabify_text,
    tokenize,
)
from .synth import geometric_prose, lines_from_profile, render_prose, render_verse

__version__ = "0.1.0"

__all__ = [
    "BoundaryProfile",
    "EmptyCorpusError",
    "FlatLineModel",
    "GeometricWordModel",
    "InducedSpectrum",
    "InvalidParameterError",
    "LineRecord",
    "LineametricsError",
    "OscillatingLineModel",
    "ProseDocument",
    "RunSpectrum",
    "SyllableLexicon",
    "Token",
    "TransitionMatrix",
    "VerseDocument",
    "VerseProfile",
    "WordLengthHistogram",
    "alternation_index",
    "boundary_profile",
    "count_syllables",
    "cut_violations",
    "delta_grid",
    "expected_violations",
    "fit_geometric",
    "geometric_prose",
    "induced_spectrum",
    "induced_spectrum_convolution",
    "internal_boundary_proportion",
    "line_length_profile",
    "lines_from_profile",
    "load_prose",
    "load_verse",
    "mean_word_length_by_class",
    "measured_vs_induced",
    "peak_significance",
    "profile_vs_word_lengths",
    "prose_from_text",
    "render_prose",
    "render_verse",
    "run_spectrum",
    "syllabify_text",
    "tokenize",
    "transition_matrix",
    "variant_ratio",
    "vary_up_lineation",
    "verify_spectrum_properties",
    "verse_from_text",
    "word_length_histogram",
]
