"""Command-line interface.

Subcommands: analyze-prose, analyze-verse, model, simulate, violations.
Every emitted table is a plain re-serialization of library results; the
CLI computes nothing on its own. Exit codes: 0 success, 1 internal error,
2 invalid input.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from .corpus import (
    WordLengthHistogram,
    prose_from_text,
    verse_from_text,
)
from .errors import EmptyCorpusError, InvalidParameterError, LineametricsError
from .lines import (
    alternation_index,
    boundary_profile,
    cut_violations,
    expected_violations,
    line_length_profile,
    mean_word_length_by_class,
)
from .models import (
    FlatLineModel,
    OscillatingLineModel,
    delta_grid,
    measured_vs_induced,
)
from .report import ReportBundle, svg_grid_map, svg_line_chart
from .spectrum import (
    fit_geometric,
    internal_boundary_proportion,
    peak_significance,
    run_spectrum,
    transition_matrix,
)
from .syllables import SyllableLexicon, default_lexicon
from .synth import geometric_prose, lines_from_profile, render_prose, render_verse

LEXICON_ENV = "LINEAMETRICS_LEXICON"


def _resolve_lexicon(path: str | None) -> tuple[SyllableLexicon, str]:
    """Lexicon from --lexicon, the LINEAMETRICS_LEXICON env var, or the bundle."""
    if path is None:
        path = os.environ.get(LEXICON_ENV)
    if path is None:
        lexicon = default_lexicon()
        return lexicon, "bundled"
    lexicon = SyllableLexicon.load(path)
    return lexicon, str(path)


def _read_input(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidParameterError(f"cannot read {path}: {exc}") from exc


def _histogram_tables(bundle: ReportBundle, histogram: WordLengthHistogram) -> None:
    model = fit_geometric(histogram)
    proportions = histogram.proportions()
    max_len = histogram.max_length
    bundle.add_table(
        "word_lengths",
        ["n", "P_n", "geometric_P_n"],
        [(n, proportions.get(n, 0.0), model.pmf(n)) for n in range(1, max_len + 1)],
    )


def _summary_rows(pairs: list[tuple[str, object]]) -> list[tuple]:
    return [(key, value) for key, value in pairs]


def cmd_analyze_prose(args: argparse.Namespace) -> int:
    lexicon, lexicon_label = _resolve_lexicon(args.lexicon)
    bundle = ReportBundle(
        command="analyze-prose",
        parameters={
            "nmax": args.nmax,
            "lexicon": lexicon_label,
            "hist": args.hist,
            "file": args.file,
        },
        lexicon_digest=lexicon.digest(),
    )
    if args.hist is not None:
        histogram = WordLengthHistogram.load(args.hist)
        bundle.record_input("histogram", args.hist)
        _histogram_tables(bundle, histogram)
        model = fit_geometric(histogram)
        bundle.add_table(
            "summary",
            ["key", "value"],
            _summary_rows(
                [
                    ("words", histogram.word_total),
                    ("syllables", histogram.syllable_total),
                    ("mean_word_length", histogram.mean_word_length),
                    ("q_hat", model.q),
                    (
                        "internal_boundary_proportion",
                        internal_boundary_proportion(histogram),
                    ),
                ]
            ),
        )
    else:
        if args.file is None:
            raise InvalidParameterError("analyze-prose needs a FILE or --hist")
        text = _read_input(args.file)
        document, syllabified = prose_from_text(text, lexicon)
        if document.word_total == 0:
            raise EmptyCorpusError("empty corpus")
        bundle.record_input("file", args.file)
        spectrum = run_spectrum(document, args.nmax)
        histogram = WordLengthHistogram.from_lengths(document.counts)
        model = fit_geometric(histogram)
        transitions = transition_matrix(document) if document.word_total >= 2 else None
        bundle.add_table(
            "q_n",
            ["n", "Q_n"],
            list(zip(range(1, args.nmax + 1), spectrum.values)),
        )
        _histogram_tables(bundle, histogram)
        if transitions is not None:
            k = transitions.max_length
            bundle.add_table(
                "transition",
                ["m", "n", "P_nm"],
                [
                    (m, n, transitions.probability(n, given=m))
                    for m in range(1, k + 1)
                    for n in range(1, k + 1)
                ],
            )
        summary = [
            ("words", document.word_total),
            ("syllables", document.syllable_total),
            ("mean_word_length", histogram.mean_word_length),
            ("q_hat", model.q),
            ("internal_boundary_proportion", internal_boundary_proportion(histogram)),
            ("mean_Q", spectrum.mean()),
        ]
        if transitions is not None:
            summary.append(("adjacent_correlation", transitions.correlation))
            summary.append(("adjacency_degenerate", transitions.degenerate))
        bundle.add_table("summary", ["key", "value"], _summary_rows(summary))
        bundle.add_file(
            "unknown_words.tsv", "\n".join(syllabified.unknown_report_lines()) + "\n"
        )
        if args.format in {"svg", "both"}:
            bundle.add_plot(
                "q_n",
                svg_line_chart(
                    list(range(1, args.nmax + 1)),
                    {"Q_n": spectrum.values},
                    "Whole-word run spectrum",
                ),
            )
    bundle.write(args.out, args.format)
    return 0


def cmd_analyze_verse(args: argparse.Namespace) -> int:
    lexicon, lexicon_label = _resolve_lexicon(args.lexicon)
    text = _read_input(args.file)
    document, syllabified = verse_from_text(text, lexicon)
    if document.line_count == 0:
        raise EmptyCorpusError("empty corpus")
    bundle = ReportBundle(
        command="analyze-verse",
        parameters={"nmax": args.nmax, "lexicon": lexicon_label, "file": args.file},
        lexicon_digest=lexicon.digest(),
    )
    bundle.record_input("file", args.file)

    profile = line_length_profile(document)
    core = profile.core_length
    bundle.add_table(
        "line_profile", ["N", "count"], sorted(profile.histogram.items())
    )

    spectrum = run_spectrum(document, args.nmax)
    bundle.add_table(
        "q_n", ["n", "Q_n"], list(zip(range(1, args.nmax + 1), spectrum.values))
    )

    classes = [core]
    variants = {n: c for n, c in profile.histogram.items() if n != core}
    if variants:
        top_variant = min(variants, key=lambda n: (-variants[n], n))
        classes.append(top_variant)
    alternations: list[tuple[int, float]] = []
    for length in classes:
        class_profile = boundary_profile(document, length)
        bundle.add_table(
            f"x_N{length}",
            ["n", f"x_n[N={length}]"],
            list(zip(range(1, length + 1), class_profile.freq)),
        )
        if length >= 4:
            alternations.append((length, alternation_index(class_profile)))

    summary: list[tuple[str, object]] = [
        ("lines", profile.line_count),
        ("core_length", core),
        ("variant_count", profile.variant_count),
        ("words", document.as_prose().word_total),
        ("syllables", document.as_prose().syllable_total),
    ]
    comparison = None
    if profile.histogram.get(core, 0) >= 2:
        comparison = measured_vs_induced(document, args.nmax)
        bundle.add_table(
            "q_overlay",
            ["n", "Q_measured", "Q_induced"],
            list(
                zip(range(1, args.nmax + 1), comparison.measured, comparison.induced)
            ),
        )
        summary.append(("induced_rmse", comparison.rmse))
        summary.append(("measured_peak", comparison.measured_peak))
    if args.nmax >= 2 * core:
        significance = peak_significance(spectrum, core)
        summary.append(("peak_z", significance.z_score))
        summary.append(("peak_degenerate", significance.degenerate))
    for length, value in alternations:
        summary.append((f"alternation_N{length}", value))
    bundle.add_table("summary", ["key", "value"], _summary_rows(summary))
    bundle.add_table(
        "mean_word_length",
        ["N", "mean_word_length"],
        sorted(mean_word_length_by_class(document).items()),
    )
    bundle.add_file(
        "unknown_words.tsv", "\n".join(syllabified.unknown_report_lines()) + "\n"
    )
    if args.format in {"svg", "both"}:
        series = {"measured": spectrum.values}
        if comparison is not None:
            series["induced"] = comparison.induced
        bundle.add_plot(
            "q_n",
            svg_line_chart(
                list(range(1, args.nmax + 1)), series, "Whole-word run spectrum"
            ),
        )
    bundle.write(args.out, args.format)
    return 0


def cmd_model(args: argparse.Namespace) -> int:
    bundle = ReportBundle(
        command="model",
        parameters={
            "kind": args.kind,
            "alpha": args.alpha,
            "beta": args.beta,
            "length": args.length,
            "steps": args.steps,
        },
    )
    if args.kind == "flat":
        if args.alpha is None:
            raise InvalidParameterError("flat model needs --alpha")
        model = FlatLineModel(args.alpha, args.length)
        x = model.boundary_profile()
        spectrum = model.spectrum()
        bundle.add_table(
            "model_x", ["n", "x_n"], list(zip(range(1, args.length + 1), x))
        )
        bundle.add_table(
            "model_q",
            ["n", "Q_n"],
            list(zip(range(1, args.length + 1), spectrum.values)),
        )
        bundle.add_table(
            "summary",
            ["key", "value"],
            _summary_rows(
                [
                    ("boundary_sum", model.boundary_sum),
                    ("mean_Q", model.mean_value()),
                    ("peak_delta", model.peak_delta()),
                ]
            ),
        )
    elif args.kind == "osc":
        if args.alpha is None or args.beta is None:
            raise InvalidParameterError("osc model needs --alpha and --beta")
        model = OscillatingLineModel(args.alpha, args.beta, args.length)
        x = model.boundary_profile()
        spectrum = model.spectrum()
        bundle.add_table(
            "model_x", ["n", "x_n"], list(zip(range(1, args.length + 1), x))
        )
        bundle.add_table(
            "model_q",
            ["n", "Q_n"],
            list(zip(range(1, args.length + 1), spectrum.values)),
        )
        bundle.add_table(
            "summary",
            ["key", "value"],
            _summary_rows(
                [
                    ("boundary_sum", model.boundary_sum),
                    ("mean_Q", model.mean_value()),
                    ("delta_even_odd", model.even_odd_delta()),
                    ("peak_delta", model.peak_delta()),
                ]
            ),
        )
    else:  # contour
        grid = delta_grid(args.length, steps=args.steps)
        cells = [
            (grid.alphas[c], grid.betas[r], grid.even_odd[r, c])
            for r in range(grid.betas.size)
            for c in range(grid.alphas.size)
        ]
        bundle.add_table("grid_even_odd", ["alpha", "beta", "delta"], cells)
        cells = [
            (grid.alphas[c], grid.betas[r], grid.peak[r, c])
            for r in range(grid.betas.size)
            for c in range(grid.alphas.size)
        ]
        bundle.add_table("grid_peak", ["alpha", "beta", "delta"], cells)
        bundle.add_table(
            "summary",
            ["key", "value"],
            _summary_rows(
                [
                    ("length", args.length),
                    ("steps", args.steps),
                    (
                        "negative_even_odd_fraction",
                        grid.negative_even_odd_fraction(),
                    ),
                ]
            ),
        )
        if args.format in {"svg", "both"}:
            bundle.add_plot(
                "grid_even_odd",
                svg_grid_map(
                    grid.alphas, grid.betas, grid.even_odd, "even minus odd spans"
                ),
            )
            bundle.add_plot(
                "grid_peak",
                svg_grid_map(
                    grid.alphas, grid.betas, grid.peak, "peak above even spans"
                ),
            )
    bundle.write(args.out, args.format)
    return 0


def _load_profile_csv(path: str) -> np.ndarray:
    """Read an ``n,x_n`` CSV (as emitted by this tool) into an array."""
    rows: dict[int, float] = {}
    with open(path, encoding="utf-8") as handle:
        header = handle.readline()
        if not header.lower().startswith("n,"):
            raise InvalidParameterError(f"{path}: expected an 'n,x_n' CSV header")
        for lineno, line in enumerate(handle, start=2):
            line = line.strip()
            if not line:
                continue
            try:
                n_text, value_text = line.split(",")
                rows[int(n_text)] = float(value_text)
            except ValueError as exc:
                raise InvalidParameterError(
                    f"{path}:{lineno}: malformed profile row {line!r}"
                ) from exc
    if not rows or sorted(rows) != list(range(1, max(rows) + 1)):
        raise InvalidParameterError(f"{path}: profile must cover positions 1..N")
    return np.array([rows[n] for n in sorted(rows)], dtype=np.float64)


def cmd_simulate(args: argparse.Namespace) -> int:
    bundle = ReportBundle(
        command="simulate",
        parameters={
            "kind": args.kind,
            "q": args.q,
            "words": args.words,
            "lines": args.lines,
            "profile": args.profile,
            "seed": args.seed,
        },
    )
    if args.kind == "prose":
        if args.q is None or args.words is None:
            raise InvalidParameterError("prose simulation needs --q and --words")
        document = geometric_prose(args.q, args.words, args.seed)
        bundle.add_file("prose.txt", render_prose(document))
        bundle.add_table(
            "summary",
            ["key", "value"],
            _summary_rows(
                [
                    ("words", document.word_total),
                    ("syllables", document.syllable_total),
                ]
            ),
        )
    else:
        if args.profile is None or args.lines is None:
            raise InvalidParameterError(
                "verse simulation needs --profile and --lines"
            )
        x = _load_profile_csv(args.profile)
        bundle.record_input("profile", args.profile)
        document = lines_from_profile(x, args.lines, args.seed)
        bundle.add_file("verse.txt", render_verse(document))
        bundle.add_table(
            "summary",
            ["key", "value"],
            _summary_rows(
                [
                    ("lines", document.line_count),
                    ("words", document.as_prose().word_total),
                    ("syllables", document.as_prose().syllable_total),
                ]
            ),
        )
    bundle.write(args.out, args.format)
    return 0


def cmd_violations(args: argparse.Namespace) -> int:
    lengths = [int(part) for part in args.lengths.split(",") if part]
    if not lengths or any(n < 1 for n in lengths):
        raise InvalidParameterError("--lengths needs positive integers")
    lexicon = lexicon_label = None
    if args.file is not None:
        lexicon, lexicon_label = _resolve_lexicon(args.lexicon)
    bundle = ReportBundle(
        command="violations",
        parameters={
            "lengths": lengths,
            "file": args.file,
            "hist": args.hist,
            "syllables": args.syllables,
            "p_internal": args.p_internal,
            "lexicon": lexicon_label,
        },
        lexicon_digest=lexicon.digest() if lexicon is not None else None,
    )
    document = None
    if args.file is not None:
        document, _ = prose_from_text(_read_input(args.file), lexicon)
        if document.word_total == 0:
            raise EmptyCorpusError("empty corpus")
        bundle.record_input("file", args.file)
        syllable_total = document.syllable_total
        histogram = WordLengthHistogram.from_lengths(document.counts)
        p_internal = internal_boundary_proportion(histogram)
    elif args.hist is not None:
        histogram = WordLengthHistogram.load(args.hist)
        bundle.record_input("histogram", args.hist)
        syllable_total = int(round(histogram.syllable_total))
        p_internal = internal_boundary_proportion(histogram)
    elif args.syllables is not None:
        syllable_total = args.syllables
        if args.p_internal is None:
            raise InvalidParameterError("--syllables mode needs --p-internal")
        p_internal = args.p_internal
    else:
        raise InvalidParameterError("violations needs a FILE, --hist or --syllables")
    if args.p_internal is not None:
        p_internal = args.p_internal
    if args.syllables is not None:
        syllable_total = args.syllables

    rows = []
    expected: dict[int, float] = {}
    for length in lengths:
        if document is not None:
            count = cut_violations(document, length, p_internal)
            expected[length] = count.expected
            rows.append((length, count.cuts, count.exact, count.expected))
        else:
            value = expected_violations(syllable_total, length, p_internal)
            expected[length] = value
            rows.append((length, syllable_total // length, "", value))
    bundle.add_table("violations", ["N", "cuts", "exact", "expected"], rows)
    ratio_rows = []
    for i, a in enumerate(lengths):
        for b in lengths[i + 1 :]:
            if expected[b] > 0:
                ratio_rows.append((a, b, expected[a] / expected[b]))
    bundle.add_table("ratios", ["N_a", "N_b", "ratio"], ratio_rows)
    bundle.write(args.out, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lineametrics",
        description="Word-boundary statistics for lineated and unlineated text.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser, lexicon: bool = True) -> None:
        p.add_argument("--out", default="lineametrics_report", help="output directory")
        p.add_argument(
            "--format", choices=("csv", "svg", "both"), default="csv",
            help="table format to emit",
        )
        if lexicon:
            p.add_argument(
                "--lexicon",
                default=None,
                help=f"lexicon TSV path (default: ${LEXICON_ENV} or the bundle)",
            )

    p = sub.add_parser("analyze-prose", help="run spectrum and word-length statistics")
    p.add_argument("file", nargs="?", default=None, help="UTF-8 prose text")
    p.add_argument("--hist", default=None, help="word-length histogram TSV instead of text")
    p.add_argument("--nmax", type=int, default=30, help="largest span to report")
    common(p)
    p.set_defaults(func=cmd_analyze_prose)

    p = sub.add_parser("analyze-verse", help="line profiles and boundary statistics")
    p.add_argument("file", help="UTF-8 verse text, one line per text line")
    p.add_argument("--nmax", type=int, default=30, help="largest span to report")
    common(p)
    p.set_defaults(func=cmd_analyze_verse)

    p = sub.add_parser("model", help="closed-form line models and contrast grids")
    p.add_argument("--kind", choices=("flat", "osc", "contour"), required=True)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--length", type=int, required=True, help="line length")
    p.add_argument("--steps", type=int, default=100, help="grid resolution")
    common(p, lexicon=False)
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("simulate", help="write a deterministic synthetic document")
    p.add_argument("--kind", choices=("prose", "verse"), required=True)
    p.add_argument("--q", type=float, default=None, help="geometric parameter")
    p.add_argument("--words", type=int, default=None, help="prose word count")
    p.add_argument("--lines", type=int, default=None, help="verse line count")
    p.add_argument("--profile", default=None, help="boundary profile CSV (n,x_n)")
    p.add_argument("--seed", type=int, default=0, help="stream seed")
    common(p, lexicon=False)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("violations", help="word-internal cuts under fixed lineation")
    p.add_argument("file", nargs="?", default=None, help="UTF-8 prose text")
    p.add_argument("--hist", default=None, help="word-length histogram TSV")
    p.add_argument("--syllables", type=int, default=None, help="syllable total override")
    p.add_argument("--p-internal", type=float, default=None,
                   help="internal-boundary proportion override")
    p.add_argument("--lengths", default="10", help="comma-separated line lengths")
    common(p)
    p.set_defaults(func=cmd_violations)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LineametricsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # unexpected: report as internal
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
