"""Report bundles: CSV tables, optional SVG plots, and a manifest.

CSV is the contract: comma separators, '.' decimal point, one header row,
LF line endings, floats printed with six significant digits. SVG output is
a best-effort rendering of the same tables. Files are written atomically
(temp file plus rename) and the manifest carries a digest that changes
exactly when an input or parameter changes.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidParameterError

__all__ = [
    "format_value",
    "write_text_atomic",
    "file_digest",
    "ReportBundle",
    "svg_line_chart",
    "svg_grid_map",
]


def format_value(value) -> str:
    """Render one CSV cell: floats at six significant digits."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if value == 0.0:
            return "0"
        return f"{value:.6g}"
    return str(value)


def write_text_atomic(path: str | Path, text: str) -> Path:
    """Write text via a temp file in the target directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_value(cell) for cell in row))
    return "\n".join(lines) + "\n"


@dataclass
class ReportBundle:
    """Named tables and plots for one analysis run, plus their manifest."""

    command: str
    parameters: dict
    inputs: dict[str, str] = field(default_factory=dict)
    lexicon_digest: str | None = None
    tables: dict[str, tuple[list[str], list[tuple]]] = field(default_factory=dict)
    plots: dict[str, str] = field(default_factory=dict)
    extra_files: dict[str, str] = field(default_factory=dict)

    def add_table(
        self, name: str, header: Sequence[str], rows: Iterable[Sequence]
    ) -> None:
        if name in self.tables:
            raise InvalidParameterError(f"duplicate table name {name!r}")
        self.tables[name] = (list(header), [tuple(r) for r in rows])

    def add_plot(self, name: str, svg: str) -> None:
        self.plots[name] = svg

    def add_file(self, name: str, text: str) -> None:
        """A verbatim extra output, e.g. a TSV report or generated text."""
        self.extra_files[name] = text

    def record_input(self, label: str, path: str | Path) -> None:
        self.inputs[label] = file_digest(path)

    def manifest(self) -> dict:
        identity = {
            "command": self.command,
            "parameters": self.parameters,
            "inputs": self.inputs,
            "lexicon_digest": self.lexicon_digest,
        }
        digest = hashlib.sha256(
            json.dumps(identity, sort_keys=True, separators=(",", ":")).encode()
        ).hexdigest()
        return {
            **identity,
            "tables": sorted(self.tables),
            "plots": sorted(self.plots),
            "files": sorted(self.extra_files),
            "digest": digest,
        }

    def write(self, out_dir: str | Path, formats: str = "csv") -> list[Path]:
        """Write the bundle; formats is 'csv', 'svg', or 'both'."""
        if formats not in {"csv", "svg", "both"}:
            raise InvalidParameterError(f"unknown format {formats!r}")
        out = Path(out_dir)
        written: list[Path] = []
        if formats in {"csv", "both"}:
            for name, (header, rows) in sorted(self.tables.items()):
                written.append(
                    write_text_atomic(out / f"{name}.csv", _csv_text(header, rows))
                )
        if formats in {"svg", "both"}:
            for name, svg in sorted(self.plots.items()):
                written.append(write_text_atomic(out / f"{name}.svg", svg))
        for name, text in sorted(self.extra_files.items()):
            written.append(write_text_atomic(out / name, text))
        manifest_text = json.dumps(self.manifest(), sort_keys=True, indent=2) + "\n"
        written.append(write_text_atomic(out / "manifest.json", manifest_text))
        return written


_PALETTE = ("#1f6fb2", "#d1495b", "#3d8f5f", "#8a6fb8")


def svg_line_chart(
    x_values: Sequence[float],
    series: dict[str, Sequence[float]],
    title: str,
    width: int = 640,
    height: int = 400,
) -> str:
    """A minimal multi-series line chart with a fixed viewBox."""
    xs = np.asarray(x_values, dtype=float)
    margin = 48
    all_y = np.concatenate([np.asarray(v, dtype=float) for v in series.values()])
    y_lo, y_hi = float(all_y.min()), float(all_y.max())
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    x_lo, x_hi = float(xs.min()), float(xs.max())
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    span_w, span_h = width - 2 * margin, height - 2 * margin

    def px(x: float) -> float:
        return margin + (x - x_lo) / (x_hi - x_lo) * span_w

    def py(y: float) -> float:
        return height - margin - (y - y_lo) / (y_hi - y_lo) * span_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.0f}" y="20" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{title}</text>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<text x="{margin}" y="{height - margin + 16}" font-family="sans-serif" '
        f'font-size="11">{x_lo:.6g}</text>',
        f'<text x="{width - margin}" y="{height - margin + 16}" text-anchor="end" '
        f'font-family="sans-serif" font-size="11">{x_hi:.6g}</text>',
        f'<text x="{margin - 4}" y="{height - margin}" text-anchor="end" '
        f'font-family="sans-serif" font-size="11">{y_lo:.6g}</text>',
        f'<text x="{margin - 4}" y="{margin + 4}" text-anchor="end" '
        f'font-family="sans-serif" font-size="11">{y_hi:.6g}</text>',
    ]
    for i, (label, values) in enumerate(series.items()):
        color = _PALETTE[i % len(_PALETTE)]
        points = " ".join(
            f"{px(float(x)):.2f},{py(float(y)):.2f}" for x, y in zip(xs, values)
        )
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" '
            f'stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{width - margin}" y="{margin + 14 * i}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11" fill="{color}">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def svg_grid_map(
    alphas: Sequence[float],
    betas: Sequence[float],
    values: np.ndarray,
    title: str,
    width: int = 520,
    height: int = 520,
) -> str:
    """A heat map over an (alpha, beta) grid; negative cells render blue."""
    grid = np.asarray(values, dtype=float)
    margin = 48
    rows, cols = grid.shape
    cell_w = (width - 2 * margin) / cols
    cell_h = (height - 2 * margin) / rows
    peak = float(np.abs(grid).max()) or 1.0
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.0f}" y="20" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{title}</text>',
    ]
    for r in range(rows):
        for c in range(cols):
            v = grid[r, c]
            opacity = abs(v) / peak
            color = "#1f6fb2" if v < 0 else "#d1495b"
            x = margin + c * cell_w
            # beta increases upward
            y = height - margin - (r + 1) * cell_h
            parts.append(
                f'<rect x="{x:.2f}" y="{y:.2f}" width="{cell_w:.2f}" '
                f'height="{cell_h:.2f}" fill="{color}" '
                f'fill-opacity="{opacity:.3f}"/>'
            )
    parts.append(
        f'<text x="{width / 2:.0f}" y="{height - 12}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="11">alpha '
        f'{float(alphas[0]):.6g}..{float(alphas[-1]):.6g}</text>'
    )
    parts.append(
        f'<text x="14" y="{height / 2:.0f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="11" '
        f'transform="rotate(-90 14 {height / 2:.0f})">beta '
        f'{float(betas[0]):.6g}..{float(betas[-1]):.6g}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
