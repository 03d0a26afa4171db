#!/usr/bin/env python3
"""Regenerate the deterministic test fixtures under tests/fixtures/.

verse_fixture.txt is a synthetic decasyllabic corpus: 6,000 ten-syllable
lines assembled from the fixture vocabulary in build_lexicon.py. Word
boundaries inside each line follow an alternating pattern (more likely
after odd syllable positions than even ones), and each resulting word slot
is filled with a dictionary word of exactly the required syllable count.
The text is generated, not quoted, so it carries no copyright; it exists
to drive the full pipeline (tokenizer, lexicon, verse statistics) at a
scale where line-length peaks are unmistakable.

novel_word_lengths.tsv is the word-length histogram of a ~318k-word
nineteenth-century novel, used by histogram-mode analyses.
"""
from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tools"))

import build_lexicon  # noqa: E402
from lineametrics.synth import uniforms  # noqa: E402

FIXTURE_DIR = ROOT / "tests" / "fixtures"

SEED = 0x5EED_1A77
LINES = 6_000
LINE_LENGTH = 10
ODD_RATE = 0.75
EVEN_RATE = 0.65
MAX_WORD = 5

NOVEL_HISTOGRAM = {
    1: 223_840,
    2: 61_588,
    3: 22_256,
    4: 8_118,
    5: 1_806,
    6: 201,
    7: 17,
}


class Stream:
    """Sequential view over the deterministic uniform stream."""

    def __init__(self, seed: int, chunk: int = 65_536):
        self.seed = seed
        self.chunk = chunk
        self.offset = 0
        self.buffer: list[float] = []

    def next(self) -> float:
        if not self.buffer:
            self.buffer = list(uniforms(self.seed, self.chunk, self.offset))[::-1]
            self.offset += self.chunk
        return self.buffer.pop()


def draw_gaps(stream: Stream) -> list[int]:
    """One line's word lengths; patterns needing words past MAX_WORD redraw."""
    while True:
        bounds = []
        for pos in range(1, LINE_LENGTH):
            rate = ODD_RATE if pos % 2 == 1 else EVEN_RATE
            bounds.append(stream.next() < rate)
        bounds.append(True)
        gaps = []
        last = 0
        for pos, is_end in enumerate(bounds, start=1):
            if is_end:
                gaps.append(pos - last)
                last = pos
        if max(gaps) <= MAX_WORD:
            return gaps


def build_verse(path: Path) -> None:
    pools = {
        count: sorted(words.split())
        for count, words in build_lexicon.FIXTURE_POOLS.items()
    }
    stream = Stream(SEED)
    lines = []
    for _ in range(LINES):
        gaps = draw_gaps(stream)
        words = []
        for gap in gaps:
            pool = pools[gap]
            words.append(pool[int(stream.next() * len(pool))])
        words[0] = words[0].capitalize()
        lines.append(" ".join(words))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {LINES} lines to {path}")


def build_histogram(path: Path) -> None:
    rows = [f"{length}\t{count}" for length, count in sorted(NOVEL_HISTOGRAM.items())]
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    print(f"wrote histogram to {path}")


def main() -> int:
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    build_verse(FIXTURE_DIR / "verse_fixture.txt")
    build_histogram(FIXTURE_DIR / "novel_word_lengths.tsv")
    return 0


if __name__ == "__main__":
    sys.exit(main())
