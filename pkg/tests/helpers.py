"""Independent oracle implementations used to pin expected test values.

Everything here is deliberately naive: plain-Python enumeration that states
the definitions directly, kept separate from the library's vectorized
paths.
"""
from __future__ import annotations

from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"

# Word-length frequencies of a ~318k-word nineteenth-century novel; the
# same values as fixtures/novel_word_lengths.tsv.
NOVEL_HISTOGRAM = {
    1: 223_840,
    2: 61_588,
    3: 22_256,
    4: 8_118,
    5: 1_806,
    6: 201,
    7: 17,
}

# Line-length frequencies of a ~80k-word blank-verse epic with a
# ten-syllable core.
EPIC_LINE_HISTOGRAM = {8: 1, 9: 163, 10: 8_315, 11: 1_887, 12: 178, 13: 4}


def brute_force_run_counts(counts: list[int], max_run: int) -> list[int]:
    """Enumerate (start word, span) hits on the circular word sequence.

    From every word start, walk cumulative sums of consecutive word lengths
    (wrapping as often as needed) and record each exact hit up to max_run.
    """
    word_total = len(counts)
    hits = [0] * (max_run + 1)
    for start in range(word_total):
        total = 0
        step = 0
        while total < max_run:
            total += counts[(start + step) % word_total]
            step += 1
            if total <= max_run:
                hits[total] += 1
    return hits[1:]


def brute_force_induced(x: list[float]) -> list[float]:
    """Direct expansion of the induced-spectrum sum, term by term."""
    n_len = len(x)
    x_sum = sum(x)
    values = []
    for n in range(1, n_len + 1):
        acc = 0.0
        for l in range(1, n_len + 1):
            wrapped = (l + n) % n_len
            if wrapped == 0:
                wrapped = n_len
            acc += x[l - 1] * x[wrapped - 1]
        values.append(acc / x_sum)
    return values


def splitmix64_scalar(seed: int, count: int) -> list[int]:
    """Reference SplitMix64, straight from the published algorithm."""
    mask = (1 << 64) - 1
    state = seed & mask
    out = []
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & mask
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        out.append(z ^ (z >> 31))
    return out


def vary_up_trace(counts: list[int], target: int) -> tuple[list[int], int | None]:
    """Hand implementation of the greedy vary-up rule over a word list."""
    lines: list[int] = []
    current = 0
    for count in counts:
        current += count
        if current >= target:
            lines.append(current)
            current = 0
    return lines, (current if current else None)
