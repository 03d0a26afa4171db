"""Tokenization and per-word syllable counting.

Counts come from a lexicon when the word is known, otherwise from a fixed
vowel-group heuristic, so the same input always produces the same output.
"""
from __future__ import annotations

import hashlib
import re
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .errors import InvalidParameterError

__all__ = [
    "SyllableLexicon",
    "Token",
    "SyllabifiedText",
    "tokenize",
    "count_syllables",
    "syllabify_text",
    "default_lexicon",
]

# Maximal runs of word characters, optionally joined by single internal
# apostrophes. Hyphens are absent from the pattern, so hyphenated compounds
# split into their parts. The class overshoots 'alphabetic' slightly
# (Unicode numerics and combining marks are word characters), so matches
# are re-split strictly when they contain anything non-alphabetic.
_WORD_RE = re.compile(r"[^\W\d_]+(?:'[^\W\d_]+)*")

_VOWELS = frozenset("aeiouy")

LEXICON_PROVENANCE = "lexicon"
HEURISTIC_PROVENANCE = "heuristic"


@dataclass(frozen=True)
class Token:
    """One word with its syllable count and where that count came from."""

    surface: str
    syllables: int
    provenance: str

    def __post_init__(self) -> None:
        if not self.surface:
            raise InvalidParameterError("token surface must be non-empty")
        if self.syllables < 1:
            raise InvalidParameterError("syllable count must be >= 1")


class SyllableLexicon:
    """Immutable mapping from lowercase word forms to syllable counts."""

    def __init__(self, entries: Mapping[str, int]):
        cleaned: dict[str, int] = {}
        for word, count in entries.items():
            key = unicodedata.normalize("NFC", word).strip().lower()
            if not key:
                raise InvalidParameterError("lexicon keys must be non-empty")
            if int(count) < 1:
                raise InvalidParameterError(
                    f"lexicon count for {key!r} must be >= 1, got {count}"
                )
            cleaned[key] = int(count)
        self._entries = cleaned

    @classmethod
    def empty(cls) -> "SyllableLexicon":
        return cls({})

    @classmethod
    def load(cls, path: str | Path) -> "SyllableLexicon":
        """Read a UTF-8 TSV lexicon, one ``word<TAB>count`` entry per line."""
        entries: dict[str, int] = {}
        with open(path, encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                try:
                    word, count = line.split("\t")
                    entries[word] = int(count)
                except ValueError as exc:
                    raise InvalidParameterError(
                        f"{path}:{lineno}: malformed lexicon line {line!r}"
                    ) from exc
        return cls(entries)

    def save(self, path: str | Path) -> None:
        lines = [f"{w}\t{c}" for w, c in sorted(self._entries.items())]
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    def lookup(self, word: str) -> int | None:
        return self._entries.get(unicodedata.normalize("NFC", word).lower())

    def digest(self) -> str:
        """SHA-256 over the sorted entries; stable across load order."""
        payload = "\n".join(f"{w}\t{c}" for w, c in sorted(self._entries.items()))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, word: str) -> bool:
        return self.lookup(word) is not None


def _strict_alpha_split(chunk: str) -> list[str]:
    """Alphabetic runs joined by internal apostrophes, scanned per char."""
    words: list[str] = []
    current: list[str] = []
    for i, ch in enumerate(chunk):
        if ch.isalpha():
            current.append(ch)
        elif (
            ch == "'"
            and current
            and current[-1] != "'"
            and i + 1 < len(chunk)
            and chunk[i + 1].isalpha()
        ):
            current.append(ch)
        elif current:
            words.append("".join(current))
            current = []
    if current:
        words.append("".join(current))
    return words


def tokenize(text: str) -> list[str]:
    """Split text into word surfaces.

    Returns maximal alphabetic runs with internal apostrophes kept, case
    preserved. Digits and punctuation are dropped and hyphenated compounds
    split at the hyphen. Curly apostrophes are treated as straight ones.
    """
    text = unicodedata.normalize("NFC", text).replace("’", "'")
    words: list[str] = []
    for match in _WORD_RE.findall(text):
        if match.replace("'", "").isalpha():
            words.append(match)
        else:
            words.extend(_strict_alpha_split(match))
    return words


def heuristic_syllables(word: str) -> int:
    """Count syllables by maximal vowel groups (aeiouy).

    A final silent 'e' preceded by a consonant drops one group when at
    least two groups were found; every word counts at least one syllable.
    """
    lowered = word.lower()
    groups = 0
    prev_vowel = False
    for char in lowered:
        is_vowel = char in _VOWELS
        if is_vowel and not prev_vowel:
            groups += 1
        prev_vowel = is_vowel
    if (
        groups >= 2
        and lowered.endswith("e")
        and len(lowered) >= 2
        and lowered[-2] not in _VOWELS
        and lowered[-2].isalpha()
    ):
        groups -= 1
    return max(groups, 1)


def count_syllables(word: str, lexicon: SyllableLexicon) -> Token:
    """Resolve one word to a Token, preferring the lexicon over the heuristic."""
    if not word:
        raise InvalidParameterError("cannot count syllables of an empty word")
    from_lexicon = lexicon.lookup(word)
    if from_lexicon is not None:
        return Token(word, from_lexicon, LEXICON_PROVENANCE)
    return Token(word, heuristic_syllables(word), HEURISTIC_PROVENANCE)


@dataclass
class SyllabifiedText:
    """Tokens of a text plus a report of words the lexicon did not cover."""

    tokens: list[Token]
    unknown_words: Counter = field(default_factory=Counter)

    @property
    def counts(self) -> list[int]:
        return [token.syllables for token in self.tokens]

    def unknown_report_lines(self) -> list[str]:
        """``word<TAB>frequency`` lines, most frequent first."""
        ordered = sorted(self.unknown_words.items(), key=lambda kv: (-kv[1], kv[0]))
        return [f"{word}\t{freq}" for word, freq in ordered]


def default_lexicon() -> SyllableLexicon:
    """The lexicon bundled with the package."""
    path = Path(__file__).parent / "data" / "lexicon.tsv"
    return SyllableLexicon.load(path)


def syllabify_text(text: str, lexicon: SyllableLexicon) -> SyllabifiedText:
    """Tokenize and count a whole text, tracking heuristic-only words."""
    tokens: list[Token] = []
    unknown: Counter = Counter()
    for surface in tokenize(text):
        token = count_syllables(surface, lexicon)
        tokens.append(token)
        if token.provenance == HEURISTIC_PROVENANCE:
            unknown[surface.lower()] += 1
    return SyllabifiedText(tokens, unknown)
