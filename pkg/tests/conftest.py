import pytest

from lineametrics import SyllableLexicon, WordLengthHistogram
from lineametrics.syllables import default_lexicon

from helpers import FIXTURES, NOVEL_HISTOGRAM


@pytest.fixture(scope="session")
def bundled_lexicon() -> SyllableLexicon:
    return default_lexicon()


@pytest.fixture(scope="session")
def empty_lexicon() -> SyllableLexicon:
    return SyllableLexicon.empty()


@pytest.fixture(scope="session")
def novel_histogram() -> WordLengthHistogram:
    return WordLengthHistogram(NOVEL_HISTOGRAM)


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
