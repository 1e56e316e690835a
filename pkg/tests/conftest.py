import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ccgeval.corpus import read_xml  # noqa: E402
from ccgeval.data import mini_corpus_bytes  # noqa: E402
from ccgeval.lexicon import Lexicon  # noqa: E402


@pytest.fixture(scope="session")
def mini_corpus():
    return read_xml(mini_corpus_bytes())


@pytest.fixture
def full_lexicon(mini_corpus):
    lex = Lexicon()
    lex.augment_from_corpus(mini_corpus)
    return lex


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
