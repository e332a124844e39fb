import pytest

from seraeval.index import Document, build_index
from seraeval.pipeline import minicorpus_dir, read_golds
from seraeval.index import read_corpus
from seraeval.textproc import AnalyzerOptions

RAW = AnalyzerOptions(remove_stopwords=False)


def make_index(texts, options=AnalyzerOptions(), prefix="d"):
    """Index ``texts`` with ids d1, d2, ... (or a dict id -> text)."""
    if isinstance(texts, dict):
        docs = [Document(k, v) for k, v in texts.items()]
    else:
        docs = [Document(f"{prefix}{i + 1}", t) for i, t in enumerate(texts)]
    return build_index(docs, options)


@pytest.fixture(scope="session")
def mini_index():
    return build_index(read_corpus(minicorpus_dir() / "corpus.jsonl"))


@pytest.fixture(scope="session")
def mini_golds():
    return read_golds(minicorpus_dir() / "golds.jsonl")


# Acceptance criteria record one line each; they are repeated in the terminal
# summary so they show up in plain `pytest -v` logs.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
