"""Bundled fixtures."""
from importlib import resources


def mini_corpus_path():
    """Path-like handle to the bundled 50-sentence DC-circuit corpus."""
    return resources.files(__name__) / "mini_corpus.xml"


def mini_corpus_bytes() -> bytes:
    return mini_corpus_path().read_bytes()
