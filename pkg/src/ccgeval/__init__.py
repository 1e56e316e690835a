"""Corpus-driven evaluation of a CCG lexicon and grammar."""

__version__ = "0.1.0"
