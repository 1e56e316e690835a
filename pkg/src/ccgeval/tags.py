"""POS tag set and the word normalization shared by every module."""
from __future__ import annotations

import string

POS_TAGS = (
    "noun",
    "pronoun",
    "verb",
    "adverb",
    "adjective",
    "preposition",
    "coordinator",
    "determiner",
    "modal",
)

_STRIP = string.punctuation + "\u2018\u2019\u201c\u201d\u2013\u2014"


def normalize_word(word: str) -> str:
    """Lowercase and strip leading/trailing punctuation.

    Internal hyphens and apostrophes survive; numerals are kept as-is.
    Returns ``""`` for punctuation-only input.
    """
    return word.strip().strip(_STRIP).lower()


def check_pos(pos: str) -> str:
    if pos not in POS_TAGS:
        raise ValueError(f"unknown POS tag {pos!r}; expected one of {', '.join(POS_TAGS)}")
    return pos
