"""Lexicon store: surface form -> (stem, POS, CCG categories).

Entries are keyed by ``(surface, pos)``; homonyms across POS are separate
entries and categories within one POS accumulate as a set.

The store does no locking. Reads may run concurrently; callers must keep
mutation (``add_entry``, ``augment_from_corpus``) exclusive.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .ccg.category import Category, CategoryParseError, cat, format_category
from .fileio import atomic_write
from .tags import POS_TAGS, check_pos, normalize_word

# Plain CCG as the prototype started out: no modals, no sentence-initial or
# particle prepositions, no n-level coordination, no sentence-final adverbs.
BASE_CATEGORIES: dict[str, list[Category]] = {
    "noun": [cat("n"), cat("np")],
    "pronoun": [cat("np")],
    "verb": [cat("s\\np"), cat("(s\\np)/np")],
    "modal": [cat("s\\np")],
    "adjective": [cat("n/n")],
    "adverb": [cat("s/s"), cat("(s\\np)/(s\\np)")],
    "preposition": [cat("(np\\np)/np"), cat("pp/np")],
    "determiner": [cat("np/n")],
    "coordinator": [cat("(np\\np)/np"), cat("(s\\s)/s")],
}

# First element of each list is the most typical reading for unseen words.
EXTENDED_CATEGORIES: dict[str, list[Category]] = {
    "noun": [cat("n"), cat("np")],
    "pronoun": [cat("np")],
    "verb": [cat("s\\np"), cat("(s\\np)/np"), cat("(s\\np)/pp")],
    "modal": [cat("(s\\np)/(s\\np)")],
    "adjective": [cat("n/n"), cat("np/np"), cat("s\\np")],
    "adverb": [cat("(s\\np)\\(s\\np)"), cat("s/s"), cat("s\\s"), cat("(s\\np)/(s\\np)")],
    "preposition": [cat("(np\\np)/np"), cat("pp/np"), cat("(s/s)/np"), cat("(s\\np)\\(s\\np)")],
    "determiner": [cat("np/n")],
    "coordinator": [cat("(np\\np)/np"), cat("(n\\n)/n"), cat("(s\\s)/s"), cat("(s/s)/s")],
}

# -ing verb forms: post-nominal modifier ("current flowing into a junction")
# and prenominal modifier ("the conducting material").
GERUND_CATEGORIES = [cat("(np\\np)/pp"), cat("n/n")]
AUXILIARY_STEMS = frozenset({"be", "have", "do"})
AUXILIARY_CATEGORIES = [cat("(s\\np)/(s\\np)")]


def extension_categories(pos: str) -> list[Category]:
    """Categories the extended table adds on top of plain CCG for ``pos``."""
    base = set(BASE_CATEGORIES[check_pos(pos)])
    return [c for c in EXTENDED_CATEGORIES[pos] if c not in base]


class LexiconFormatError(ValueError):
    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {reason}")


def _check_form(value: str, what: str) -> str:
    if not value or normalize_word(value) != value or any(ch.isspace() or ch == ";" for ch in value):
        raise ValueError(f"{what} {value!r} is not a normalized word form")
    return value


@dataclass(frozen=True)
class LexicalEntry:
    surface: str
    stem: str
    pos: str
    categories: frozenset[Category]

    def __post_init__(self):
        _check_form(self.surface, "surface")
        _check_form(self.stem, "stem")
        check_pos(self.pos)
        object.__setattr__(self, "categories", frozenset(self.categories))
        if not self.categories:
            raise ValueError(f"entry {self.surface!r}/{self.pos} has no categories")

    @property
    def key(self) -> tuple[str, str]:
        return (self.surface, self.pos)

    def to_line(self) -> str:
        cats = ";".join(sorted(format_category(c) for c in self.categories))
        return f"{self.surface}\t{self.stem}\t{self.pos}\t{cats}"

    @classmethod
    def from_line(cls, line: str, line_no: int = 0) -> "LexicalEntry":
        fields = line.rstrip("\n").split("\t")
        if len(fields) != 4:
            raise LexiconFormatError(line_no, f"expected 4 tab-separated fields, got {len(fields)}")
        surface, stem, pos, cats = fields
        try:
            return cls(surface, stem, pos, frozenset(cat(c) for c in cats.split(";") if c))
        except (CategoryParseError, ValueError) as exc:
            raise LexiconFormatError(line_no, str(exc)) from None


@dataclass(frozen=True)
class AugmentationReport:
    added: dict[str, int]
    before: int
    after: int

    @property
    def total_added(self) -> int:
        return sum(self.added.values())

    @property
    def noun_and_pronoun(self) -> int:
        """Nouns and pronouns together, the way the published table groups them."""
        return self.added.get("noun", 0) + self.added.get("pronoun", 0)

    def to_dict(self) -> dict:
        return {"added": {pos: self.added.get(pos, 0) for pos in POS_TAGS},
                "before": self.before, "after": self.after, "total_added": self.total_added}


@dataclass(frozen=True)
class CoverageReport:
    words_in_both: int
    unique_corpus_words: int

    def __post_init__(self):
        if self.unique_corpus_words <= 0:
            raise ValueError("coverage is undefined for a corpus without words")
        if not 0 <= self.words_in_both <= self.unique_corpus_words:
            raise ValueError("words_in_both must lie between 0 and unique_corpus_words")

    @property
    def coverage(self) -> float:
        return self.words_in_both / self.unique_corpus_words

    def to_dict(self) -> dict:
        return {"words_in_both": self.words_in_both, "unique_corpus_words": self.unique_corpus_words,
                "coverage": round(self.coverage, 4)}


@dataclass
class Lexicon:
    entries: dict[tuple[str, str], LexicalEntry] = field(default_factory=dict)
    defaults: dict[str, list[Category]] = field(default_factory=lambda: EXTENDED_CATEGORIES)
    # the gerund / auxiliary extensions; off for a plain CCG baseline
    extensions: bool = True

    def __post_init__(self):
        for pos in POS_TAGS:
            if not self.defaults.get(pos):
                raise ValueError(f"no default categories for {pos!r}")

    @classmethod
    def base(cls) -> "Lexicon":
        return cls(defaults=BASE_CATEGORIES, extensions=False)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[LexicalEntry]:
        for key in sorted(self.entries):
            yield self.entries[key]

    def __contains__(self, surface: str) -> bool:
        return bool(self.lookup(surface))

    def copy(self) -> "Lexicon":
        return Lexicon(dict(self.entries), self.defaults, self.extensions)

    def lookup(self, surface: str) -> set[LexicalEntry]:
        word = normalize_word(surface)
        return {self.entries[word, pos] for pos in POS_TAGS if (word, pos) in self.entries}

    def default_categories(self, pos: str) -> list[Category]:
        return list(self.defaults[check_pos(pos)])

    def categories_for(self, surface: str, pos: str, stem: str | None = None) -> list[Category]:
        """Default categories for an unseen word, including the morphology-driven ones."""
        out = self.default_categories(pos)
        if self.extensions and pos == "verb":
            extra = []
            if normalize_word(surface).endswith("ing"):
                extra += GERUND_CATEGORIES
            if stem is not None and normalize_word(stem) in AUXILIARY_STEMS:
                extra += AUXILIARY_CATEGORIES
            out += [c for c in extra if c not in out]
        return out

    def add_entry(self, entry: LexicalEntry) -> bool:
        """Insert an entry; on an existing key merge categories and return False."""
        if not isinstance(entry, LexicalEntry):
            raise TypeError("expected a LexicalEntry")
        old = self.entries.get(entry.key)
        if old is None:
            self.entries[entry.key] = entry
            return True
        self.entries[entry.key] = LexicalEntry(old.surface, old.stem, old.pos, old.categories | entry.categories)
        return False

    def add(self, surface: str, pos: str, *categories: str | Category, stem: str | None = None) -> bool:
        cats = frozenset(cat(c) if isinstance(c, str) else c for c in categories)
        word = normalize_word(surface)
        return self.add_entry(LexicalEntry(word, normalize_word(stem) if stem else word, pos, cats))

    def discard_category(self, surface: str, pos: str, category: Category) -> None:
        """Remove one category; an entry left with none is dropped."""
        key = (normalize_word(surface), pos)
        entry = self.entries.get(key)
        if entry is None:
            return
        remaining = entry.categories - {category}
        if remaining:
            self.entries[key] = LexicalEntry(entry.surface, entry.stem, entry.pos, remaining)
        else:
            del self.entries[key]

    def categories(self) -> set[Category]:
        """Every category used by some entry."""
        return {c for entry in self.entries.values() for c in entry.categories}

    def supertags(self, word: str, pos: str | None = None, fallback: bool = True,
                  stem: str | None = None) -> dict[Category, LexicalEntry]:
        """Map each candidate category of ``word`` to the entry providing it.

        All entries for the surface form are used regardless of ``pos``;
        ``pos`` only matters for the default-category fallback on unknown words.
        """
        out: dict[Category, LexicalEntry] = {}
        entries = sorted(self.lookup(word), key=lambda e: POS_TAGS.index(e.pos))
        for entry in entries:
            for c in sorted(entry.categories, key=format_category):
                out.setdefault(c, entry)
        if out or not fallback or pos not in POS_TAGS:
            return out
        surface = normalize_word(word)
        if not surface:
            return out
        stem_form = normalize_word(stem) if stem else ""
        entry = LexicalEntry(surface, stem_form or surface, pos, frozenset(self.categories_for(surface, pos, stem)))
        return {c: entry for c in sorted(entry.categories, key=format_category)}

    def augment_from_corpus(self, corpus) -> AugmentationReport:
        """Add every distinct (word, POS) of the corpus that the lexicon lacks."""
        before = len(self)
        added: Counter[str] = Counter()
        for sentence_id, index, token in _iter_tokens(corpus):
            if not token.pos:
                raise ValueError(f"sentence {sentence_id}, token {index}: missing POS annotation")
            surface = normalize_word(token.word)
            if not surface or (surface, token.pos) in self.entries:
                continue
            stem = normalize_word(token.stem) or surface
            cats = frozenset(self.categories_for(surface, token.pos, stem))
            if self.add_entry(LexicalEntry(surface, stem, token.pos, cats)):
                added[token.pos] += 1
        return AugmentationReport({pos: added.get(pos, 0) for pos in POS_TAGS}, before, len(self))

    def vocabulary_coverage(self, corpus) -> CoverageReport:
        words = corpus.unique_words()
        if not words:
            raise ValueError("coverage is undefined for a corpus without words")
        return CoverageReport(sum(1 for w in words if w in self), len(words))

    # persistence

    def dumps(self) -> str:
        return "".join(entry.to_line() + "\n" for entry in self)

    @classmethod
    def loads(cls, text: str, **kwargs) -> "Lexicon":
        lex = cls(**kwargs)
        for line_no, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.startswith("#"):
                continue
            lex.add_entry(LexicalEntry.from_line(line, line_no))
        return lex

    @classmethod
    def load(cls, path: str | os.PathLike, **kwargs) -> "Lexicon":
        return cls.loads(Path(path).read_text(encoding="utf-8"), **kwargs)

    def save(self, path: str | os.PathLike) -> None:
        atomic_write(Path(path), self.dumps().encode("utf-8"))


def _iter_tokens(corpus) -> Iterable:
    for sentence in corpus.sentences():
        for index, token in enumerate(sentence.tokens):
            yield sentence.id, index, token

