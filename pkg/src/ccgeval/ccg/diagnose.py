"""Explain why a sentence fails to parse.

The search is single-addition only: each candidate category is tried on
each token on its own, so a repair list names exactly the supertags whose
absence alone blocks a parse.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence

from .category import Category, format_category
from .chart import Chart, Parser

_REPAIR = object()


class NothingToDiagnose(ValueError):
    def __init__(self, sentence_id=None):
        super().__init__("nothing to diagnose: sentence already parses"
                         + (f" ({sentence_id})" if sentence_id is not None else ""))


@dataclass(frozen=True)
class MissingCategoryReport:
    sentence_id: str | None
    unknown_tokens: tuple[int, ...]
    # (start, end, categories found over that span)
    maximal_spans: tuple[tuple[int, int, frozenset[Category]], ...]
    suggestions: tuple[tuple[int, Category], ...]

    @property
    def repairable(self) -> bool:
        return bool(self.suggestions)

    def to_dict(self) -> dict:
        return {
            "sentence_id": self.sentence_id,
            "unknown_tokens": list(self.unknown_tokens),
            "maximal_spans": [
                {"start": i, "end": j, "categories": sorted(format_category(c) for c in cats)}
                for i, j, cats in self.maximal_spans
            ],
            "suggestions": [{"token": i, "category": format_category(c)} for i, c in self.suggestions],
        }


def diagnose_tokens(tokens: Sequence[Iterable[Category] | Mapping[Category, Any]], pool: Iterable[Category],
                    parser: Parser = Parser(), sentence_id: str | None = None) -> MissingCategoryReport:
    """Diagnose a failed parse given per-token category sets."""
    leaves = [dict(t) if isinstance(t, Mapping) else {c: None for c in t} for t in tokens]
    if not leaves:
        raise ValueError("cannot diagnose an empty sentence")
    base = Chart(leaves, parser.rules)
    unknown = tuple(i for i, leaf in enumerate(leaves) if not leaf)
    if not unknown and parser.recognizes(base):
        raise NothingToDiagnose(sentence_id)

    candidates = sorted(set(pool), key=format_category)
    suggestions = []
    for position, leaf in enumerate(leaves):
        for category in candidates:
            if category in leaf:
                continue
            trial = list(leaves)
            trial[position] = {**leaf, category: _REPAIR}
            if not parser.recognizes(Chart(trial, parser.rules, base=base, changed=position)):
                continue
            # independent confirmation on a freshly built chart
            if trial_parses(trial, parser):
                suggestions.append((position, category))

    spans = tuple((i, j, frozenset(base.cells[i, j])) for i, j in base.maximal_spans())
    return MissingCategoryReport(sentence_id, unknown, spans, tuple(suggestions))


def trial_parses(leaves, parser: Parser) -> bool:
    if any(not leaf for leaf in leaves):
        return False
    return parser.recognizes(Chart(leaves, parser.rules))


def diagnose_failure(sentence, lexicon, pool: Iterable[Category], parser: Parser = Parser(),
                     fallback: bool = True) -> MissingCategoryReport:
    """Diagnose a corpus sentence against a lexicon.

    ``sentence`` needs ``tokens`` (each with ``word`` and ``pos``) and ``id``;
    a plain list of words also works, in which case POS fallback is off.
    """
    if hasattr(sentence, "tokens"):
        sentence_id = sentence.id
        tokens = [lexicon.supertags(t.word, t.pos, fallback=fallback, stem=t.stem) for t in sentence.tokens]
    else:
        sentence_id = None
        tokens = [lexicon.supertags(word, None, fallback=False) for word in sentence]
    return diagnose_tokens(tokens, pool, parser, sentence_id)
