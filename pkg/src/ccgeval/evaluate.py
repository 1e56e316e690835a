"""Corpus-level parse-ability, subject/object/verb profiling, failure accounting."""
from __future__ import annotations

import io
from collections import Counter
from dataclasses import dataclass, field, replace

from .ccg.category import NP, PP, S, Complex, format_category
from .ccg.chart import Derivation, Parser
from .ccg.diagnose import MissingCategoryReport, diagnose_tokens
from .ccg.rules import BA, BC, FA, LEX

VERBAL_POS = ("verb", "modal")


@dataclass(frozen=True)
class SentenceOutcome:
    document: int
    sentence_id: str
    n_tokens: int
    parsed: bool
    derivation_count: int
    derivations: tuple[Derivation, ...] = field(default=(), repr=False, compare=False)
    diagnosis: MissingCategoryReport | None = None

    @property
    def key(self) -> str:
        return f"{self.document}/{self.sentence_id}"


@dataclass(frozen=True)
class ParseReport:
    outcomes: tuple[SentenceOutcome, ...]

    @property
    def total_sentences(self) -> int:
        return len(self.outcomes)

    @property
    def parsed_sentences(self) -> int:
        return sum(1 for o in self.outcomes if o.parsed)

    @property
    def efficiency(self) -> float:
        return self.parsed_sentences / self.total_sentences if self.outcomes else 0.0

    @property
    def failure_fraction(self) -> float:
        return 1.0 - self.efficiency if self.outcomes else 0.0

    def to_dict(self) -> dict:
        sentences = []
        for o in self.outcomes:
            row = {"sentence_id": o.key, "tokens": o.n_tokens, "parsed": o.parsed,
                   "derivations": o.derivation_count}
            if o.parsed:
                row["svo"] = list(svo_counts(o.derivations[0], o.n_tokens))
            elif o.diagnosis is not None:
                row["diagnosis"] = o.diagnosis.to_dict()
            sentences.append(row)
        return {
            "total_sentences": self.total_sentences,
            "parsed_sentences": self.parsed_sentences,
            "efficiency": round(self.efficiency, 4),
            "unsupported_structure_fraction": round(unsupported_structure_fraction(self), 4),
            "sentences": sentences,
        }

    def summary_csv(self) -> str:
        out = io.StringIO()
        out.write("sentence_id,outcome,derivations,subjects,objects,verbs\n")
        for o in self.outcomes:
            if o.parsed:
                s, obj, v = svo_counts(o.derivations[0], o.n_tokens)
                out.write(f"{o.key},parsed,{o.derivation_count},{s},{obj},{v}\n")
            else:
                out.write(f"{o.key},failed,0,,,\n")
        return out.getvalue()

    def failures_csv(self) -> str:
        out = io.StringIO()
        out.write("sentence_id,unknown_tokens,maximal_spans,suggestions\n")
        for o in self.outcomes:
            if o.parsed or o.diagnosis is None:
                continue
            d = o.diagnosis
            unknown = " ".join(str(i) for i in d.unknown_tokens)
            spans = " ".join(f"{i}-{j}" for i, j, _ in d.maximal_spans)
            fixes = " ".join(f"{i}:{format_category(c)}" for i, c in d.suggestions)
            out.write(f"{o.key},{unknown},{spans},{fixes}\n")
        return out.getvalue()


def parsing_ability(corpus, lexicon, parser: Parser = Parser(), fallback: bool = True,
                    diagnose: bool = True) -> ParseReport:
    """Parse every sentence; diagnose failures against the lexicon's own categories."""
    pool = lexicon.categories()
    outcomes = []
    # sentences with identical supertag maps (same entries) share one result
    seen: dict[tuple, tuple] = {}
    for doc_index, doc in enumerate(corpus.documents, 1):
        for sentence in doc.sentences:
            tokens = [lexicon.supertags(t.word, t.pos, fallback=fallback, stem=t.stem) for t in sentence.tokens]
            signature = tuple(tuple(t.items()) for t in tokens)
            if signature not in seen:
                derivations = parser.parse(tokens) if all(tokens) else []
                diagnosis = None
                if not derivations and diagnose:
                    diagnosis = diagnose_tokens(tokens, pool, parser)
                seen[signature] = (tuple(derivations), diagnosis)
            derivations, diagnosis = seen[signature]
            if diagnosis is not None:
                diagnosis = replace(diagnosis, sentence_id=sentence.id)
            outcomes.append(SentenceOutcome(doc_index, sentence.id, len(tokens), bool(derivations),
                                            len(derivations), derivations, diagnosis))
    return ParseReport(tuple(outcomes))


def _head(node: Derivation) -> Derivation:
    while node.children:
        node = node.children[1] if node.rule in (BA, BC) else node.children[0]
    return node


def _is_verbal(node: Derivation) -> bool:
    entry = _head(node).entry
    return entry is not None and entry.pos in VERBAL_POS


def svo_counts(derivation: Derivation, n_tokens: int | None = None) -> tuple[int, int, int]:
    """(subjects, objects, verbs) of one complete derivation.

    Subjects are np arguments taken by backward application into ``s``;
    objects are np/pp arguments taken by forward application by a
    verb- or modal-headed functor; verbs are LEX leaves tagged verb.
    """
    start, end = derivation.span
    if start != 0 or (n_tokens is not None and end != n_tokens):
        raise ValueError(f"derivation over {derivation.span} does not cover the sentence")
    subjects = objects = verbs = 0
    for node in derivation.nodes():
        if node.rule == LEX:
            if node.entry is not None and node.entry.pos == "verb":
                verbs += 1
        elif node.rule == BA:
            functor = node.children[1].category
            if isinstance(functor, Complex) and functor.argument == NP and functor.result == S:
                subjects += 1
        elif node.rule == FA:
            functor_node = node.children[0]
            functor = functor_node.category
            if isinstance(functor, Complex) and functor.argument in (NP, PP) and _is_verbal(functor_node):
                objects += 1
    return subjects, objects, verbs


@dataclass(frozen=True)
class SvoProfile:
    per_sentence: tuple[tuple[str, tuple[int, int, int]], ...]
    histogram: dict[tuple[int, int, int], int]

    def mode(self) -> tuple[int, int, int] | None:
        if not self.histogram:
            return None
        return max(sorted(self.histogram), key=lambda t: self.histogram[t])

    def to_dict(self) -> dict:
        return {
            "profiled_sentences": len(self.per_sentence),
            "histogram": [{"subjects": s, "objects": o, "verbs": v, "sentences": n}
                          for (s, o, v), n in sorted(self.histogram.items())],
            "sentences": [{"sentence_id": key, "subjects": s, "objects": o, "verbs": v}
                          for key, (s, o, v) in self.per_sentence],
        }


def svo_profile(report: ParseReport) -> SvoProfile:
    rows = tuple((o.key, svo_counts(o.derivations[0], o.n_tokens)) for o in report.outcomes if o.parsed)
    return SvoProfile(rows, dict(Counter(triple for _, triple in rows)))


def unsupported_structure_fraction(report: ParseReport) -> float:
    """Share of all sentences whose failure no single added category can fix.

    Only diagnosed failures count, so a report built without diagnosis yields 0.
    """
    if not report.outcomes:
        return 0.0
    stuck = sum(1 for o in report.outcomes
                if not o.parsed and o.diagnosis is not None and not o.diagnosis.suggestions)
    return stuck / report.total_sentences
