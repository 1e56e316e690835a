import pytest

from oracles import recognizer_roots
from ccgeval.ccg import Parser, cat
from ccgeval.corpus import AnnotatedCorpus, AnnotatedToken, Document, Sentence
from ccgeval.evaluate import (ParseReport, SentenceOutcome, parsing_ability, svo_counts, svo_profile,
                              unsupported_structure_fraction)
from ccgeval.lexicon import Lexicon

LEXICON = [("the", "determiner", "np/n"), ("lamp", "noun", "n"), ("battery", "noun", "n"),
           ("glows", "verb", "s\\np"), ("powers", "verb", "(s\\np)/np"), ("can", "modal", "(s\\np)/(s\\np)"),
           ("break", "verb", "(s\\np)/np"), ("connected", "verb", "(s\\np)/pp"), ("to", "preposition", "pp/np"),
           ("it", "pronoun", "np")]


@pytest.fixture
def lexicon():
    lex = Lexicon()
    for word, pos, c in LEXICON:
        lex.add(word, pos, c)
    return lex


def corpus(*texts):
    pos = {w: p for w, p, _ in LEXICON}
    sents = [Sentence(f"s{i}", [AnnotatedToken(w, w, pos.get(w, "noun")) for w in text.split()])
             for i, text in enumerate(texts, 1)]
    return AnnotatedCorpus([Document("u", "", sents)])


def first(lexicon, text, root="s"):
    report = parsing_ability(corpus(text), lexicon, Parser(root=cat(root)), fallback=False)
    (outcome,) = report.outcomes
    assert outcome.parsed, text
    return outcome


@pytest.mark.parametrize("text, svo", [
    ("the lamp glows", (1, 0, 1)),
    ("the battery powers the lamp", (1, 1, 1)),
    ("it connected to the lamp", (1, 1, 1)),
    # the modal takes s\np, which is not an object
    ("the battery can break the lamp", (1, 1, 1)),
])
def test_svo_examples(lexicon, text, svo):
    o = first(lexicon, text)
    assert svo_counts(o.derivations[0], o.n_tokens) == svo


def test_svo_without_verb(lexicon):
    o = first(lexicon, "the lamp", root="np")
    assert svo_counts(o.derivations[0], 2) == (0, 0, 0)
    with pytest.raises(ValueError):
        svo_counts(o.derivations[0].children[0], 2)


def test_report_counts(lexicon):
    report = parsing_ability(corpus("the lamp glows", "lamp glows", "the battery powers the lamp",
                                    "glows the"), lexicon, fallback=False)
    assert (report.total_sentences, report.parsed_sentences) == (4, 2)
    assert report.efficiency == 0.5 and report.failure_fraction == 0.5
    d = report.to_dict()
    assert d["efficiency"] == 0.5
    assert d["sentences"][0]["svo"] == [1, 0, 1]
    assert "diagnosis" in d["sentences"][1]
    summary = report.summary_csv().splitlines()
    assert summary[0] == "sentence_id,outcome,derivations,subjects,objects,verbs"
    assert summary[1] == "1/s1,parsed,1,1,0,1"
    assert summary[2] == "1/s2,failed,0,,,"


def test_efficiency_ratios():
    def report(parsed, total):
        return ParseReport(tuple(SentenceOutcome(1, f"s{i}", 1, i < parsed, int(i < parsed))
                                 for i in range(total)))
    assert round(report(300, 981).efficiency, 4) == 0.3058
    assert ParseReport(()).efficiency == 0.0


def test_unknown_word_without_fallback(lexicon):
    report = parsing_ability(corpus("the resistor glows"), lexicon, fallback=False)
    (o,) = report.outcomes
    assert not o.parsed and o.diagnosis.unknown_tokens == (1,)
    assert (1, cat("n")) in o.diagnosis.suggestions
    assert unsupported_structure_fraction(report) == 0.0


def test_unsupported_fraction(lexicon):
    report = parsing_ability(corpus("the lamp glows", "glows glows glows", "lamp lamp"), lexicon, fallback=False)
    stuck = [o.sentence_id for o in report.outcomes if o.diagnosis and not o.diagnosis.suggestions]
    assert stuck == ["s2", "s3"]
    assert unsupported_structure_fraction(report) == pytest.approx(2 / 3)
    nodiag = parsing_ability(corpus("glows glows glows"), lexicon, fallback=False, diagnose=False)
    assert unsupported_structure_fraction(nodiag) == 0.0


def test_profile(lexicon):
    report = parsing_ability(corpus("the lamp glows", "it glows", "the battery powers the lamp", "glows"),
                             lexicon, fallback=False)
    profile = svo_profile(report)
    assert profile.histogram == {(1, 0, 1): 2, (1, 1, 1): 1}
    assert profile.mode() == (1, 0, 1)
    assert profile.to_dict()["profiled_sentences"] == 3
    assert svo_profile(ParseReport(())).mode() is None


def test_mini_corpus_outcomes(mini_corpus, full_lexicon):
    report = parsing_ability(mini_corpus, full_lexicon)
    failed = [o.sentence_id for o in report.outcomes if not o.parsed]
    assert failed == ["s8", "s14", "s15", "s16", "s17", "s18", "s27", "s39", "s43"]
    assert report.efficiency == 41 / 50
    assert unsupported_structure_fraction(report) == pytest.approx(0.1)
    assert svo_profile(report).histogram == {(1, 0, 1): 6, (1, 1, 1): 27, (2, 0, 2): 4, (1, 1, 2): 4}
    # an independent recognizer must agree sentence by sentence
    for sentence, outcome in zip(mini_corpus.sentences(), report.outcomes):
        sets = [set(full_lexicon.supertags(t.word, t.pos, stem=t.stem)) for t in sentence.tokens]
        assert (cat("s") in recognizer_roots(sets)) == outcome.parsed, sentence.id


def test_mini_corpus_repairs_match_exhaustive_search(mini_corpus, full_lexicon):
    report = parsing_ability(mini_corpus, full_lexicon)
    pool = sorted(full_lexicon.categories(), key=str)
    for sentence, outcome in zip(mini_corpus.sentences(), report.outcomes):
        if outcome.parsed:
            continue
        sets = [set(full_lexicon.supertags(t.word, t.pos, stem=t.stem)) for t in sentence.tokens]
        found = set()
        for i, c in ((i, c) for i in range(len(sets)) for c in pool if c not in sets[i]):
            trial = [set(t) for t in sets]
            trial[i].add(c)
            if cat("s") in recognizer_roots(trial):
                found.add((i, c))
        assert found == set(outcome.diagnosis.suggestions), sentence.id
