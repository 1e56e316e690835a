import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import scan_saturation, zipf_stream
from ccgeval.corpus import AnnotatedCorpus, AnnotatedToken, Document, Sentence
from ccgeval.saturation import (Selector, cumulative_frequency, new_type_curve, read_terms, saturation_index,
                                segment)


def test_segment_sizes():
    assert [len(s) for s in segment(list("abcdefghij"), 3)] == [4, 3, 3]
    sizes = [len(s) for s in segment(range(18834), 15)]
    assert sum(sizes) == 18834
    assert sizes == [1256] * 9 + [1255] * 6


def test_segment_is_contiguous():
    samples = segment(range(10), 4)
    assert [(s.start, s.end) for s in samples] == [(0, 3), (3, 6), (6, 8), (8, 10)]
    assert sum((list(s.tokens) for s in samples), []) == list(range(10))


@pytest.mark.parametrize("k", [0, -1, 11])
def test_segment_rejects(k):
    with pytest.raises(ValueError):
        segment(range(10), k)


def test_segment_ignores_sentences():
    sents = [Sentence(f"s{i}", [AnnotatedToken(w, w, "noun") for w in "abc"]) for i in range(2)]
    corpus = AnnotatedCorpus([Document("u", "", sents)])
    assert [len(s) for s in segment(corpus, 4)] == [2, 2, 1, 1]


def test_cumulative_frequency():
    samples = segment("resistor the resistor Resistor, of ohm lamp resistor".split(), 4)
    per, cum = cumulative_frequency(samples, ["resistor"])
    assert per == [1, 2, 0, 1]
    assert cum == [1, 3, 3, 4]
    per, cum = cumulative_frequency(samples, ["ohm", "lamp"])
    assert cum == [0, 0, 1, 2]
    with pytest.raises(ValueError):
        cumulative_frequency(samples, ["", "  "])


def test_new_type_curve_small():
    curve = new_type_curve(segment("a b a c b d a a".split(), 4), epsilon=0.3, window=1)
    assert curve.per_sample_new == (2, 1, 1, 0)
    assert curve.cumulative == (2, 3, 4, 4)
    # limit 1.2: sample 2 adds 1
    assert curve.saturation_index == 1


@pytest.mark.parametrize("new, eps, window, index", [
    ([50, 30, 10, 1, 1, 1, 0], 0.02, 3, 3),
    ([50, 30, 10, 1, 1, 1, 0], 0.02, 10, 3),
    ([10, 10, 10, 10], 0.02, 3, None),
    ([5, 0, 0, 0], 0.02, 3, 1),
    ([7], 0.5, 3, None),
    ([10, 0, 3, 0, 0], 0.1, 2, 3),
])
def test_saturation_index_examples(new, eps, window, index):
    assert saturation_index(new, eps, window) == index


def test_saturation_index_rejects():
    with pytest.raises(ValueError):
        saturation_index([1, 2], 0.0)
    with pytest.raises(ValueError):
        saturation_index([1, 2], 0.1, 0)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 40), min_size=1, max_size=20), st.floats(0.001, 0.5), st.integers(1, 5))
def test_index_matches_literal_scan(new, eps, window):
    assert saturation_index(new, eps, window) == scan_saturation(new, eps, window)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 40), min_size=2, max_size=15), st.integers(1, 5))
def test_larger_epsilon_saturates_no_later(new, window):
    indices = [saturation_index(new, e, window) for e in (0.01, 0.05, 0.2, 0.6)]
    finite = [i for i in indices if i is not None]
    assert finite == sorted(finite, reverse=True)
    # once some epsilon saturates, larger ones do too
    first = next((n for n, i in enumerate(indices) if i is not None), len(indices))
    assert all(i is not None for i in indices[first:])


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 15))
def test_curve_conserves_types(seed, k):
    rng = random.Random(seed)
    stream = zipf_stream(rng, 60, rng.randint(k, 400))
    curve = new_type_curve(segment(stream, k))
    assert sum(curve.per_sample_new) == curve.cumulative[-1] == len(set(stream))
    assert list(curve.cumulative) == sorted(curve.cumulative)


def test_pos_and_term_selectors():
    sents = [Sentence("s1", [AnnotatedToken("Lamps", "lamp", "noun"), AnnotatedToken("glow", "glow", "verb"),
                             AnnotatedToken("in", "in", "preposition"), AnnotatedToken("series", "series", "noun")])]
    corpus = AnnotatedCorpus([Document("u", "", sents)])
    samples = segment(corpus, 2)
    assert new_type_curve(samples, Selector.for_pos("noun")).per_sample_new == (1, 1)
    assert new_type_curve(samples, Selector.for_pos("verb")).per_sample_new == (1, 0)
    terms = new_type_curve(samples, Selector.for_terms(["Series", "ohm"]))
    assert terms.per_sample_new == (0, 1) and terms.selector == "terms:ohm,series"
    with pytest.raises(ValueError):
        Selector.for_pos("article")
    with pytest.raises(ValueError):
        Selector.for_terms([])


def test_csv_format():
    curve = new_type_curve(segment("a b c d".split(), 2))
    text = curve.to_csv(["selector=all"])
    assert text == "sample,new,cumulative\n1,2,2\n2,2,4\n# selector=all\n# saturation_index=none\n"
    done = new_type_curve(segment("a b a a".split(), 2), epsilon=0.1)
    assert done.to_csv().endswith("# saturation_index=1\n")


def test_read_terms():
    assert read_terms("# physics\nresistor\n\n  ohm \n") == ["resistor", "ohm"]
