import itertools

import pytest
from hypothesis import given, strategies as st

from ccgeval.ccg import APPLICATION_ONLY, BA, BC, CONJ_PROMOTE, FA, FC, RuleSet, cat, combine
from oracles import oracle_combine, schema_results, to_term


@pytest.mark.parametrize("left, right, expected", [
    ("np/n", "n", {("np", FA)}),
    ("np", "s\\np", {("s", BA)}),
    ("n", "np", set()),
    ("s/np", "np/n", {("s/n", FC)}),
    ("s\\np", "s\\s", {("s\\np", BC)}),
    ("np\\np/np", "np", {("np\\np", FA)}),
    ("(s\\np)/(s\\np)", "(s\\np)/np", {("(s\\np)/np", FC)}),
])
def test_combine(left, right, expected):
    assert combine(cat(left), cat(right)) == {(cat(c), r) for c, r in expected}


def test_composition_flag():
    assert combine(cat("s/np"), cat("np/n"), APPLICATION_ONLY) == set()
    assert combine(cat("np/n"), cat("n"), APPLICATION_ONLY) == {(cat("np"), FA)}


def test_conj_promote_off_by_default():
    assert combine(cat("conj"), cat("np")) == set()
    rules = RuleSet(conj_promote=True)
    assert combine(cat("conj"), cat("np"), rules) == {(cat("np\\np"), CONJ_PROMOTE)}


POOL = [cat(t) for t in ["s", "np", "n", "pp", "np/n", "n/n", "s\\np", "s/np", "np\\np", "(s\\np)/np",
                         "s\\s", "s/s", "(s\\np)\\(s\\np)", "(s\\np)/(s\\np)", "np/np", "(np\\np)/np",
                         "pp/np", "(s/s)/np", "s/(s\\np)", "(n\\n)/n"]]


def test_matches_schema_enumerator_on_pool():
    for left, right in itertools.product(POOL, repeat=2):
        assert combine(left, right) == oracle_combine(left, right), (left, right)
        assert combine(left, right, RuleSet(conj_promote=True)) == oracle_combine(left, right, conj=True)


@given(st.sampled_from(POOL), st.sampled_from(POOL))
def test_results_revalidate_against_schema(left, right):
    for result, rule in combine(left, right):
        assert (to_term(result), rule) in schema_results(to_term(left), to_term(right))
