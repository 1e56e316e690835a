import pytest
from hypothesis import given, strategies as st

from ccgeval.ccg import Atomic, CategoryParseError, Complex, Slash, cat, format_category, parse_category

F, B = Slash.FORWARD, Slash.BACKWARD
s, np, n, pp = Atomic("s"), Atomic("np"), Atomic("n"), Atomic("pp")


@pytest.mark.parametrize("text, expected", [
    ("np/n", Complex(np, F, n)),
    ("s\\np/pp", Complex(Complex(s, B, np), F, pp)),
    ("np", np),
    ("n\\n/n", Complex(Complex(n, B, n), F, n)),
    ("np\\n/np", Complex(Complex(np, B, n), F, np)),
    ("(s\\np)/(s\\np)", Complex(Complex(s, B, np), F, Complex(s, B, np))),
    ("((s))", s),
])
def test_parse(text, expected):
    assert parse_category(text) == expected


@pytest.mark.parametrize("c, text", [
    (Complex(Complex(s, B, np), F, pp), "s\\np/pp"),
    (s, "s"),
    (Complex(s, F, Complex(s, B, np)), "s/(s\\np)"),
    (Complex(Complex(s, B, np), B, Complex(s, B, np)), "s\\np\\(s\\np)"),
])
def test_format(c, text):
    assert format_category(c) == text
    assert str(c) == text


@pytest.mark.parametrize("text, position", [
    ("(s\\np", 0),
    ("s\\np)", 4),
    ("s/vp", 2),
    ("s/", 1),
    ("", 0),
    ("NP", 0),
    ("s np", 1),
    ("/np", 0),
])
def test_malformed(text, position):
    with pytest.raises(CategoryParseError) as info:
        parse_category(text)
    assert info.value.position == position


def test_unknown_atom_is_rejected_by_constructor():
    with pytest.raises(ValueError):
        Atomic("vp")


def test_slash_shorthand():
    assert Complex(s, "\\", np) == cat("s\\np")
    assert cat("s\\np").backward and cat("s/np").forward


def test_depth():
    assert cat("np").depth == 0
    assert cat("s\\np/pp").depth == 2
    assert cat("(s\\np)/(s\\np)").depth == 2


atoms = st.sampled_from([s, np, n, pp, Atomic("conj")])
categories = st.recursive(
    atoms,
    lambda inner: st.builds(Complex, inner, st.sampled_from([F, B]), inner),
    max_leaves=32,
).filter(lambda c: c.depth <= 5)


@given(categories)
def test_round_trip(c):
    assert parse_category(format_category(c)) == c
