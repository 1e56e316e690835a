"""CCG categories and their slash notation.

The notation is left-associative, so ``s\\np/pp`` reads as ``(s\\np)/pp``.
Only the argument side of a slash ever needs parentheses when formatting.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

ATOMS = frozenset({"s", "np", "n", "pp", "conj"})


class Slash(str, enum.Enum):
    FORWARD = "/"
    BACKWARD = "\\"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Atomic:
    name: str

    def __post_init__(self):
        if self.name not in ATOMS:
            raise ValueError(f"unknown atomic category {self.name!r}")

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Atomic({self.name})"

    @property
    def depth(self) -> int:
        return 0


@dataclass(frozen=True)
class Complex:
    result: "Category"
    slash: Slash
    argument: "Category"

    def __post_init__(self):
        # accept "/" and "\\" as shorthand
        object.__setattr__(self, "slash", Slash(self.slash))

    def __str__(self) -> str:
        return format_category(self)

    def __repr__(self) -> str:
        return f"Complex({self!s})"

    @property
    def depth(self) -> int:
        return 1 + max(self.result.depth, self.argument.depth)

    @property
    def forward(self) -> bool:
        return self.slash is Slash.FORWARD

    @property
    def backward(self) -> bool:
        return self.slash is Slash.BACKWARD


Category = Union[Atomic, Complex]

S = Atomic("s")
NP = Atomic("np")
N = Atomic("n")
PP = Atomic("pp")
CONJ = Atomic("conj")


class CategoryParseError(ValueError):
    """Malformed slash notation; ``position`` is a 0-based character offset."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position} in {text!r}")


def format_category(cat: Category) -> str:
    if isinstance(cat, Atomic):
        return cat.name
    arg = format_category(cat.argument)
    if isinstance(cat.argument, Complex):
        arg = f"({arg})"
    return f"{format_category(cat.result)}{cat.slash.value}{arg}"


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, reason: str, at: int | None = None):
        return CategoryParseError(self.text, self.pos if at is None else at, reason)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expression(self) -> Category:
        cat = self.term()
        while self.peek() in ("/", "\\"):
            slash = Slash(self.peek())
            self.pos += 1
            if not self.peek():
                raise self.error("trailing slash", self.pos - 1)
            cat = Complex(cat, slash, self.term())
        return cat

    def term(self) -> Category:
        ch = self.peek()
        if ch == "(":
            opened = self.pos
            self.pos += 1
            cat = self.expression()
            if self.peek() != ")":
                raise self.error("unbalanced parenthesis", opened)
            self.pos += 1
            return cat
        start = self.pos
        while self.peek().isalpha():
            self.pos += 1
        name = self.text[start:self.pos]
        if not name:
            if not ch:
                raise self.error("unexpected end of notation")
            raise self.error(f"unexpected character {ch!r}")
        if name not in ATOMS:
            raise self.error(f"unknown atomic category {name!r}", start)
        return Atomic(name)


@lru_cache(maxsize=4096)
def parse_category(text: str) -> Category:
    """Parse slash notation such as ``s\\np/pp`` into a Category."""
    if not text:
        raise CategoryParseError(text, 0, "empty notation")
    reader = _Reader(text)
    cat = reader.expression()
    if reader.pos != len(text):
        ch = text[reader.pos]
        reason = "unbalanced parenthesis" if ch == ")" else f"unexpected character {ch!r}"
        raise reader.error(reason)
    return cat


def cat(text: str) -> Category:
    """Short alias of :func:`parse_category` for fixtures and tables."""
    return parse_category(text)
