"""CKY chart parsing over CCG categories.

The chart is packed: each cell maps a category to the backpointers that
built it, and derivation trees are only unpacked on request.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .category import S, Category, format_category
from .rules import DEFAULT_RULES, LEX, RuleSet, combine

DEFAULT_MAX_DERIVATIONS = 256


class EmptyTokenError(ValueError):
    """A token reached the parser with no categories at all."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"token {index} has an empty category set")


class DerivationError(ValueError):
    pass


@dataclass(frozen=True)
class Derivation:
    """A binary derivation tree; ``span`` is ``(start, end)`` with exclusive end."""

    span: tuple[int, int]
    category: Category
    rule: str
    children: tuple["Derivation", ...] = ()
    entry: Any = field(default=None, compare=False)

    def key(self) -> tuple:
        """Canonical sort key, stable across processes."""
        return (self.span, format_category(self.category), self.rule,
                tuple(child.key() for child in self.children))

    def leaves(self) -> Iterator["Derivation"]:
        if not self.children:
            yield self
            return
        for child in self.children:
            yield from child.leaves()

    def nodes(self) -> Iterator["Derivation"]:
        yield self
        for child in self.children:
            yield from child.nodes()

    def check(self, rules: RuleSet = DEFAULT_RULES) -> None:
        """Raise :class:`DerivationError` unless every node is re-derivable."""
        for node in self.nodes():
            start, end = node.span
            if node.rule == LEX:
                if node.children or end - start != 1:
                    raise DerivationError(f"bad lexical node at {node.span}")
                continue
            if len(node.children) != 2:
                raise DerivationError(f"{node.rule} node at {node.span} needs two children")
            left, right = node.children
            if left.span[0] != start or left.span[1] != right.span[0] or right.span[1] != end:
                raise DerivationError(f"child spans do not tile {node.span}")
            if (node.category, node.rule) not in combine(left.category, right.category, rules):
                raise DerivationError(
                    f"{node.rule} does not yield {format_category(node.category)} at {node.span}")

    def pretty(self, words: Sequence[str] | None = None, indent: int = 0) -> str:
        pad = "  " * indent
        label = f"{format_category(self.category)} [{self.rule}]"
        if not self.children:
            word = words[self.span[0]] if words else str(self.span[0])
            return f"{pad}{label} {word}"
        return "\n".join([f"{pad}{label}"] + [c.pretty(words, indent + 1) for c in self.children])


def _as_leaf(token: Iterable[Category] | Mapping[Category, Any]) -> dict[Category, Any]:
    if isinstance(token, Mapping):
        return dict(token)
    return {c: None for c in token}


def _bp_key(bp: tuple) -> tuple:
    if bp[0] == LEX:
        return (LEX,)
    rule, split, left, right = bp
    return (rule, split, format_category(left), format_category(right))


class Chart:
    """A filled CKY chart.

    Passing ``base`` and ``changed`` reuses every cell of ``base`` whose span
    does not cover token ``changed``; used when probing single-token repairs.
    """

    def __init__(self, leaves: Sequence[Mapping[Category, Any]], rules: RuleSet = DEFAULT_RULES,
                 base: "Chart | None" = None, changed: int | None = None):
        self.leaves = [dict(leaf) for leaf in leaves]
        self.n = len(self.leaves)
        self.rules = rules
        self.cells: dict[tuple[int, int], dict[Category, list[tuple]]] = {}
        for i, leaf in enumerate(self.leaves):
            self.cells[i, i + 1] = {c: [(LEX,)] for c in leaf}
        reuse = base is not None and changed is not None and base.n == self.n
        for length in range(2, self.n + 1):
            for i in range(self.n - length + 1):
                j = i + length
                if reuse and not (i <= changed < j):
                    self.cells[i, j] = base.cells[i, j]
                    continue
                cell: dict[Category, list[tuple]] = {}
                for k in range(i + 1, j):
                    lefts, rights = self.cells[i, k], self.cells[k, j]
                    if not lefts or not rights:
                        continue
                    for a in lefts:
                        for b in rights:
                            for result, rule in combine(a, b, rules):
                                cell.setdefault(result, []).append((rule, k, a, b))
                self.cells[i, j] = cell

    def categories(self, start: int, end: int) -> set[Category]:
        return set(self.cells.get((start, end), ()))

    def full_span(self) -> set[Category]:
        return self.categories(0, self.n) if self.n else set()

    def maximal_spans(self) -> list[tuple[int, int]]:
        """Non-empty spans not strictly contained in a longer non-empty span."""
        filled = [span for span, cell in self.cells.items() if cell]
        out = []
        for i, j in filled:
            if not any(a <= i and j <= b and (a, b) != (i, j) for a, b in filled):
                out.append((i, j))
        return sorted(out)

    def derivations(self, category: Category, start: int = 0, end: int | None = None,
                    cap: int = DEFAULT_MAX_DERIVATIONS) -> list[Derivation]:
        """Unpack up to ``cap`` trees for ``category`` over the span, in canonical order."""
        end = self.n if end is None else end
        memo: dict[tuple[int, int, Category], list[Derivation]] = {}
        found = self._unpack(start, end, category, cap, memo)
        return sorted(found, key=Derivation.key)

    def _unpack(self, i, j, category, cap, memo) -> list[Derivation]:
        key = (i, j, category)
        if key in memo:
            return memo[key]
        out: list[Derivation] = []
        for bp in sorted(self.cells.get((i, j), {}).get(category, ()), key=_bp_key):
            if bp[0] == LEX:
                out.append(Derivation((i, j), category, LEX, (), self.leaves[i][category]))
                continue
            rule, k, a, b = bp
            lefts = self._unpack(i, k, a, cap, memo)
            rights = self._unpack(k, j, b, cap, memo)
            for left, right in product(lefts, rights):
                out.append(Derivation((i, j), category, rule, (left, right)))
                if len(out) >= cap:
                    break
            if len(out) >= cap:
                break
        memo[key] = out
        return out


@dataclass(frozen=True)
class Parser:
    root: Category = S
    rules: RuleSet = DEFAULT_RULES
    max_derivations: int = DEFAULT_MAX_DERIVATIONS

    def __post_init__(self):
        if self.max_derivations < 1:
            raise ValueError("max_derivations must be at least 1")

    def chart(self, tokens: Sequence[Iterable[Category] | Mapping[Category, Any]]) -> Chart:
        return Chart([_as_leaf(t) for t in tokens], self.rules)

    def parse(self, tokens: Sequence[Iterable[Category] | Mapping[Category, Any]]) -> list[Derivation]:
        """All full-span derivations rooted in ``self.root`` (capped)."""
        leaves = [_as_leaf(t) for t in tokens]
        if not leaves:
            raise ValueError("cannot parse an empty token sequence")
        for i, leaf in enumerate(leaves):
            if not leaf:
                raise EmptyTokenError(i)
        chart = Chart(leaves, self.rules)
        if self.root not in chart.full_span():
            return []
        return chart.derivations(self.root, cap=self.max_derivations)

    def recognizes(self, chart: Chart) -> bool:
        return self.root in chart.full_span()


def cky_parse(tokens, *, root: Category = S, rules: RuleSet = DEFAULT_RULES,
              max_derivations: int = DEFAULT_MAX_DERIVATIONS) -> list[Derivation]:
    """Parse a sequence of per-token category sets.

    Each token is either a collection of categories or a mapping from
    category to the lexical entry that supplied it; entries end up on the
    LEX leaves. An empty list means the sentence did not parse.
    """
    return Parser(root, rules, max_derivations).parse(tokens)
