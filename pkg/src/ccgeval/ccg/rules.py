"""Binary combinatory rules.

Application and harmonic composition only. Type-raising and crossed
composition are deliberately absent.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .category import CONJ, Category, Complex, Slash

LEX = "LEX"
FA = "FA"
BA = "BA"
FC = "FC"
BC = "BC"
CONJ_PROMOTE = "CONJ-PROMOTE"

RULE_NAMES = (LEX, FA, BA, FC, BC, CONJ_PROMOTE)


@dataclass(frozen=True)
class RuleSet:
    """Which combinators the parser may use.

    ``conj_promote`` turns on ``conj X => X\\X``; off by default because the
    lexicon gives coordinators concrete slash categories instead.
    """

    composition: bool = True
    conj_promote: bool = False


DEFAULT_RULES = RuleSet()
APPLICATION_ONLY = RuleSet(composition=False)


def combine(left: Category, right: Category, rules: RuleSet = DEFAULT_RULES) -> frozenset[tuple[Category, str]]:
    """Every ``(result, rule)`` obtainable by one rule application."""
    return _combine(left, right, rules)


@lru_cache(maxsize=1 << 16)
def _combine(left: Category, right: Category, rules: RuleSet) -> frozenset[tuple[Category, str]]:
    out = []
    if isinstance(left, Complex) and left.forward:
        # X/Y  Y  => X
        if left.argument == right:
            out.append((left.result, FA))
        # X/Y  Y/Z  => X/Z
        if rules.composition and isinstance(right, Complex) and right.forward and right.result == left.argument:
            out.append((Complex(left.result, Slash.FORWARD, right.argument), FC))
    if isinstance(right, Complex) and right.backward:
        # Y  X\Y  => X
        if right.argument == left:
            out.append((right.result, BA))
        # Y\Z  X\Y  => X\Z
        if rules.composition and isinstance(left, Complex) and left.backward and left.result == right.argument:
            out.append((Complex(right.result, Slash.BACKWARD, left.argument), BC))
    if rules.conj_promote and left == CONJ:
        out.append((Complex(right, Slash.BACKWARD, right), CONJ_PROMOTE))
    return frozenset(out)


def produces(rule: str, children: tuple[Category, ...], result: Category, rules: RuleSet = DEFAULT_RULES) -> bool:
    """Check that ``rule`` applied to ``children`` yields ``result``."""
    if len(children) != 2:
        return False
    return (result, rule) in combine(children[0], children[1], rules)
