"""CCG category algebra, combinators, CKY parsing and failure diagnosis."""
from .category import (ATOMS, CONJ, N, NP, PP, S, Atomic, Category, CategoryParseError, Complex, Slash, cat,
                       format_category, parse_category)
from .chart import DEFAULT_MAX_DERIVATIONS, Chart, Derivation, DerivationError, EmptyTokenError, Parser, cky_parse
from .diagnose import MissingCategoryReport, NothingToDiagnose, diagnose_failure, diagnose_tokens
from .rules import (APPLICATION_ONLY, BA, BC, CONJ_PROMOTE, DEFAULT_RULES, FA, FC, LEX, RULE_NAMES, RuleSet,
                    combine)

__all__ = [
    "ATOMS", "CONJ", "N", "NP", "PP", "S", "Atomic", "Category", "CategoryParseError", "Complex", "Slash", "cat",
    "format_category", "parse_category", "DEFAULT_MAX_DERIVATIONS", "Chart", "Derivation", "DerivationError",
    "EmptyTokenError", "Parser", "cky_parse", "MissingCategoryReport", "NothingToDiagnose", "diagnose_failure",
    "diagnose_tokens", "APPLICATION_ONLY", "BA", "BC", "CONJ_PROMOTE", "DEFAULT_RULES", "FA", "FC", "LEX",
    "RULE_NAMES", "RuleSet", "combine",
]
