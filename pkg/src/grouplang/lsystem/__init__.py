"""ET0L/EDT0L systems: tables, rational control, search and combinators."""

from .combinators import concat, union
from .control import ControlAutomaton
from .engine import (
    Enumeration,
    Membership,
    Verdict,
    Verification,
    apply_deterministic,
    derives_in_one_step,
    enumerate_language,
    member,
    sample_derivation,
    step,
    verify,
)
from .fileformat import format_grammar, parse_grammar
from .system import DerivationWitness, LSystem, SearchCaps, Table, Word, as_word, format_word

__all__ = [
    "ControlAutomaton",
    "DerivationWitness",
    "Enumeration",
    "LSystem",
    "Membership",
    "SearchCaps",
    "Table",
    "Verdict",
    "Verification",
    "Word",
    "apply_deterministic",
    "as_word",
    "concat",
    "derives_in_one_step",
    "enumerate_language",
    "format_grammar",
    "format_word",
    "member",
    "parse_grammar",
    "sample_derivation",
    "step",
    "union",
    "verify",
]
