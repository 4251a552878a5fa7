"""Plain-text grammar files.

::

    alphabet: a b q q'
    terminals: a b
    axiom: q
    table h_a:
      q -> q a q'
    table h_$:
      q -> ~
      q' -> ~
    control: (h_a|h_b)* h_a h_$

Tokens are whitespace separated, ``~`` is the empty replacement, repeated
``lhs -> rhs`` lines for one symbol are nondeterministic alternatives and
``axiom:`` may be repeated.  Blank lines are ignored.
"""

from __future__ import annotations

import re

from ..errors import GrammarSyntaxError
from .control import ControlAutomaton, format_regex, parse_regex
from .system import EMPTY_WORD_TOKEN, LSystem, Table, format_word, split_rhs

_HEADER = re.compile(r"^(alphabet|terminals|axiom|control)\s*:(.*)$")
_TABLE = re.compile(r"^table\s+(\S+?)\s*:\s*$")


def parse_grammar(text: str, name: str = "") -> LSystem:
    alphabet: list[str] | None = None
    terminals: list[str] | None = None
    axioms: list[tuple[str, ...]] = []
    tables: list[tuple[str, list[tuple[str, tuple[str, ...]]]]] = []
    control = None
    current: list | None = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        indented = raw[0].isspace()
        line = raw.strip()
        if indented:
            if current is None:
                raise GrammarSyntaxError("rule outside of a table", lineno, 1)
            lhs, arrow, rhs = line.partition("->")
            if not arrow or not lhs.strip() or len(lhs.split()) != 1:
                col = raw.index(line) + 1
                raise GrammarSyntaxError("expected 'lhs -> rhs'", lineno, col)
            current.append((lhs.strip(), split_rhs(rhs)))
            continue
        current = None
        m = _TABLE.match(line)
        if m:
            current = []
            tables.append((m.group(1), current))
            continue
        m = _HEADER.match(line)
        if not m:
            raise GrammarSyntaxError(f"unrecognised line {line!r}", lineno, 1)
        key, value = m.group(1), m.group(2)
        if key == "alphabet":
            alphabet = value.split()
        elif key == "terminals":
            terminals = value.split()
        elif key == "axiom":
            axioms.append(split_rhs(value))
        else:
            if not value.strip():
                raise GrammarSyntaxError("empty control expression", lineno, raw.index(":") + 2)
            offset = raw.index(":") + 1
            try:
                control = parse_regex(value, lineno)
            except GrammarSyntaxError as exc:
                message = str(exc).split(": ", 1)[1]
                raise GrammarSyntaxError(message, lineno, exc.column + offset) from None

    if alphabet is None:
        raise GrammarSyntaxError("missing 'alphabet:' line", 1, 1)
    if terminals is None:
        raise GrammarSyntaxError("missing 'terminals:' line", 1, 1)
    if control is None:
        raise GrammarSyntaxError("missing 'control:' line", 1, 1)
    built_tables = tuple(Table.from_pairs(tname, rules) for tname, rules in tables)
    return LSystem(
        tuple(alphabet), tuple(terminals), tuple(axioms), built_tables, ControlAutomaton(control), name
    )


def format_grammar(system: LSystem) -> str:
    lines = [
        "alphabet: " + " ".join(system.alphabet),
        "terminals: " + " ".join(system.terminals),
    ]
    for axiom in system.axioms:
        lines.append("axiom: " + format_word(axiom))
    for table in system.tables:
        lines.append(str(table))
    lines.append("control: " + format_regex(system.control.expr))
    return "\n".join(lines) + "\n"


__all__ = ["parse_grammar", "format_grammar", "EMPTY_WORD_TOKEN"]
