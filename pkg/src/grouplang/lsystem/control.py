"""Rational control: regular expressions over table names and their automata.

Syntax: juxtaposition (whitespace-separated names) is concatenation, ``|`` is
union, postfix ``*`` is Kleene star, parentheses group.  ``ε`` or ``()``
denotes the empty control word and ``∅`` the empty language.

Expressions are kept as small normalised ASTs (nested tuples) so that two
controls compare equal when their printed forms do.  The automaton is a DFA
obtained from a Thompson NFA by the subset construction, trimmed to states
from which an accepting state is reachable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from ..errors import GrammarSyntaxError, ValidationError

EPSILON_TOKEN = "ε"
EMPTY_TOKEN = "∅"
_SPECIAL = frozenset("()|*")
_TOKEN_RE = re.compile(r"\s*(?:([()|*])|([^\s()|*]+))")

Expr = tuple

EPS: Expr = ("eps",)
EMPTY: Expr = ("empty",)


def sym(name: str) -> Expr:
    return ("sym", name)


def cat(*items: Expr) -> Expr:
    flat: list[Expr] = []
    for item in items:
        if item == EMPTY:
            return EMPTY
        if item[0] == "cat":
            flat.extend(item[1:])
        elif item != EPS:
            flat.append(item)
    if not flat:
        return EPS
    if len(flat) == 1:
        return flat[0]
    return ("cat", *flat)


def alt(*items: Expr) -> Expr:
    flat: list[Expr] = []
    for item in items:
        parts = item[1:] if item[0] == "alt" else (item,)
        for part in parts:
            if part != EMPTY and part not in flat:
                flat.append(part)
    if not flat:
        return EMPTY
    if len(flat) == 1:
        return flat[0]
    return ("alt", *flat)


def star(item: Expr) -> Expr:
    if item in (EPS, EMPTY):
        return EPS
    if item[0] == "star":
        return item
    return ("star", item)


def relabel(expr: Expr, mapping: Callable[[str], str]) -> Expr:
    kind = expr[0]
    if kind == "sym":
        return sym(mapping(expr[1]))
    if kind in ("eps", "empty"):
        return expr
    if kind == "star":
        return star(relabel(expr[1], mapping))
    parts = [relabel(e, mapping) for e in expr[1:]]
    return cat(*parts) if kind == "cat" else alt(*parts)


def symbols(expr: Expr) -> set[str]:
    if expr[0] == "sym":
        return {expr[1]}
    out: set[str] = set()
    if expr[0] in ("cat", "alt", "star"):
        for e in expr[1:]:
            out |= symbols(e)
    return out


# -- parsing / printing ------------------------------------------------------


def _tokenize(text: str, line: int) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN_RE.match(stripped, pos)
        if m is None:  # pragma: no cover - the pattern accepts any non-space run
            raise GrammarSyntaxError("unreadable control expression", line, pos + 1)
        if m.group(1):
            tokens.append(("op", m.group(1), m.start(1) + 1))
        else:
            tokens.append(("name", m.group(2), m.start(2) + 1))
        pos = m.end()
    return tokens


def parse_regex(text: str, line: int = 1) -> Expr:
    """Parse a control expression.  *line* is only used for error reports."""
    tokens = _tokenize(text, line)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def parse_alt() -> Expr:
        nonlocal pos
        branches = [parse_cat()]
        while (tok := peek()) is not None and tok[1] == "|" and tok[0] == "op":
            pos += 1
            branches.append(parse_cat())
        return alt(*branches)

    def parse_cat() -> Expr:
        items = []
        while (tok := peek()) is not None and not (tok[0] == "op" and tok[1] in "|)"):
            items.append(parse_postfix())
        return cat(*items)

    def parse_postfix() -> Expr:
        nonlocal pos
        item = parse_atom()
        while (tok := peek()) is not None and tok == ("op", "*", tok[2]):
            pos += 1
            item = star(item)
        return item

    def parse_atom() -> Expr:
        nonlocal pos
        tok = peek()
        assert tok is not None
        kind, value, col = tok
        if kind == "name":
            pos += 1
            if value == EPSILON_TOKEN:
                return EPS
            if value == EMPTY_TOKEN:
                return EMPTY
            return sym(value)
        if value == "(":
            pos += 1
            inner = parse_alt()
            closing = peek()
            if closing is None or closing[1] != ")":
                raise GrammarSyntaxError("unbalanced '(' in control", line, col)
            pos += 1
            return inner
        raise GrammarSyntaxError(f"unexpected {value!r} in control", line, col)

    expr = parse_alt()
    if pos != len(tokens):
        raise GrammarSyntaxError(
            f"unexpected {tokens[pos][1]!r} in control", line, tokens[pos][2]
        )
    return expr


def format_regex(expr: Expr, ctx: int = 0) -> str:
    kind = expr[0]
    if kind == "sym":
        return expr[1]
    if kind == "eps":
        return EPSILON_TOKEN
    if kind == "empty":
        return EMPTY_TOKEN
    if kind == "star":
        return format_regex(expr[1], 2) + "*"
    if kind == "cat":
        text = " ".join(format_regex(e, 2) for e in expr[1:])
        return f"({text})" if ctx > 1 else text
    text = "|".join(format_regex(e, 0) for e in expr[1:])
    return f"({text})" if ctx > 0 else text


# -- automata ------------------------------------------------------------------


class _NFA:
    def __init__(self) -> None:
        self.eps: list[list[int]] = []
        self.moves: list[list[tuple[str, int]]] = []

    def new(self) -> int:
        self.eps.append([])
        self.moves.append([])
        return len(self.eps) - 1

    def build(self, expr: Expr) -> tuple[int, int]:
        kind = expr[0]
        start, end = self.new(), self.new()
        if kind == "sym":
            self.moves[start].append((expr[1], end))
        elif kind == "eps":
            self.eps[start].append(end)
        elif kind == "empty":
            pass
        elif kind == "cat":
            prev = start
            for item in expr[1:]:
                s, e = self.build(item)
                self.eps[prev].append(s)
                prev = e
            self.eps[prev].append(end)
        elif kind == "alt":
            for item in expr[1:]:
                s, e = self.build(item)
                self.eps[start].append(s)
                self.eps[e].append(end)
        elif kind == "star":
            s, e = self.build(expr[1])
            self.eps[start] += [s, end]
            self.eps[e] += [s, end]
        else:  # pragma: no cover
            raise ValueError(f"bad control node {expr!r}")
        return start, end

    def closure(self, states: Iterable[int]) -> frozenset[int]:
        seen = set(states)
        stack = list(seen)
        while stack:
            for nxt in self.eps[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return frozenset(seen)


@dataclass(frozen=True)
class DFA:
    """Trimmed deterministic automaton: every state can reach acceptance,
    except possibly a lone dead initial state when the language is empty."""

    initial: int
    accepting: frozenset[int]
    transitions: tuple[dict[str, int], ...]

    @property
    def states(self) -> range:
        return range(len(self.transitions))

    def run(self, names: Sequence[str]) -> int | None:
        state: int | None = self.initial
        for name in names:
            state = self.transitions[state].get(name)
            if state is None:
                return None
        return state

    def accepts(self, names: Sequence[str]) -> bool:
        state = self.run(names)
        return state is not None and state in self.accepting

    @property
    def is_empty(self) -> bool:
        return not self.accepting


def compile_dfa(expr: Expr) -> DFA:
    nfa = _NFA()
    start, final = nfa.build(expr)
    init = nfa.closure([start])
    index = {init: 0}
    subsets = [init]
    raw: list[dict[str, int]] = []
    i = 0
    while i < len(subsets):
        current = subsets[i]
        by_label: dict[str, set[int]] = {}
        for s in current:
            for label, nxt in nfa.moves[s]:
                by_label.setdefault(label, set()).add(nxt)
        row = {}
        for label in sorted(by_label):
            target = nfa.closure(by_label[label])
            if target not in index:
                index[target] = len(subsets)
                subsets.append(target)
            row[label] = index[target]
        raw.append(row)
        i += 1
    accepting = {j for j, subset in enumerate(subsets) if final in subset}

    # trim to co-reachable states
    alive = set(accepting)
    changed = True
    while changed:
        changed = False
        for j, row in enumerate(raw):
            if j not in alive and any(t in alive for t in row.values()):
                alive.add(j)
                changed = True
    keep = [j for j in range(len(raw)) if j in alive or j == 0]
    renum = {old: new for new, old in enumerate(keep)}
    transitions = tuple(
        {label: renum[t] for label, t in raw[old].items() if t in alive}
        for old in keep
    )
    return DFA(0, frozenset(renum[j] for j in accepting), transitions)


@dataclass(frozen=True)
class ControlAutomaton:
    """A regular set of table-name sequences, stored as its expression."""

    expr: Expr

    @classmethod
    def from_regex(cls, text: str) -> "ControlAutomaton":
        return cls(parse_regex(text))

    @classmethod
    def empty(cls) -> "ControlAutomaton":
        return cls(EMPTY)

    @cached_property
    def dfa(self) -> DFA:
        return compile_dfa(self.expr)

    @property
    def labels(self) -> frozenset[str]:
        return frozenset(symbols(self.expr))

    def accepts(self, names: Sequence[str]) -> bool:
        return self.dfa.accepts(names)

    def relabel(self, mapping: Callable[[str], str]) -> "ControlAutomaton":
        return ControlAutomaton(relabel(self.expr, mapping))

    def __str__(self) -> str:
        return format_regex(self.expr)


def check_name(name: str, what: str = "table name") -> None:
    if (
        not name
        or any(ch.isspace() for ch in name)
        or any(ch in _SPECIAL for ch in name)
        or "->" in name
        or "~" in name
        or ":" in name
        or name in (EPSILON_TOKEN, EMPTY_TOKEN)
    ):
        raise ValidationError(f"invalid {what} {name!r}")
