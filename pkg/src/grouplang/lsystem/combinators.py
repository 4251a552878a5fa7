"""Union and concatenation of L-systems.

Each component is copied onto private symbols (terminals included, so that a
component's tables never touch the other component's letters), a fresh start
symbol is added together with an initial table per component, and a final
``release`` table maps every private copy of a terminal back to the shared
terminal token.  Nonterminal copies have no release rule, so a form that is
not finished by its own component's control is never accepted.
"""

from __future__ import annotations

from itertools import product

from . import control as ctl
from .control import ControlAutomaton
from .system import LSystem, Table


def _fresh(base: str, taken: set[str]) -> str:
    name = base
    while name in taken:
        name += "'"
    taken.add(name)
    return name


class _Copy:
    def __init__(self, system: LSystem, tag: str, tokens: set[str], names: set[str]):
        self.system = system
        self.sym = {tok: _fresh(f"{tok}.{tag}", tokens) for tok in system.alphabet}
        self.tab = {t.name: _fresh(f"{tag}.{t.name}", names) for t in system.tables}

    def word(self, word):
        return tuple(self.sym[x] for x in word)

    def tables(self) -> list[Table]:
        return [
            Table(
                self.tab[t.name],
                {self.sym[lhs]: tuple(self.word(rhs) for rhs in alts) for lhs, alts in t.rules.items()},
            )
            for t in self.system.tables
        ]

    def control(self) -> ctl.Expr:
        return ctl.relabel(self.system.control.expr, self.tab.__getitem__)

    def release_rules(self) -> dict[str, tuple]:
        return {self.sym[a]: ((a,),) for a in self.system.terminals}


def _prepare(sys1: LSystem, sys2: LSystem):
    terminals = list(dict.fromkeys(sys1.terminals + sys2.terminals))
    tokens = set(terminals)
    names: set[str] = set()
    left = _Copy(sys1, "1", tokens, names)
    right = _Copy(sys2, "2", tokens, names)
    start = _fresh("Z", tokens)
    alphabet = (
        terminals
        + [left.sym[x] for x in sys1.alphabet]
        + [right.sym[x] for x in sys2.alphabet]
        + [start]
    )
    return terminals, alphabet, start, left, right, names


def union(sys1: LSystem, sys2: LSystem) -> LSystem:
    """A system generating ``L(sys1) | L(sys2)``."""
    terminals, alphabet, start, left, right, names = _prepare(sys1, sys2)
    init1 = _fresh("init.1", names)
    init2 = _fresh("init.2", names)
    release = _fresh("release", names)
    tables = [
        Table(init1, {start: tuple(left.word(a) for a in sys1.axioms)}),
        Table(init2, {start: tuple(right.word(a) for a in sys2.axioms)}),
        *left.tables(),
        *right.tables(),
        Table(release, {**left.release_rules(), **right.release_rules()}),
    ]
    expr = ctl.cat(
        ctl.alt(
            ctl.cat(ctl.sym(init1), left.control()),
            ctl.cat(ctl.sym(init2), right.control()),
        ),
        ctl.sym(release),
    )
    name = f"({sys1.name or 'L1'} | {sys2.name or 'L2'})"
    return LSystem(tuple(alphabet), tuple(terminals), ((start,),), tuple(tables), ControlAutomaton(expr), name)


def concat(sys1: LSystem, sys2: LSystem) -> LSystem:
    """A system generating ``L(sys1) L(sys2)``."""
    terminals, alphabet, start, left, right, names = _prepare(sys1, sys2)
    init = _fresh("init", names)
    release = _fresh("release", names)
    starts = tuple(left.word(a) + right.word(b) for a, b in product(sys1.axioms, sys2.axioms))
    tables = [
        Table(init, {start: starts}),
        *left.tables(),
        *right.tables(),
        Table(release, {**left.release_rules(), **right.release_rules()}),
    ]
    expr = ctl.cat(ctl.sym(init), left.control(), right.control(), ctl.sym(release))
    name = f"({sys1.name or 'L1'} . {sys2.name or 'L2'})"
    return LSystem(tuple(alphabet), tuple(terminals), ((start,),), tuple(tables), ControlAutomaton(expr), name)
