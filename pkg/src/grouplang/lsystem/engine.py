"""Parallel rewriting under rational control.

Searches run breadth-first over pairs ``(control state, sentential form)``
with exact-pair deduplication.  Pruning is restricted to what is provably
sound: each symbol ``x`` in control state ``s`` has a lower bound on the
length of any terminal word it can still contribute along an accepted
continuation of the control, and a form whose summed bound exceeds the
requested word length cannot lead to an answer.  Everything else that is cut
off (sentential length, control length, visited count) marks the result as
non-exhaustive.
"""

from __future__ import annotations

import enum
import itertools
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from ..errors import AlphabetError, DeterminismError
from .system import DerivationWitness, LSystem, SearchCaps, Table, Word, WordLike, as_word

INF = 1 << 60

Node = tuple[int, tuple[int, ...]]


# -- single steps ----------------------------------------------------------------


def step(word: WordLike, table: Table, alphabet: Iterable[str] | None = None) -> set[Word]:
    """All words obtainable from *word* by one parallel application of *table*."""
    word = as_word(word, alphabet)
    if alphabet is not None:
        known = set(alphabet)
        bad = [t for t in word if t not in known]
        if bad:
            raise AlphabetError(f"symbols {bad} are not in the alphabet")
    choices = [table.alternatives(x) for x in word]
    return {tuple(itertools.chain.from_iterable(pick)) for pick in itertools.product(*choices)}


def apply_deterministic(
    word: WordLike, table: Table, alphabet: Iterable[str] | None = None
) -> Word:
    if not table.deterministic:
        raise DeterminismError(f"table {table.name} is not deterministic")
    (result,) = step(word, table, alphabet)
    return result


def derives_in_one_step(source: Sequence[str], target: Sequence[str], table: Table) -> bool:
    """Decide ``source ->^table target`` without enumerating the step."""
    target = tuple(target)
    reach = {0}
    for x in source:
        nxt = set()
        for j in reach:
            for rhs in table.alternatives(x):
                if target[j : j + len(rhs)] == rhs:
                    nxt.add(j + len(rhs))
        if not nxt:
            return False
        reach = nxt
    return len(target) in reach


# -- compiled form ---------------------------------------------------------------


class _Compiled:
    """Integer-coded view of an LSystem plus its length lower bounds."""

    def __init__(self, system: LSystem):
        self.system = system
        self.tokens = system.alphabet
        self.index = {tok: i for i, tok in enumerate(self.tokens)}
        self.terminal = [tok in system._terminal_set for tok in self.tokens]
        self.dfa = dfa = system.control.dfa
        table_ids = {t.name: i for i, t in enumerate(system.tables)}
        self.alts = [
            [
                tuple(tuple(self.index[y] for y in rhs) for rhs in table.alternatives(tok))
                for tok in self.tokens
            ]
            for table in system.tables
        ]
        self.moves = [
            [(table_ids[name], name, nxt) for name, nxt in row.items()]
            for row in dfa.transitions
        ]
        self.alive = [
            s in dfa.accepting or bool(dfa.transitions[s]) for s in dfa.states
        ]
        self.minlen = self._lower_bounds()
        self._options: dict[tuple[int, int], list[tuple]] = {}

    def _lower_bounds(self) -> list[list[int]]:
        n = len(self.tokens)
        bounds = [[INF] * n for _ in self.dfa.states]
        for s in self.dfa.accepting:
            for x in range(n):
                if self.terminal[x]:
                    bounds[s][x] = 1
        changed = True
        while changed:
            changed = False
            for s, moves in enumerate(self.moves):
                row = bounds[s]
                for t, _, s2 in moves:
                    target = bounds[s2]
                    for x in range(n):
                        best = row[x]
                        for rhs in self.alts[t][x]:
                            v = 0
                            for y in rhs:
                                v += target[y]
                            if v < best:
                                best = v
                        if best < row[x]:
                            row[x] = best
                            changed = True
        return bounds

    def bound(self, state: int, form: Sequence[int]) -> int:
        if not form:
            return 0 if self.alive[state] else INF
        row = self.minlen[state]
        return sum(row[x] for x in form)

    def options(self, t: int, s2: int) -> list[tuple]:
        key = (t, s2)
        opts = self._options.get(key)
        if opts is None:
            row = self.minlen[s2]
            opts = []
            for x in range(len(self.tokens)):
                entries = []
                for rhs in self.alts[t][x]:
                    b = sum(row[y] for y in rhs)
                    if b < INF:
                        entries.append((rhs, len(rhs), b))
                opts.append(tuple(entries))
            self._options[key] = opts
        return opts

    def successors(
        self, form: tuple[int, ...], t: int, s2: int, limit: int, smax: int, budget: int
    ) -> tuple[list[tuple[int, ...]], bool]:
        """Successor forms under table *t* landing in state *s2*.

        Returns the forms surviving the sound bound prune and a flag telling
        whether anything was dropped for exceeding *smax* or *budget*.
        """
        table_opts = self.options(t, s2)
        per_pos = [table_opts[x] for x in form]
        m = len(per_pos)
        minb = [0] * (m + 1)
        minl = [0] * (m + 1)
        for j in range(m - 1, -1, -1):
            opts = per_pos[j]
            if not opts:
                return [], False
            minb[j] = minb[j + 1] + min(o[2] for o in opts)
            minl[j] = minl[j + 1] + min(o[1] for o in opts)
        if m == 0:
            return ([()] if self.alive[s2] else []), False
        if minb[0] > limit:
            return [], False

        if all(len(o) == 1 for o in per_pos):
            rhs = tuple(itertools.chain.from_iterable(o[0][0] for o in per_pos))
            if len(rhs) > smax:
                return [], True
            return [rhs], False

        # expand position by position, merging equal partial images so that
        # erasing alternatives do not multiply into duplicate work
        layer: dict[tuple[int, ...], int] = {(): 0}
        capped = False
        for j, opts in enumerate(per_pos):
            nxt: dict[tuple[int, ...], int] = {}
            for prefix, blen in layer.items():
                for rhs, ln, b in opts:
                    if blen + b + minb[j + 1] > limit:
                        continue
                    if len(prefix) + ln + minl[j + 1] > smax:
                        capped = True
                        continue
                    key = prefix + rhs
                    if key not in nxt:
                        if len(nxt) >= budget:
                            capped = True
                            continue
                        nxt[key] = blen + b
            layer = nxt
            if not layer:
                break
        return list(layer), capped

    def encode(self, word: Sequence[str]) -> tuple[int, ...]:
        return tuple(self.index[t] for t in word)

    def decode(self, form: Sequence[int]) -> Word:
        return tuple(self.tokens[x] for x in form)

    def is_terminal(self, form: Sequence[int]) -> bool:
        term = self.terminal
        return all(term[x] for x in form)


def compiled(system: LSystem) -> _Compiled:
    cache = system.__dict__.get("_engine_cache")
    if cache is None:
        cache = _Compiled(system)
        system.__dict__["_engine_cache"] = cache
    return cache


# -- searches ----------------------------------------------------------------------


@dataclass(frozen=True)
class Enumeration:
    words: frozenset[Word]
    exhaustive: bool
    visited: int

    def sorted(self) -> list[Word]:
        """Words in length-lexicographic order."""
        return sorted(self.words, key=lambda w: (len(w), w))

    def __contains__(self, word: object) -> bool:
        return word in self.words


class Verdict(enum.Enum):
    YES = "YES"
    NO = "NO"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Membership:
    verdict: Verdict
    witness: DerivationWitness | None = None
    visited: int = 0

    def __bool__(self) -> bool:
        return self.verdict is Verdict.YES


@dataclass
class _Search:
    comp: _Compiled
    max_len: int
    caps: SearchCaps
    target: tuple[int, ...] | None = None
    parents: dict[Node, tuple[Node, str] | None] = field(default_factory=dict)
    words: set[tuple[int, ...]] = field(default_factory=set)
    capped: bool = False
    found: Node | None = None

    def _admit(self, node: Node, parent: tuple[Node, str] | None) -> bool:
        """Record a newly discovered node; False when it should not be expanded."""
        if node in self.parents:
            return False
        if len(self.parents) >= self.caps.max_visited:
            self.capped = True
            return False
        state, form = node
        self.parents[node] = parent
        comp = self.comp
        if state in comp.dfa.accepting and len(form) <= self.max_len and comp.is_terminal(form):
            self.words.add(form)
            if self.target is not None and form == self.target:
                self.found = node
        return True

    def run(self) -> None:
        comp, caps = self.comp, self.caps
        frontier: list[Node] = []
        init = comp.dfa.initial
        for axiom in comp.system.axioms:
            form = comp.encode(axiom)
            if comp.bound(init, form) > self.max_len:
                continue
            if len(form) > caps.max_sentential_length:
                self.capped = True
                continue
            if self._admit((init, form), None):
                frontier.append((init, form))
        depth = 0
        while frontier and self.found is None:
            nxt: list[Node] = []
            at_depth_cap = depth >= caps.max_control_length
            for node in frontier:
                state, form = node
                for t, name, s2 in comp.moves[state]:
                    budget = max(1, caps.max_visited - len(self.parents))
                    succ, capped = comp.successors(
                        form, t, s2, self.max_len, caps.max_sentential_length, budget
                    )
                    if capped:
                        self.capped = True
                    if at_depth_cap:
                        if succ:
                            self.capped = True
                        continue
                    for f in succ:
                        child = (s2, f)
                        if self._admit(child, (node, name)):
                            nxt.append(child)
                            if self.found is not None:
                                return
                if self.capped and len(self.parents) >= caps.max_visited:
                    return
            if at_depth_cap:
                return
            frontier = nxt
            depth += 1

    def witness(self, node: Node) -> DerivationWitness:
        chain: list[tuple[str, Node]] = []
        cur = node
        while (parent := self.parents[cur]) is not None:
            prev, name = parent
            chain.append((name, cur))
            cur = prev
        chain.reverse()
        dec = self.comp.decode
        return DerivationWitness(
            axiom=dec(cur[1]),
            steps=tuple((name, dec(n[1])) for name, n in chain),
            word=dec(node[1]),
        )


def enumerate_language(
    system: LSystem, max_word_length: int, caps: SearchCaps | None = None
) -> Enumeration:
    """Terminal words of length <= *max_word_length* reachable within *caps*.

    When ``exhaustive`` is true the result is exactly ``L(H)`` restricted to
    those lengths.
    """
    search = _Search(compiled(system), max_word_length, caps or SearchCaps())
    search.run()
    words = frozenset(search.comp.decode(w) for w in search.words)
    return Enumeration(words, not search.capped, len(search.parents))


def member(system: LSystem, word: WordLike, caps: SearchCaps | None = None) -> Membership:
    """Three-valued membership: YES with a witness, NO only after exhaustion."""
    w = system.terminal_word(word)
    comp = compiled(system)
    search = _Search(comp, len(w), caps or SearchCaps(), target=comp.encode(w))
    search.run()
    if search.found is not None:
        return Membership(Verdict.YES, search.witness(search.found), len(search.parents))
    if search.capped:
        return Membership(Verdict.UNKNOWN, None, len(search.parents))
    return Membership(Verdict.NO, None, len(search.parents))


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify(witness: DerivationWitness, system: LSystem) -> Verification:
    """Replay *witness* against *system*; the reason names the first defect."""
    if witness.axiom not in system.axioms:
        return Verification(False, "axiom is not an axiom of the system")
    alphabet = system._alphabet_set
    current = witness.axiom
    for i, (name, form) in enumerate(witness.steps, 1):
        if name not in system._table_index:
            return Verification(False, f"step {i}: unknown table {name!r}")
        if any(t not in alphabet for t in form):
            return Verification(False, f"step {i}: form leaves the alphabet")
        if not derives_in_one_step(current, form, system.table(name)):
            return Verification(False, f"step {i}: {name} does not rewrite the previous form to this one")
        current = form
    if current != witness.word:
        return Verification(False, "final form differs from the claimed word")
    if not system.is_terminal(witness.word):
        return Verification(False, "final word is not terminal")
    if not system.control.accepts(witness.table_names):
        return Verification(False, "table sequence rejected by the control")
    return Verification(True)


def sample_derivation(
    system: LSystem,
    rng: random.Random,
    max_sentential_length: int = 64,
    max_control_length: int = 40,
    stop_probability: float = 0.25,
    retries: int = 32,
) -> DerivationWitness | None:
    """One random control-accepted derivation, or None if the walk failed.

    Walks the control automaton choosing tables and rule alternatives
    uniformly; stops at accepting states with terminal forms with the given
    probability.  A step that overflows the sentential bound or reaches a
    form that can no longer produce a terminal word is redrawn, up to
    *retries* times, before the walk is abandoned.
    """
    comp = compiled(system)
    state = comp.dfa.initial
    form = comp.encode(rng.choice(system.axioms))
    start = form
    steps: list[tuple[str, tuple[int, ...]]] = []
    while True:
        moves = comp.moves[state]
        if state in comp.dfa.accepting and comp.is_terminal(form):
            if not moves or rng.random() < stop_probability:
                dec = comp.decode
                return DerivationWitness(
                    dec(start), tuple((n, dec(f)) for n, f in steps), dec(form)
                )
        if not moves or len(steps) >= max_control_length:
            return None
        for _ in range(retries):
            t, name, s2 = rng.choice(moves)
            alts = comp.alts[t]
            nxt = tuple(itertools.chain.from_iterable(rng.choice(alts[x]) for x in form))
            if len(nxt) <= max_sentential_length and comp.bound(s2, nxt) < INF:
                break
        else:
            return None
        form, state = nxt, s2
        steps.append((name, form))
