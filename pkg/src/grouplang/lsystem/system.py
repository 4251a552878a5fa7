"""Core value types: tables, L-systems, search caps and derivation witnesses."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from ..errors import AlphabetError, ValidationError
from .control import ControlAutomaton, check_name

Word = tuple[str, ...]
WordLike = Union[str, Sequence[str]]

RESERVED = ("->", "~", "(", ")", "|", "*", ":")
EMPTY_WORD_TOKEN = "~"


def check_token(token: str) -> None:
    if not token or any(ch.isspace() for ch in token) or any(r in token for r in RESERVED):
        raise ValidationError(f"invalid symbol token {token!r}")


def as_word(word: WordLike, alphabet: Iterable[str] | None = None) -> Word:
    """Coerce *word* to a tuple of tokens.

    Strings containing whitespace are split on it.  Other strings are split
    into characters when every character is a known token (or no alphabet is
    given), otherwise taken as a single token.  ``"~"`` is the empty word.
    """
    if not isinstance(word, str):
        return tuple(word)
    if word.strip() in ("", EMPTY_WORD_TOKEN):
        return ()
    if any(ch.isspace() for ch in word):
        return tuple(t for t in word.split() if t != EMPTY_WORD_TOKEN)
    if alphabet is None:
        return tuple(word)
    known = set(alphabet)
    if all(ch in known for ch in word):
        return tuple(word)
    return (word,)


def split_rhs(rhs: WordLike) -> Word:
    """Replacement words: strings split on whitespace only, ``~`` is empty."""
    if isinstance(rhs, str):
        return tuple(t for t in rhs.split() if t != EMPTY_WORD_TOKEN)
    return tuple(rhs)


def format_word(word: Sequence[str], compact: bool = False) -> str:
    if not word:
        return "" if compact else EMPTY_WORD_TOKEN
    if compact and all(len(t) == 1 for t in word):
        return "".join(word)
    return " ".join(word)


@dataclass(frozen=True)
class Table:
    """A finite relation from symbols to replacement words.

    Symbols without an explicit rule rewrite to themselves.
    """

    name: str
    rules: Mapping[str, tuple[Word, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        check_name(self.name)
        normalised: dict[str, tuple[Word, ...]] = {}
        for lhs, alternatives in self.rules.items():
            check_token(lhs)
            if isinstance(alternatives, str):
                alternatives = [alternatives]
            seen: list[Word] = []
            for rhs in alternatives:
                rhs = split_rhs(rhs)
                if rhs not in seen:
                    seen.append(rhs)
            normalised[lhs] = tuple(seen)
        object.__setattr__(self, "rules", normalised)

    @classmethod
    def from_pairs(cls, name: str, pairs: Iterable[tuple[str, WordLike]]) -> "Table":
        rules: dict[str, list[Word]] = {}
        for lhs, rhs in pairs:
            rules.setdefault(lhs, []).append(split_rhs(rhs))
        return cls(name, {k: tuple(v) for k, v in rules.items()})

    def alternatives(self, symbol: str) -> tuple[Word, ...]:
        return self.rules.get(symbol, ((symbol,),))

    @property
    def deterministic(self) -> bool:
        return all(len(alts) == 1 for alts in self.rules.values())

    def symbols(self) -> set[str]:
        out = set(self.rules)
        for alts in self.rules.values():
            for rhs in alts:
                out.update(rhs)
        return out

    def __str__(self) -> str:
        lines = [f"table {self.name}:"]
        for lhs, alts in self.rules.items():
            for rhs in alts:
                lines.append(f"  {lhs} -> {format_word(rhs)}")
        return "\n".join(lines)


@dataclass(frozen=True)
class LSystem:
    """An ET0L system with rational control.

    ``L(H)`` consists of the words over *terminals* reachable from an axiom by
    a sequence of table applications whose name sequence the control accepts.
    Instances are immutable and validated on construction.
    """

    alphabet: tuple[str, ...]
    terminals: tuple[str, ...]
    axioms: tuple[Word, ...]
    tables: tuple[Table, ...]
    control: ControlAutomaton
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "terminals", tuple(self.terminals))
        object.__setattr__(self, "axioms", tuple(as_word(a, self.alphabet) for a in self.axioms))
        object.__setattr__(self, "tables", tuple(self.tables))
        self.validate()

    def validate(self) -> None:
        for tok in self.alphabet:
            check_token(tok)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValidationError("duplicate token in alphabet")
        alphabet = set(self.alphabet)
        if not set(self.terminals) <= alphabet:
            missing = sorted(set(self.terminals) - alphabet)
            raise ValidationError(f"terminals outside the alphabet: {missing}")
        if not self.axioms:
            raise ValidationError("an L-system needs at least one axiom")
        for axiom in self.axioms:
            bad = [t for t in axiom if t not in alphabet]
            if bad:
                raise ValidationError(f"axiom uses unknown symbols {bad}")
        names = [t.name for t in self.tables]
        if len(set(names)) != len(names):
            raise ValidationError("duplicate table name")
        for table in self.tables:
            bad = sorted(table.symbols() - alphabet)
            if bad:
                raise ValidationError(f"table {table.name} uses unknown symbols {bad}")
        unknown = sorted(self.control.labels - set(names))
        if unknown:
            raise ValidationError(f"control names unknown tables {unknown}")

    @cached_property
    def _table_index(self) -> dict[str, Table]:
        return {t.name: t for t in self.tables}

    def table(self, name: str) -> Table:
        try:
            return self._table_index[name]
        except KeyError:
            raise ValidationError(f"no table named {name!r}") from None

    @property
    def deterministic(self) -> bool:
        return all(t.deterministic for t in self.tables)

    def word(self, text: WordLike) -> Word:
        """Parse *text* as a word over the extended alphabet."""
        w = as_word(text, self.alphabet)
        bad = [t for t in w if t not in self._alphabet_set]
        if bad:
            raise AlphabetError(f"symbols {bad} are not in the alphabet")
        return w

    def terminal_word(self, text: WordLike) -> Word:
        w = as_word(text, self.terminals)
        bad = [t for t in w if t not in self._terminal_set]
        if bad:
            raise AlphabetError(f"symbols {bad} are not terminal")
        return w

    @cached_property
    def _alphabet_set(self) -> frozenset[str]:
        return frozenset(self.alphabet)

    @cached_property
    def _terminal_set(self) -> frozenset[str]:
        return frozenset(self.terminals)

    def is_terminal(self, word: Sequence[str]) -> bool:
        return all(t in self._terminal_set for t in word)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    return int(raw)


@dataclass(frozen=True)
class SearchCaps:
    max_sentential_length: int = 64
    max_control_length: int = 128
    max_visited: int = 500_000

    def __post_init__(self) -> None:
        for name in ("max_sentential_length", "max_control_length", "max_visited"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_env(cls) -> "SearchCaps":
        base = cls()
        return cls(
            _env_int("GROUPLANG_MAX_SENTENTIAL", base.max_sentential_length),
            _env_int("GROUPLANG_MAX_CONTROL", base.max_control_length),
            _env_int("GROUPLANG_MAX_VISITED", base.max_visited),
        )


@dataclass(frozen=True)
class DerivationWitness:
    """A checkable derivation: axiom, then one ``(table, form)`` per step."""

    axiom: Word
    steps: tuple[tuple[str, Word], ...]
    word: Word

    def __post_init__(self) -> None:
        object.__setattr__(self, "axiom", tuple(self.axiom))
        object.__setattr__(
            self, "steps", tuple((name, tuple(form)) for name, form in self.steps)
        )
        object.__setattr__(self, "word", tuple(self.word))

    @property
    def table_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.steps)

    def serialize(self) -> str:
        lines = [
            "tables: " + (" ".join(self.table_names) or EMPTY_WORD_TOKEN),
            "axiom: " + format_word(self.axiom),
        ]
        lines += [f"{name}: {format_word(form)}" for name, form in self.steps]
        lines.append("word: " + format_word(self.word))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "DerivationWitness":
        axiom: Word = ()
        word: Word = ()
        steps = []
        for raw in text.splitlines():
            if not raw.strip():
                continue
            key, _, rest = raw.partition(":")
            key = key.strip()
            form = split_rhs(rest)
            if key == "tables":
                continue
            if key == "axiom":
                axiom = form
            elif key == "word":
                word = form
            else:
                steps.append((key, form))
        return cls(axiom, tuple(steps), word)
