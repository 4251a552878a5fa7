"""Concrete L-systems and their direct reference generators."""

from __future__ import annotations

import re
from typing import Callable, Iterable

from .errors import DomainError, ValidationError
from .lsystem import ControlAutomaton, LSystem, Table, concat, union

GRIG_ALPHABET = ("S0", "S1", "a", "b", "c", "d", "δ", "#")
GRIG_TERMINALS = ("a", "b", "c", "d")


def doubling_system() -> LSystem:
    """Single table ``a -> a a`` applied to ``a a a``: the words ``a^(3*2^i)``."""
    return LSystem(
        ("a",),
        ("a",),
        (("a", "a", "a"),),
        (Table("t", {"a": "a a"}),),
        ControlAutomaton.from_regex("t*"),
        "doubling",
    )


def intermediate_growth_system() -> LSystem:
    """EDT0L system for ``{a b^i1 ... a b^ik : 0 <= i1 <= ... <= ik}``."""
    tables = (
        Table("h_a", {"q": "q a q'"}),
        Table("h_b", {"q": "q b", "q'": "q' b"}),
        Table("h_$", {"q": "~", "q'": "~"}),
    )
    return LSystem(
        ("a", "b", "q", "q'"),
        ("a", "b"),
        (("q",),),
        tables,
        ControlAutomaton.from_regex("(h_a|h_b)* h_a h_$"),
        "intermediate-growth",
    )


_A_WORD = re.compile(r"(ab*)+")


def a_language_contains(word: str) -> bool:
    """Membership in ``{a b^i1 a b^i2 ... a b^ik : i1 <= ... <= ik, k >= 1}``."""
    if not _A_WORD.fullmatch(word):
        return False
    exponents = [len(block) for block in word.split("a")[1:]]
    return all(x <= y for x, y in zip(exponents, exponents[1:]))


def kappa(m: int, n: int) -> str:
    """Crossing sequence of the segment from the origin to ``(m, n+)``.

    Horizontal crossing ``j`` precedes vertical crossing ``i`` exactly when
    ``j*m <= i*n``; the perturbation of ``n`` turns the tie into "h first".
    """
    if m <= 0 or n < 0:
        raise DomainError(f"kappa needs m > 0 and n >= 0, got ({m}, {n})")
    out = []
    j = 1
    for i in range(1, m + 1):
        while j <= n and j * m <= i * n:
            out.append("h")
            j += 1
        out.append("v")
    return "".join(out)


def crossing_sequence_system() -> LSystem:
    """EDT0L system for ``{kappa(m, n) : m > 0, n >= 0}``."""
    tables = (
        Table("phi_q", {"q": "q v"}),
        Table("phi_s", {"q": "v"}),
        Table("phi_v", {"v": "h v"}),
        Table("phi_h", {"h": "v h"}),
    )
    return LSystem(
        ("q", "v", "h"),
        ("v", "h"),
        (("q",),),
        tables,
        ControlAutomaton.from_regex("phi_q* phi_s (phi_v|phi_h)*"),
        "kappa",
    )


def _star_system(token: str) -> LSystem:
    return LSystem(
        (token, "S"),
        (token,),
        (("S",),),
        (Table("grow", {"S": f"{token} S"}), Table("stop", {"S": "~"})),
        ControlAutomaton.from_regex("grow* stop"),
        f"{token}*",
    )


def z2_semidirect_combing_system(t_symbol: str = "t", t_inverse: str = "T") -> LSystem:
    """``(t* | T*) L`` with ``L`` the crossing-sequence language."""
    clash = {t_symbol, t_inverse} & {"q", "v", "h"}
    if clash or t_symbol == t_inverse:
        raise ValidationError(f"tokens for t and its inverse must be fresh, got {sorted({t_symbol, t_inverse})}")
    prefixes = union(_star_system(t_symbol), _star_system(t_inverse))
    system = concat(prefixes, crossing_sequence_system())
    return LSystem(
        system.alphabet, system.terminals, system.axioms, system.tables, system.control,
        "z2-semidirect",
    )


def grigorchuk_coword_system() -> LSystem:
    """ET0L system for the words over a, b, c, d that are nontrivial in G."""
    tables = (
        Table("s", {
            "S0": ["a S1", "b S0", "c S0", "d S0"],
            "S1": ["a S0", "b S1", "c S1", "d S1", "~"],
        }),
        Table("p", {
            "a": ["a", "δ a", "a δ"],
            "b": ["b", "δ b", "b δ"],
            "c": ["c", "δ c", "c δ"],
            "d": ["d", "δ d", "d δ"],
        }),
        Table("h_L", {
            "a": ["b", "c"],
            "b": "a d a",
            "c": "a b a",
            "d": "a c a",
            "δ": "d",
        }),
        Table("h_R", {
            "a": ["a b a", "a c a"],
            "b": "d",
            "c": "b",
            "d": "c",
            "δ": "a d a",
        }),
        Table("u", {
            "a": ["a", "# a", "a #"],
            "b": ["b", "# b", "b #", "c # d", "d # c"],
            "c": ["c", "# c", "c #", "b # d", "d # b"],
            "d": ["d", "# d", "d #", "b # c", "c # b"],
            "#": ["#", "a # a", "b # b", "c # c", "d # d"],
        }),
        Table("t", {"#": "~"}),
    )
    return LSystem(
        GRIG_ALPHABET,
        GRIG_TERMINALS,
        (("S0",),),
        tables,
        ControlAutomaton.from_regex("s* (p* (h_L|h_R) u* t)*"),
        "grigorchuk-coword",
    )


def k_phi_u_words(
    phi: Callable[[int], int], U: Iterable[int] | None, max_k: int
) -> set[str]:
    """The words ``(b a^phi(k))^k`` for ``k`` in *U* with ``1 <= k <= max_k``.

    ``U=None`` stands for all positive integers.
    """
    ks = range(1, max_k + 1) if U is None else sorted(k for k in U if 1 <= k <= max_k)
    return {("b" + "a" * phi(k)) * k for k in ks}


BUILTINS: dict[str, Callable[[], LSystem]] = {
    "intermediate-growth": intermediate_growth_system,
    "kappa": crossing_sequence_system,
    "grigorchuk-coword": grigorchuk_coword_system,
    "z2-semidirect": z2_semidirect_combing_system,
    "doubling": doubling_system,
}
