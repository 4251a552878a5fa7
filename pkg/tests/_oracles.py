"""Reference implementations used only by the tests.

Each one is written from the definitions, without touching the code it is
used to check: Python's ``re`` for control languages, brute-force table
application for L-systems, exact rational crossing times for kappa, explicit
partition generation, and a bitwise recursive Grigorchuk tree action.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from grouplang.lsystem import LSystem, step


# -- control languages through Python's re ---------------------------------------


def control_regex(text: str, names: list[str]) -> tuple[re.Pattern, dict[str, str]]:
    """Translate a control expression into a Python regex over one char per name."""
    code = {name: chr(0x4E00 + i) for i, name in enumerate(sorted(names, key=len, reverse=True))}
    out = []
    for tok in re.findall(r"[()|*]|[^\s()|*]+", text):
        if tok in "()|*":
            out.append(tok)
        elif tok == "ε":
            out.append("(?:)")
        elif tok == "∅":
            out.append("(?!)")
        else:
            out.append(re.escape(code[tok]))
    return re.compile("".join(out).replace("()", "(?:)")), code


def naive_language(system: LSystem, control_text: str, max_len: int, depth: int) -> set[tuple[str, ...]]:
    """Terminal words of length <= max_len from every accepted table sequence of length <= depth."""
    names = [t.name for t in system.tables]
    pattern, code = control_regex(control_text, names)
    terminals = set(system.terminals)
    out: set[tuple[str, ...]] = set()
    layer = {("", axiom) for axiom in system.axioms}
    for d in range(depth + 1):
        for prefix, form in layer:
            if len(form) <= max_len and set(form) <= terminals and pattern.fullmatch(prefix):
                out.add(form)
        if d == depth:
            break
        nxt = set()
        for prefix, form in layer:
            for table in system.tables:
                for image in step(form, table):
                    if len(image) <= 2 * max_len + 4:
                        nxt.add((prefix + code[table.name], image))
        layer = nxt
    return out


# -- crossing sequences from exact crossing times -------------------------------------


def kappa_geometric(m: int, n: int) -> str:
    """Crossings of the segment from (0, 0) to (m, n + 1/(2m)) with the lines
    x = 1..m (``v``) and y = 1..n (``h``), in order of crossing time."""
    eps = Fraction(1, 2 * m)
    events = [(Fraction(i, m), "v") for i in range(1, m + 1)]
    events += [(Fraction(j) / (n + eps), "h") for j in range(1, n + 1)]
    return "".join(kind for _, kind in sorted(events))


# -- partitions ----------------------------------------------------------------------


def partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def a_language_bruteforce(max_len: int) -> set[str]:
    """``a b^i1 ... a b^ik`` with ``0 <= i1 <= ... <= ik``, by explicit exponent lists."""
    out = set()
    for k in range(1, max_len + 1):
        for exps in itertools.combinations_with_replacement(range(max_len), k):
            word = "".join("a" + "b" * e for e in exps)
            if len(word) <= max_len:
                out.add(word)
    return out


# -- the Grigorchuk tree, one leaf at a time -------------------------------------------------


def act_letter(x: str, bits: tuple[int, ...]) -> tuple[int, ...]:
    if not bits:
        return bits
    head, tail = bits[0], bits[1:]
    if x == "a":
        return (1 - head,) + tail
    section = {"b": ("a", "c"), "c": ("a", "d"), "d": ("", "b")}[x][head]
    return (head,) + (act_letter(section, tail) if section else tail)


def act_word(w: str, bits: tuple[int, ...]) -> tuple[int, ...]:
    for x in w:
        bits = act_letter(x, bits)
    return bits


def tree_trivial(w: str, depth: int) -> bool:
    return all(act_word(w, leaf) == leaf for leaf in itertools.product((0, 1), repeat=depth))


def leaf_index(bits: tuple[int, ...]) -> int:
    return int("".join(map(str, bits)) or "0", 2)
