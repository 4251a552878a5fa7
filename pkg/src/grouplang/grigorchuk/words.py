"""Words over {a, b, c, d}: reduction, the maps phi_L/phi_R, the word problem."""

from __future__ import annotations

import re
from functools import lru_cache

from ..errors import AlphabetError, DomainError

LETTERS = frozenset("abcd")

# b, c, d together with 1 form a Klein four-group: xor on these codes.
_KLEIN = {"b": 1, "c": 2, "d": 3}
_KLEIN_LETTER = {1: "b", 2: "c", 3: "d"}

_FORBIDDEN = re.compile(r"aa|[bcd][bcd]")

PHI_L = {"b": "a", "c": "a", "d": "", "aba": "c", "aca": "d", "ada": "b"}
PHI_R = {"b": "c", "c": "d", "d": "b", "aba": "a", "aca": "a", "ada": ""}
PHI = {"L": PHI_L, "R": PHI_R}


def check_word(w: str) -> str:
    if not set(w) <= LETTERS:
        bad = sorted(set(w) - LETTERS)
        raise AlphabetError(f"letters {bad} are not generators of G")
    return w


def reduce(w: str) -> str:
    """The unique reduced word equal to *w* under the defining identities."""
    stack: list[str] = []
    for x in check_word(w):
        top = stack[-1] if stack else ""
        if x == "a":
            if top == "a":
                stack.pop()
            else:
                stack.append("a")
        elif top in _KLEIN:
            prod = _KLEIN[top] ^ _KLEIN[x]
            if prod:
                stack[-1] = _KLEIN_LETTER[prod]
            else:
                stack.pop()
        else:
            stack.append(x)
    return "".join(stack)


def klein_product(x: str, y: str) -> str:
    return _KLEIN_LETTER.get(_KLEIN[x] ^ _KLEIN[y], "")


def is_reduced(w: str) -> bool:
    return _FORBIDDEN.search(w) is None


def in_G1(w: str) -> bool:
    """Whether *w* fixes the first level of the tree (even number of a's)."""
    return check_word(w).count("a") % 2 == 0


def in_seed_language(w: str) -> bool:
    return w.count("a") % 2 == 1


def syllables(w: str) -> list[str]:
    """Split a reduced word with an even number of a's into syllables
    from ``{b, c, d, aba, aca, ada}``."""
    check_word(w)
    if not is_reduced(w):
        raise DomainError(f"{w!r} is not reduced")
    if not in_G1(w):
        raise DomainError(f"{w!r} has an odd number of a's")
    out = []
    i = 0
    while i < len(w):
        if w[i] == "a":
            out.append(w[i : i + 3])
            i += 3
        else:
            out.append(w[i])
            i += 1
    return out


def phi(w: str) -> tuple[str, str]:
    """``(phi_L(w), phi_R(w))`` for reduced *w* in G1, before reduction."""
    parts = syllables(w)
    return "".join(PHI_L[s] for s in parts), "".join(PHI_R[s] for s in parts)


def contraction_check(w: str) -> bool:
    """Whether both reduced images are shorter than ``|w|/2 + 1``."""
    check_word(w)
    if not is_reduced(w) or not in_G1(w) or len(w) <= 1:
        raise DomainError("contraction needs a reduced word in G1 of length > 1")
    bound = len(w) / 2 + 1
    return all(len(reduce(image)) < bound for image in phi(w))


@lru_cache(maxsize=1 << 18)
def _trivial_reduced(w: str) -> bool:
    if not w:
        return True
    if in_seed_language(w) or len(w) == 1:
        return False
    left, right = phi(w)
    return _trivial_reduced(reduce(left)) and _trivial_reduced(reduce(right))


def is_trivial(w: str) -> bool:
    """Solve the word problem: True iff *w* represents the identity."""
    return _trivial_reduced(reduce(w))


def nontrivial_branch(w: str) -> tuple[str, str]:
    """For reduced *w* in G1 with ``w != 1``, a side ``'L'``/``'R'`` whose
    image is nontrivial, together with that (unreduced) image."""
    left, right = phi(w)
    if not is_trivial(left):
        return "L", left
    if not is_trivial(right):
        return "R", right
    raise DomainError(f"{w!r} represents the identity")


def reduction_steps(w: str) -> list[tuple[str, int, str]]:
    """A sequence of single rewrites taking *w* to ``reduce(w)``.

    Each entry is ``(kind, index, factor)`` where *factor* is the two-letter
    subword at *index* that is rewritten: ``"cancel"`` deletes a square,
    ``"merge"`` replaces two distinct letters of ``{b, c, d}`` by their
    product.
    """
    steps = []
    s = check_word(w)
    while (m := _FORBIDDEN.search(s)) is not None:
        i = m.start()
        x, y = s[i], s[i + 1]
        if x == y:
            steps.append(("cancel", i, x + y))
            s = s[:i] + s[i + 2 :]
        else:
            steps.append(("merge", i, x + y))
            s = s[:i] + klein_product(x, y) + s[i + 2 :]
    return steps
