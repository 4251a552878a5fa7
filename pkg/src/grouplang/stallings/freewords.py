"""Words in a free group ``F(x1, ..., xk)``.

A word is a tuple of nonzero ints: ``i`` stands for ``x_i`` and ``-i`` for
its inverse.  The text syntax uses ``a b c ...`` for the generators with
uppercase for inverses, or ``x1 X1 x2 ...`` when more than 26 generators are
needed.  Sets of words are ``#``-separated.
"""

from __future__ import annotations

import re
from itertools import product

from ..errors import AlphabetError, DomainError

FreeWord = tuple[int, ...]

_TOKEN = re.compile(r"([xX])(\d+)|([a-zA-Z])|(\s+)")


def parse_word(text: str) -> FreeWord:
    """Parse ``"abA"`` or ``"x1 x2 X1"`` (no free reduction is applied)."""
    out = []
    pos = 0
    text = text.strip()
    use_x = bool(re.fullmatch(r"(\s*[xX]\d+)*\s*", text))
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise AlphabetError(f"unexpected character {text[pos]!r} at offset {pos}")
        pos = m.end()
        if m.group(4):
            continue
        if use_x and m.group(1):
            index = int(m.group(2))
            if index < 1:
                raise AlphabetError("generator indices start at 1")
            out.append(index if m.group(1) == "x" else -index)
        else:
            ch = m.group(3)
            if ch is None:
                raise AlphabetError(f"cannot mix letter and x-index syntax in {text!r}")
            index = ord(ch.lower()) - ord("a") + 1
            out.append(index if ch.islower() else -index)
    return tuple(out)


def parse_word_set(text: str) -> list[FreeWord]:
    return [parse_word(part) for part in text.split("#")]


def format_word(w: FreeWord) -> str:
    if not w:
        return "1"
    if max(abs(x) for x in w) <= 26:
        return "".join(chr(ord("a") + abs(x) - 1) if x > 0 else chr(ord("A") + abs(x) - 1) for x in w)
    return " ".join(f"x{x}" if x > 0 else f"X{-x}" for x in w)


def inverse(w: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(w))


def free_reduce(w: FreeWord) -> FreeWord:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def is_reduced(w: FreeWord) -> bool:
    return all(x != -y for x, y in zip(w, w[1:]))


def cyclic_reduce(w: FreeWord) -> FreeWord:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def cyclic_rotations(w: FreeWord) -> set[FreeWord]:
    return {w[i:] + w[:i] for i in range(max(1, len(w)))}


def cyclically_equal(u: FreeWord, v: FreeWord) -> bool:
    u, v = cyclic_reduce(u), cyclic_reduce(v)
    return len(u) == len(v) and v in cyclic_rotations(u)


def multiply(*words: FreeWord) -> FreeWord:
    return free_reduce(tuple(x for w in words for x in w))


def commutator(g: FreeWord, h: FreeWord) -> FreeWord:
    """``g h g^-1 h^-1``."""
    return multiply(g, h, inverse(g), inverse(h))


def generators(words: list[FreeWord]) -> set[int]:
    """Indices of the generators occurring (possibly inverted) in *words*."""
    return {abs(x) for w in words for x in w}


def check_words(words: list[FreeWord], k: int | None = None) -> None:
    for w in words:
        if not w:
            raise DomainError("words must be nonempty")
        if not is_reduced(w):
            raise DomainError(f"{format_word(w)} is not freely reduced")
        if k is not None and max(abs(x) for x in w) > k:
            raise AlphabetError(f"{format_word(w)} uses a generator beyond x{k}")


def reduced_words(k: int, length: int):
    """All freely reduced words of exactly *length* over ``k`` generators."""
    letters = [x for i in range(1, k + 1) for x in (i, -i)]
    if length == 0:
        yield ()
        return
    for w in product(letters, repeat=length):
        if is_reduced(w):
            yield w
