"""Independent checks for the primitivity recognizer.

None of these use segment graphs: Whitehead's peak reduction for single
words, the commutator criterion for pairs in ``F_2``, and the exponent-sum
minors, which a primitive set must have coprime.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations, product

from ..errors import DomainError
from .freewords import FreeWord, commutator, cyclic_reduce, cyclically_equal, free_reduce, inverse

Automorphism = tuple[FreeWord, ...]  # image of x_1, ..., x_k


@lru_cache(maxsize=None)
def whitehead_automorphisms(k: int) -> tuple[Automorphism, ...]:
    """Whitehead automorphisms that can change length, ``2k * 4**(k-1)`` of them.

    For a multiplier letter ``m`` each other generator ``x`` is sent to one
    of ``x``, ``x m``, ``m^-1 x`` or ``m^-1 x m``; ``m`` itself is fixed.
    """
    out = []
    for i in range(1, k + 1):
        for m in (i, -i):
            others = [j for j in range(1, k + 1) if j != i]
            for choice in product(range(4), repeat=len(others)):
                images: list[FreeWord] = [()] * k
                images[i - 1] = (i,)
                for j, c in zip(others, choice):
                    images[j - 1] = ((-m,) if c & 2 else ()) + (j,) + ((m,) if c & 1 else ())
                out.append(tuple(images))
    return tuple(out)


def apply_automorphism(phi: Automorphism, w: FreeWord) -> FreeWord:
    out: list[int] = []
    for x in w:
        image = phi[abs(x) - 1]
        out.extend(image if x > 0 else inverse(image))
    return free_reduce(tuple(out))


def whitehead_minimize(w: FreeWord, k: int) -> FreeWord:
    """Greedily shorten the cyclic word *w* until no automorphism helps."""
    if any(abs(x) > k for x in w):
        raise DomainError(f"word uses generators beyond x{k}")
    w = cyclic_reduce(w)
    autos = whitehead_automorphisms(k)
    while True:
        best = w
        for phi in autos:
            image = cyclic_reduce(apply_automorphism(phi, w))
            if len(image) < len(best):
                best = image
        if len(best) == len(w):
            return w
        w = best


def whitehead_primitive(w: FreeWord, k: int) -> bool:
    """Whether *w* is primitive in ``F_k`` (conjugacy-invariant, so any reduced
    word is accepted and cyclically reduced first)."""
    w = cyclic_reduce(w)
    if not w:
        return False
    return len(whitehead_minimize(w, k)) == 1


def is_basis_f2(g: FreeWord, h: FreeWord) -> bool:
    """``{g, h}`` is a basis of ``F_2`` iff ``[g, h]`` is conjugate to ``[a, b]^{+-1}``."""
    c = commutator(free_reduce(g), free_reduce(h))
    return cyclically_equal(c, (1, 2, -1, -2)) or cyclically_equal(c, (2, 1, -2, -1))


def exponent_matrix(words: list[FreeWord], k: int) -> list[list[int]]:
    rows = []
    for w in words:
        row = [0] * k
        for x in w:
            if abs(x) > k:
                raise DomainError(f"word uses generators beyond x{k}")
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [row[:] for row in matrix]
    n = len(m)
    sign = 1
    prev = 1
    for i in range(n):
        if m[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if m[r][i] != 0), None)
            if swap is None:
                return 0
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
        prev = m[i][i]
    return sign * m[n - 1][n - 1] if n else 1


def abelianization_minor_gcd(words: list[FreeWord], k: int) -> int:
    """gcd of the ``n x n`` minors of the exponent-sum matrix (0 if none is nonzero)."""
    matrix = exponent_matrix(words, k)
    n = len(matrix)
    if n > k:
        return 0
    g = 0
    for cols in combinations(range(k), n):
        g = math.gcd(g, bareiss_determinant([[row[c] for c in cols] for row in matrix]))
    return g
