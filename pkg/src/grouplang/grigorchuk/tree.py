"""Action of G on the depth-truncated rooted binary tree.

Leaves of the depth-``n`` tree are the integers ``0 .. 2**n - 1`` read as
binary strings, most significant bit first (the first-level choice).  The
generators act by ``a = (1, 1) swap``, ``b = (a, c)``, ``c = (a, d)``,
``d = (1, b)``, and a word acts letter by letter from the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .. import _accel
from .words import check_word

_CODE = {"a": 0, "b": 1, "c": 2, "d": 3}


@lru_cache(maxsize=None)
def generator_permutations(depth: int) -> np.ndarray:
    """Array of shape ``(4, 2**depth)``: leaf images under a, b, c, d."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth == 0:
        return np.zeros((4, 1), dtype=np.int32)
    sub = generator_permutations(depth - 1)
    half = sub.shape[1]
    ident = np.arange(half, dtype=np.int32)
    a, b, c, d = range(4)
    perms = np.empty((4, 2 * half), dtype=np.int32)
    perms[a] = np.concatenate([ident + half, ident])
    perms[b] = np.concatenate([sub[a], sub[c] + half])
    perms[c] = np.concatenate([sub[a], sub[d] + half])
    perms[d] = np.concatenate([ident, sub[b] + half])
    perms.setflags(write=False)
    return perms


def encode(w: str) -> np.ndarray:
    return np.fromiter((_CODE[x] for x in check_word(w)), dtype=np.uint8, count=len(w))


@dataclass(frozen=True, eq=False)
class TreeAutomorphismAction:
    """A permutation of the leaves induced by a tree automorphism."""

    depth: int
    perm: np.ndarray

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeAutomorphismAction):
            return NotImplemented
        return self.depth == other.depth and np.array_equal(self.perm, other.perm)

    def __hash__(self) -> int:
        return hash((self.depth, self.perm.tobytes()))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.perm, np.arange(self.perm.size)))

    def fixes_first_level(self) -> bool:
        half = self.perm.size // 2
        return bool((self.perm[:half] < half).all())

    def section(self, side: str) -> "TreeAutomorphismAction":
        """Restriction to the left (``'L'``) or right (``'R'``) subtree."""
        if self.depth < 1 or not self.fixes_first_level():
            raise ValueError("sections need an automorphism fixing the first level")
        half = self.perm.size // 2
        part = self.perm[:half] if side == "L" else self.perm[half:] - half
        return TreeAutomorphismAction(self.depth - 1, part.copy())

    def then(self, other: "TreeAutomorphismAction") -> "TreeAutomorphismAction":
        """Apply *self* first, then *other*."""
        return TreeAutomorphismAction(self.depth, other.perm[self.perm])


def tree_action(w: str, depth: int) -> TreeAutomorphismAction:
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    perm = _accel.word_permutation(encode(w), generator_permutations(depth))
    return TreeAutomorphismAction(depth, np.asarray(perm))


def acts_trivially(words: Iterable[str], depth: int) -> np.ndarray:
    """Vectorised identity test for many words of the same length."""
    words = list(words)
    if not words:
        return np.zeros(0, dtype=bool)
    length = len(words[0])
    if any(len(w) != length for w in words):
        raise ValueError("acts_trivially needs words of equal length")
    codes = np.array([encode(w) for w in words], dtype=np.uint8).reshape(len(words), length)
    return _accel.identity_batch(codes, generator_permutations(depth))
