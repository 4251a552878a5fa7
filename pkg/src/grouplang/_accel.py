"""Hot loops for the tree-action oracle, with numba and pure-numpy paths.

The numba path is used when numba imports and ``GROUPLANG_DISABLE_NUMBA`` is
unset (or ``0``).  Both paths are always importable so they can be compared.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

DISABLED = os.environ.get("GROUPLANG_DISABLE_NUMBA", "").lower() not in ("", "0", "false", "no")
USE_NUMBA = numba is not None and not DISABLED

# leaves per chunk in the numpy batch path: rows * leaves int32 cells
_NUMPY_CHUNK_CELLS = 1 << 22


def word_permutation_numpy(codes: np.ndarray, perms: np.ndarray) -> np.ndarray:
    """Leaf permutation of a word; letters act left to right."""
    cur = np.arange(perms.shape[1], dtype=perms.dtype)
    for x in codes:
        cur = perms[x][cur]
    return cur


def identity_batch_numpy(codes: np.ndarray, perms: np.ndarray) -> np.ndarray:
    """For each row of *codes* (equal-length words), whether it acts trivially."""
    n_words, length = codes.shape
    leaves = perms.shape[1]
    out = np.empty(n_words, dtype=np.bool_)
    ident = np.arange(leaves, dtype=perms.dtype)
    rows = max(1, _NUMPY_CHUNK_CELLS // leaves)
    for start in range(0, n_words, rows):
        block = codes[start : start + rows]
        cur = np.broadcast_to(ident, (block.shape[0], leaves))
        for p in range(length):
            cur = perms[block[:, p][:, None], cur]
        out[start : start + rows] = (cur == ident).all(axis=1)
    return out


if numba is not None:

    @numba.njit(cache=True)
    def word_permutation_numba(codes, perms):
        leaves = perms.shape[1]
        cur = np.empty(leaves, dtype=perms.dtype)
        for i in range(leaves):
            v = i
            for x in codes:
                v = perms[x, v]
            cur[i] = v
        return cur

    @numba.njit(cache=True)
    def identity_batch_numba(codes, perms):
        n_words, length = codes.shape
        leaves = perms.shape[1]
        out = np.ones(n_words, dtype=np.bool_)
        for w in range(n_words):
            for i in range(leaves):
                v = i
                for p in range(length):
                    v = perms[codes[w, p], v]
                if v != i:
                    out[w] = False
                    break
        return out

else:  # pragma: no cover
    word_permutation_numba = None
    identity_batch_numba = None


def word_permutation(codes: np.ndarray, perms: np.ndarray) -> np.ndarray:
    if USE_NUMBA:
        return word_permutation_numba(codes, perms)
    return word_permutation_numpy(codes, perms)


def identity_batch(codes: np.ndarray, perms: np.ndarray) -> np.ndarray:
    if USE_NUMBA:
        return identity_batch_numba(codes, perms)
    return identity_batch_numpy(codes, perms)


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
