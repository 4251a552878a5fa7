"""Compare the numba and pure-numpy tree-action kernels.

    python3 benchmarks/bench_tree_action.py --length 8 --depth 10

Both kernels run on the same batch of words; their outputs must agree.
"""

from __future__ import annotations

import argparse
import itertools
import time

import numpy as np

from grouplang import _accel
from grouplang.grigorchuk.tree import generator_permutations


def batch(length: int) -> np.ndarray:
    rows = list(itertools.product(range(4), repeat=length))
    return np.array(rows, dtype=np.uint8).reshape(len(rows), length)


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--length", type=int, default=8)
    parser.add_argument("--depth", type=int, default=10)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    codes = batch(args.length)
    perms = generator_permutations(args.depth)
    print(f"{len(codes)} words of length {args.length}, {perms.shape[1]} leaves")

    numpy_out = _accel.identity_batch_numpy(codes, perms)
    t_numpy = best_of(lambda: _accel.identity_batch_numpy(codes, perms), args.repeat)
    print(f"numpy  {t_numpy:8.3f} s")
    if _accel.identity_batch_numba is None:
        print("numba  unavailable")
        return
    _accel.identity_batch_numba(codes[:1], perms)  # compile outside the timing
    numba_out = _accel.identity_batch_numba(codes, perms)
    t_numba = best_of(lambda: _accel.identity_batch_numba(codes, perms), args.repeat)
    print(f"numba  {t_numba:8.3f} s  ({t_numpy / t_numba:.1f}x)")
    if not np.array_equal(numpy_out, numba_out):
        raise SystemExit("backends disagree")
    print(f"agree: {int(numba_out.sum())} words act trivially")


if __name__ == "__main__":
    main()
