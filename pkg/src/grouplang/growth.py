"""Growth series of generated languages: exact counts and bound reports."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import NonExhaustiveError
from .lsystem import LSystem, SearchCaps, enumerate_language


@dataclass(frozen=True)
class GrowthSeries:
    """``counts[n]`` is the number of words of length ``n`` in the language."""

    counts: tuple[int, ...]
    source: str = ""

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "count"])
        writer.writerows(enumerate(self.counts))
        return buf.getvalue()


def growth_of_system(system: LSystem, n_max: int, caps: SearchCaps | None = None) -> GrowthSeries:
    """Exact counts for lengths ``0..n_max``; refuses incomplete enumerations."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    result = enumerate_language(system, n_max, caps)
    if not result.exhaustive:
        raise NonExhaustiveError(
            f"enumeration of {system.name or 'the system'} up to length {n_max} hit a cap "
            f"after {result.visited} states; counts would be partial"
        )
    counts = [0] * (n_max + 1)
    for w in result.words:
        counts[len(w)] += 1
    return GrowthSeries(tuple(counts), system.name)


def partition_counts(n_max: int) -> tuple[int, ...]:
    """``p(0), ..., p(n_max)``, the number of integer partitions."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    p = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for n in range(part, n_max + 1):
            p[n] += p[n - part]
    return tuple(p)


def _ranges(ns: Iterable[int]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for n in ns:
        if out and out[-1][1] == n - 1:
            out[-1] = (out[-1][0], n)
        else:
            out.append((n, n))
    return out


@dataclass(frozen=True)
class GrowthReport:
    alpha: float
    beta: float
    lower_ranges: list[tuple[int, int]]
    upper_ranges: list[tuple[int, int]]
    both_ranges: list[tuple[int, int]]
    ratios: list[float | None]

    def lower_holds_from(self, n_max: int) -> int | None:
        """Smallest ``n0`` with ``n^alpha < f(n)`` for every ``n0 <= n <= n_max``."""
        if self.lower_ranges and self.lower_ranges[-1][1] == n_max:
            return self.lower_ranges[-1][0]
        return None


def intermediate_growth_report(f: GrowthSeries, alpha: float, beta: float) -> GrowthReport:
    """Where ``n^alpha < f(n) < beta^n`` holds for ``1 <= n <= n_max``.

    ``ratios[n]`` is ``f(n+1)/f(n)`` (None where ``f(n) = 0``).
    """
    if alpha <= 1 or beta <= 1:
        raise ValueError("alpha and beta must exceed 1")
    ns = range(1, f.n_max + 1)
    lower = [n for n in ns if n**alpha < f[n]]
    upper = [n for n in ns if f[n] < beta**n]
    both = sorted(set(lower) & set(upper))
    ratios = [f[n + 1] / f[n] if f[n] else None for n in range(f.n_max)]
    return GrowthReport(alpha, beta, _ranges(lower), _ranges(upper), _ranges(both), ratios)


def k_phi_u_growth(
    phi: Callable[[int], int], U: Iterable[int] | None, n_max: int
) -> GrowthSeries:
    """Counts for ``K(phi, U) = {(b a^phi(k))^k : k in U}``; the word for ``k``
    has length ``k (1 + phi(k))``.  ``U=None`` means every positive integer."""
    counts = [0] * (n_max + 1)
    ks = range(1, n_max + 1) if U is None else {k for k in U if 1 <= k <= n_max}
    for k in ks:
        length = k * (1 + phi(k))
        if length <= n_max:
            counts[length] += 1
    return GrowthSeries(tuple(counts), "K(phi,U)")
