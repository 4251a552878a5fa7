from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grouplang.catalog import (
    a_language_contains,
    crossing_sequence_system,
    doubling_system,
    intermediate_growth_system,
    k_phi_u_words,
    kappa,
)
from grouplang.errors import DomainError, NonExhaustiveError
from grouplang.growth import (
    GrowthSeries,
    growth_of_system,
    intermediate_growth_report,
    k_phi_u_growth,
    partition_counts,
)
from grouplang.lsystem import ControlAutomaton, LSystem, SearchCaps, Table, enumerate_language

from _oracles import a_language_bruteforce, kappa_geometric, partitions


def test_kappa_examples():
    assert kappa(2, 3) == "hvhhv"
    assert kappa(1, 0) == "v"
    # frozen from the exact crossing-time oracle
    assert kappa(3, 1) == "vvhv"
    assert kappa(3, 5) == "hvhhvhhv"


@given(st.integers(1, 30), st.integers(0, 30))
def test_kappa_matches_crossing_times(m, n):
    assert kappa(m, n) == kappa_geometric(m, n)


@pytest.mark.parametrize("m, n", [(0, 1), (-1, 0), (2, -1)])
def test_kappa_domain(m, n):
    with pytest.raises(DomainError):
        kappa(m, n)


def test_a_language_membership():
    assert a_language_contains("a")
    assert a_language_contains("abab")
    assert a_language_contains("aabb")
    assert not a_language_contains("abba")
    assert not a_language_contains("ba")
    assert not a_language_contains("")
    members = {w for n in range(9) for w in _all_words("ab", n) if a_language_contains(w)}
    assert members == a_language_bruteforce(8)


def _all_words(alphabet, n):
    if n == 0:
        yield ""
        return
    for w in _all_words(alphabet, n - 1):
        for x in alphabet:
            yield w + x


def test_kappa_system_enumeration():
    result = enumerate_language(crossing_sequence_system(), 8)
    assert result.exhaustive
    expected = {kappa_geometric(m, n) for m in range(1, 9) for n in range(0, 9 - m)}
    assert {"".join(w) for w in result.words} == expected


def test_k_phi_u_words():
    assert k_phi_u_words(lambda k: k, None, 3) == {"ba", "baabaa", "baaabaaabaaa"}
    assert k_phi_u_words(lambda k: 0, [2, 5], 4) == {"bb"}
    assert k_phi_u_words(lambda k: 1, [], 9) == set()


# -- growth ------------------------------------------------------------------------


def test_partition_counts_against_generation():
    p = partition_counts(25)
    assert p[0] == 1 and p[5] == 7 and p[25] == 1958
    assert list(p) == [sum(1 for _ in partitions(n)) for n in range(26)]


def test_intermediate_growth_counts():
    series = growth_of_system(intermediate_growth_system(), 12)
    # "a" alone at length 1, then "aa" and "ab" at length 2: f(n) = p(n)
    assert series.counts[:7] == (0, 1, 2, 3, 5, 7, 11)
    assert series.counts[1:] == partition_counts(12)[1:]


def test_doubling_growth():
    series = growth_of_system(doubling_system(), 12)
    assert [n for n, c in enumerate(series.counts) if c] == [3, 6, 12]
    assert max(series.counts) == 1


def test_kappa_growth():
    series = growth_of_system(crossing_sequence_system(), 12)
    assert series.counts == tuple(range(13))


def test_empty_language_growth():
    system = LSystem(("a",), ("a",), (("a",),), (Table("t", {}),), ControlAutomaton.empty())
    assert growth_of_system(system, 5).counts == (0,) * 6


def test_non_exhaustive_growth_is_refused():
    with pytest.raises(NonExhaustiveError):
        growth_of_system(intermediate_growth_system(), 12, SearchCaps(max_visited=10))


def test_growth_bounded_by_alphabet_power():
    series = growth_of_system(intermediate_growth_system(), 10)
    assert all(c <= 2**n for n, c in enumerate(series.counts))


def test_csv():
    assert GrowthSeries((0, 1, 2)).to_csv() == "n,count\n0,0\n1,1\n2,2\n"


def test_report_upper_bound():
    report = intermediate_growth_report(GrowthSeries(partition_counts(25)), 2, 1.6)
    assert report.upper_ranges == [(1, 25)]


def test_report_lower_bound_threshold():
    p = partition_counts(25)
    report = intermediate_growth_report(GrowthSeries(p), 2, 1.6)
    # p(16) = 231 < 256 and p(17) = 297 > 289: the bound holds from 17 on
    assert p[16] == 231 and p[17] == 297
    assert report.lower_holds_from(25) == 17
    assert report.lower_ranges[-1] == (17, 25)
    assert report.ratios[5] == pytest.approx(11 / 7)


def test_report_on_zero_series():
    report = intermediate_growth_report(GrowthSeries((0,) * 6), 2, 2)
    assert report.lower_ranges == [] and report.both_ranges == []
    assert report.ratios == [None] * 5


def test_k_phi_u_growth():
    ident = k_phi_u_growth(lambda k: k, None, 12)
    assert [n for n, c in enumerate(ident.counts) if c] == [2, 6, 12]
    assert k_phi_u_growth(lambda k: k, [], 12).counts == (0,) * 13
    zero = k_phi_u_growth(lambda k: 0, None, 8)
    assert zero.counts == (0,) + (1,) * 8


@given(st.integers(0, 6), st.integers(1, 20))
def test_k_phi_u_growth_matches_words(c, n_max):
    phi = lambda k: c  # noqa: E731
    words = k_phi_u_words(phi, None, n_max)
    series = k_phi_u_growth(phi, None, n_max)
    assert series.counts == tuple(sum(1 for w in words if len(w) == n) for n in range(n_max + 1))
