from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouplang.errors import AlphabetError, DomainError
from grouplang.stallings.oracles import bareiss_determinant
from grouplang.stallings import (
    EdgeEdge,
    NormalizeReport,
    SegmentGraph,
    VertexEdge,
    VertexVertex,
    abelianization_minor_gcd,
    apply_automorphism,
    apply_pinch,
    bouquet,
    clear_memo,
    cyclic_reduce,
    enumerate_pinches,
    fold_once,
    format_word,
    free_reduce,
    inverse,
    is_basis_f2,
    is_elementary_wedge,
    is_primitive_set,
    merge,
    normalize,
    parse_word,
    parse_word_set,
    prune,
    recognize,
    reduced_words,
    whitehead_automorphisms,
    whitehead_primitive,
)

W = parse_word


def loops(*labels):
    return sorted(label for _, _, label in bouquet([W(x) for x in labels]).edges.values())


def labels(g):
    return sorted(format_word(label) for _, _, label in g.edges.values())


def free_words(k, max_size=8, min_size=0):
    letters = [i for i in range(1, k + 1)] + [-i for i in range(1, k + 1)]
    return st.lists(st.sampled_from(letters), min_size=min_size, max_size=max_size).map(
        lambda xs: free_reduce(tuple(xs))
    )


# -- words -----------------------------------------------------------------------


def test_parse_and_format():
    assert W("abA") == (1, 2, -1)
    assert W("x1 X2 x10") == (1, -2, 10)
    assert format_word((1, -2)) == "aB"
    assert format_word(()) == "1"
    assert format_word((27,)) == "x27"
    assert parse_word_set("ab#Ba") == [(1, 2), (-2, 1)]
    with pytest.raises(AlphabetError):
        W("a1")


@given(free_words(3, 12))
def test_free_word_algebra(w):
    assert free_reduce(w + inverse(w)) == ()
    assert free_reduce(w) == w
    c = cyclic_reduce(w)
    assert not c or c[0] != -c[-1]
    assert len(c) % 2 == len(w) % 2


def test_reduced_word_counts():
    # 2k (2k - 1)^(n - 1) reduced words of length n
    assert [sum(1 for _ in reduced_words(2, n)) for n in range(5)] == [1, 4, 12, 36, 108]
    assert sum(1 for _ in reduced_words(3, 3)) == 6 * 25


# -- graphs ------------------------------------------------------------------------------


def test_bouquet_examples():
    g = bouquet([W("ab")])
    assert len(g.vertices) == 1 and labels(g) == ["ab"]
    assert len(bouquet([W("a"), W("b")]).edges) == 2
    assert loops("abA") == [(1, 2, -1)]


@pytest.mark.parametrize("bad", [[], [()], [(1, -1)]])
def test_bouquet_rejects_bad_input(bad):
    with pytest.raises(DomainError):
        bouquet(bad)


def test_fold_case_I():
    case, g = fold_once(bouquet([W("ab"), W("ab")]))
    assert case == "I"
    assert labels(g) == ["ab"] and len(g.vertices) == 1


def test_fold_case_II():
    g = SegmentGraph([0, 1, 2], [(0, 1, W("a")), (0, 2, W("ab"))])
    case, h = fold_once(g)
    assert case == "II"
    assert h == SegmentGraph([0, 1, 2], [(0, 1, W("a")), (1, 2, W("b"))])
    assert h.letter_count() < g.letter_count()


def test_fold_case_III():
    g = SegmentGraph([0, 1, 2], [(0, 1, W("ab")), (0, 2, W("ac"))])
    case, h = fold_once(g)
    assert case == "III"
    assert labels(h) == ["a", "b", "c"]
    assert h.degrees()[0] == 1 and len(h.vertices) == 4


def test_fold_within_one_loop():
    # a loop a b A at one vertex is a stem a and a loop b
    case, h = fold_once(bouquet([W("abA")]))
    assert case == "III"
    assert labels(h) == ["a", "b"]
    assert labels(normalize(bouquet([W("abA")]))) == ["b"]


def test_fold_on_folded_graph():
    assert fold_once(bouquet([W("a")])) is None


def test_prune_and_merge():
    path = SegmentGraph([0, 1, 2], [(0, 1, W("a")), (1, 2, W("b"))])
    assert labels(merge(path)) == ["ab"]
    hanging = SegmentGraph([0, 1], [(0, 0, W("a")), (0, 0, W("b")), (0, 1, W("c"))])
    assert prune(hanging) == bouquet([W("a"), W("b")])
    loop = bouquet([W("ab")])
    assert merge(loop) == loop and prune(loop) == loop


def test_merge_inverts_backward_edges():
    g = SegmentGraph([0, 1, 2], [(0, 1, W("a")), (2, 1, W("b"))])
    assert labels(merge(g)) in (["aB"], ["bA"])


def test_normalize_examples():
    assert normalize(bouquet([W("a"), W("a")])) == bouquet([W("a")])
    assert normalize(bouquet([W("a")])) == bouquet([W("a")])
    core = normalize(bouquet([W("ab"), W("ba")]))
    assert core.is_folded() and core.is_topological() and core.rank() == 2
    assert core.letter_count() == 4


@settings(max_examples=150, deadline=None)
@given(st.lists(free_words(3, 7, min_size=1), min_size=1, max_size=3))
def test_normalize_invariants(ws):
    ws = [w for w in ws if w]
    if not ws:
        return
    g = bouquet(ws)
    report = NormalizeReport()
    h = normalize(g, report)
    assert report.max_rank_increase <= 0
    assert h.is_folded() and h.is_connected()
    assert h.is_topological() or not h.edges
    r = h.rank()
    if r > 1:
        assert len(h.edges) <= 3 * r - 3 and len(h.vertices) <= 2 * r - 2
    assert h.letter_count() <= g.letter_count()
    # folds never raise the letter count; cases I and II lower it
    while (step := fold_once(g)) is not None:
        case, nxt = step
        if case in ("I", "II"):
            assert nxt.letter_count() < g.letter_count()
        else:
            assert nxt.letter_count() <= g.letter_count()
        g = nxt


# -- pinches ----------------------------------------------------------------------------


def test_vertex_vertex_pinch():
    g = SegmentGraph([0, 1], [(0, 1, W("a")), (0, 1, W("b"))])
    h = apply_pinch(g, VertexVertex(0, 1))
    assert len(h.vertices) == 1 and h.rank() == g.rank() + 1
    with pytest.raises(DomainError):
        VertexVertex(0, 0)


def test_vertex_edge_pinch():
    g = bouquet([W("abab")])
    h = apply_pinch(g, VertexEdge(0, 0, 2))
    assert labels(h) == ["ab", "ab"] and len(h.vertices) == 1
    with pytest.raises(DomainError):
        apply_pinch(g, VertexEdge(0, 0, 4))


def test_edge_edge_pinch():
    g = bouquet([W("ab"), W("cd")])
    h = apply_pinch(g, EdgeEdge(0, 1, 1, 1))
    new = (h.vertices - g.vertices).pop()
    assert h.degrees()[new] == 4
    assert h.letter_count() == g.letter_count()


def test_same_edge_pinch():
    g = bouquet([W("abc")])
    h = apply_pinch(g, EdgeEdge(0, 1, 0, 2))
    assert labels(h) == ["a", "b", "c"] and h.rank() == 2


def test_enumerate_pinches_examples():
    assert enumerate_pinches(bouquet([W("a")])) == []
    assert enumerate_pinches(bouquet([W("ab")])) == [VertexEdge(0, 0, 1)]
    assert enumerate_pinches(SegmentGraph([0, 1], [(0, 1, W("a"))])) == [VertexVertex(0, 1)]
    with_same = enumerate_pinches(bouquet([W("abc")]))
    without = enumerate_pinches(bouquet([W("abc")]), same_edge=False)
    assert EdgeEdge(0, 1, 0, 2) in with_same and EdgeEdge(0, 1, 0, 2) not in without


@settings(max_examples=100, deadline=None)
@given(st.lists(free_words(2, 6, min_size=1), min_size=1, max_size=2))
def test_pinches_keep_letters_and_raise_rank_by_at_most_one(ws):
    ws = [w for w in ws if w]
    if not ws:
        return
    g = normalize(bouquet(ws))
    for move in enumerate_pinches(g):
        h = apply_pinch(g, move)
        assert h.letter_count() == g.letter_count()
        assert h.rank() - g.rank() in (0, 1)
        assert h.is_connected()


def test_canonical_form_ignores_vertex_names():
    g = SegmentGraph([5, 9], [(5, 9, W("a")), (9, 5, W("b")), (5, 5, W("c"))])
    h = SegmentGraph([0, 1], [(1, 0, W("a")), (0, 1, W("b")), (1, 1, W("c"))])
    assert g == h
    assert g != SegmentGraph([0, 1], [(1, 0, W("a")), (0, 1, W("b")), (0, 0, W("c"))])
    flipped = SegmentGraph([0], [(0, 0, W("A"))])
    assert flipped == bouquet([W("a")])


def test_elementary_wedge():
    assert is_elementary_wedge(bouquet([W("a"), W("b")]), {1, 2})
    assert not is_elementary_wedge(bouquet([W("ab")]), {1, 2})
    assert not is_elementary_wedge(bouquet([W("a")]), {1, 2})
    assert is_elementary_wedge(bouquet([W("A"), W("b")]))


# -- oracles ----------------------------------------------------------------------------------


def test_whitehead_automorphism_count():
    for k in (1, 2, 3):
        assert len(whitehead_automorphisms(k)) == 2 * k * 4 ** (k - 1)


@pytest.mark.parametrize("w, k, primitive", [("a", 2, True), ("aa", 2, False), ("abAB", 2, False), ("abA", 2, True), ("abbaB", 2, False), ("aabab", 2, True)])
def test_whitehead_examples(w, k, primitive):
    assert whitehead_primitive(W(w), k) is primitive


def test_basis_examples():
    assert is_basis_f2(W("a"), W("b"))
    assert is_basis_f2(W("a"), W("ba"))
    assert not is_basis_f2(W("a"), W("A"))
    assert not is_basis_f2(W("aa"), W("b"))


def test_minor_gcd_examples():
    assert abelianization_minor_gcd([W("a")], 1) == 1
    assert abelianization_minor_gcd([W("aa")], 1) == 2
    assert abelianization_minor_gcd([W("ab"), W("Ab")], 2) == 2
    assert abelianization_minor_gcd([W("abAB")], 2) == 0
    assert bareiss_determinant([[2, 1, 0], [1, 3, 1], [0, 1, 4]]) == 18


def nielsen_basis(k):
    """Strategy: a basis of F_k reached by random elementary Nielsen moves."""
    move = st.tuples(st.integers(0, k - 1), st.integers(0, k - 1), st.sampled_from(["right", "left", "invert"]))

    def run(moves):
        basis = [(i,) for i in range(1, k + 1)]
        for i, j, kind in moves:
            if kind == "invert":
                basis[i] = inverse(basis[i])
            elif i != j:
                basis[i] = free_reduce(basis[i] + basis[j] if kind == "right" else basis[j] + basis[i])
        return basis

    return st.lists(move, max_size=5).map(run)


@settings(max_examples=60, deadline=None)
@given(nielsen_basis(2))
def test_nielsen_images_are_primitive(basis):
    assert is_basis_f2(*basis)
    for w in basis:
        if len(w) <= 8:
            assert whitehead_primitive(w, 2)
            assert is_primitive_set([w], 2)


@settings(max_examples=60, deadline=None)
@given(nielsen_basis(3))
def test_nielsen_images_in_f3(basis):
    w = basis[0]
    assert whitehead_primitive(w, 3)
    assert abelianization_minor_gcd(basis, 3) == 1
    if len(w) <= 6:
        assert is_primitive_set([w], 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), free_words(2, 6, min_size=1))
def test_whitehead_is_automorphism_invariant(seed, w):
    autos = whitehead_automorphisms(2)
    image = apply_automorphism(autos[seed % len(autos)], w)
    if image:
        assert whitehead_primitive(image, 2) == whitehead_primitive(w, 2)


# -- recognizer -------------------------------------------------------------------------------


def test_recognizer_examples():
    assert is_primitive_set([W("a"), W("b")], 2)
    assert is_primitive_set([W("abA")], 2)
    assert not is_primitive_set([W("abAB")], 2)
    assert not is_primitive_set([W("a"), W("b"), W("ab")], 2)
    assert not is_primitive_set([W("a"), W("a")], 2)
    assert is_primitive_set([W("ab"), W("b")], 2)


def test_recognizer_errors():
    with pytest.raises(DomainError):
        recognize([W("aA")], 2)
    with pytest.raises(AlphabetError):
        recognize([W("c")], 2)


def test_recognizer_trace_and_budget():
    result = recognize([W("aab")], 2, trace=True, memo={})
    assert result.primitive and result.budget == 1
    assert result.trace[0].startswith("bouquet")
    assert any(line.startswith("pinch") for line in result.trace)
    assert result.stats.ok


def test_effective_alphabet_sets_the_budget():
    # only x1 occurs, so the budget is 1 - 1 = 0 even in F_3
    result = recognize([W("a")], 3, memo={})
    assert result.primitive and result.budget == 0
    assert not recognize([W("aa")], 3, memo={}).primitive


def test_same_edge_option_agrees_on_small_words():
    clear_memo()
    for w in reduced_words(2, 5):
        assert is_primitive_set([w], 2) == is_primitive_set([w], 2, same_edge_pinches=False), w


@settings(max_examples=80, deadline=None)
@given(free_words(2, 7, min_size=1))
def test_recognizer_matches_whitehead(w):
    if w:
        result = recognize([w], 2)
        assert result.primitive == whitehead_primitive(w, 2)
        if result.primitive:
            assert abelianization_minor_gcd([w], 2) == 1


@settings(max_examples=80, deadline=None)
@given(free_words(2, 4, min_size=1), free_words(2, 4, min_size=1))
def test_recognizer_matches_commutator_test(g, h):
    if g and h:
        assert is_primitive_set([g, h], 2) == is_basis_f2(g, h)


def test_conjugation_invariance():
    for w in [W("ab"), W("aab"), W("abb"), W("abAB")]:
        conj = free_reduce(W("b") + w + W("B"))
        assert is_primitive_set([w], 2) == is_primitive_set([conj], 2)
