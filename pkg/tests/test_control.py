from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouplang.errors import GrammarSyntaxError
from grouplang.lsystem import ControlAutomaton
from grouplang.lsystem.control import format_regex, parse_regex

from _oracles import control_regex

NAMES = ["t", "u", "h_a", "phi'"]


def regex_text():
    leaf = st.sampled_from(NAMES + ["ε"])

    def extend(children):
        return st.one_of(
            st.lists(children, min_size=2, max_size=3).map(lambda xs: " ".join(f"({x})" for x in xs)),
            st.lists(children, min_size=2, max_size=3).map(lambda xs: "|".join(xs)),
            children.map(lambda x: f"({x})*"),
        )

    return st.recursive(leaf, extend, max_leaves=6)


@pytest.mark.parametrize(
    "text, accepted, rejected",
    [
        ("t*", [[], ["t"], ["t", "t", "t"]], [["u"]]),
        ("(h_a|h_b)* h_a h_$", [["h_a", "h_$"], ["h_b", "h_a", "h_a", "h_$"]], [["h_b", "h_$"], ["h_a"]]),
        ("phi_q* phi_s (phi_v|phi_h)*", [["phi_s"], ["phi_q", "phi_s", "phi_h", "phi_v"]], [["phi_v"]]),
        ("ε", [[]], [["t"]]),
        ("∅", [], [[], ["t"]]),
    ],
)
def test_known_controls(text, accepted, rejected):
    ctl = ControlAutomaton.from_regex(text)
    for names in accepted:
        assert ctl.accepts(names)
    for names in rejected:
        assert not ctl.accepts(names)


def test_empty_control_has_no_accepting_state():
    assert ControlAutomaton.empty().dfa.is_empty
    assert ControlAutomaton.from_regex("t ∅").dfa.is_empty


def test_dfa_is_trimmed():
    dfa = ControlAutomaton.from_regex("(t u)* t").dfa
    for state in dfa.states:
        assert state in dfa.accepting or dfa.transitions[state]
    assert dfa.run(["u"]) is None


@pytest.mark.parametrize("text, column", [("(t u", 1), ("t )", 3), ("| )", 3), ("*", 1)])
def test_syntax_errors_carry_a_column(text, column):
    with pytest.raises(GrammarSyntaxError) as info:
        parse_regex(text, line=7)
    assert info.value.line == 7
    assert info.value.column == column


@settings(max_examples=150, deadline=None)
@given(regex_text())
def test_dfa_agrees_with_python_re(text):
    ctl = ControlAutomaton.from_regex(text)
    pattern, code = control_regex(text, NAMES)
    for n in range(5):
        for names in itertools.product(NAMES, repeat=n):
            assert ctl.accepts(names) == bool(pattern.fullmatch("".join(code[x] for x in names))), names


@settings(max_examples=150, deadline=None)
@given(regex_text())
def test_printing_round_trips(text):
    expr = parse_regex(text)
    assert parse_regex(format_regex(expr)) == expr
