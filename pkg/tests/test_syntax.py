import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from trineg.syntax import (
    And, Atom, ConNeg, FormulaSyntaxError, Implies, IntNeg, OppNeg, Or,
    atoms, depth, expand_connegation, parse, random_formula, render, size, substitute,
)

A, B, C = Atom("A"), Atom("B"), Atom("C")


def test_precedence_and_associativity():
    assert parse("A -> B -> C") == Implies(A, Implies(B, C))
    assert parse("A | B & C") == Or(A, And(B, C))
    assert parse("A & B | C") == Or(And(A, B), C)
    assert parse("!#~A") == ConNeg(OppNeg(IntNeg(A)))
    assert parse("(A -> B) -> C") == Implies(Implies(A, B), C)


def test_unicode_aliases():
    assert parse("¬A ∧ ∼B → ⌐C ∨ A") == parse("!A & ~B -> #C | A")


@pytest.mark.parametrize(
    "text, rendered",
    [
        ("((A))", "A"),
        ("(A -> B) -> C", "(A -> B) -> C"),
        ("A -> (B -> C)", "A -> B -> C"),
        ("!(A & B)", "!(A & B)"),
        ("(A & B) & C", "A & B & C"),
        ("A & (B & C)", "A & (B & C)"),
    ],
)
def test_render_minimal_parentheses(text, rendered):
    assert render(parse(text)) == rendered


@pytest.mark.parametrize(
    "text, column",
    [("A &", 4), ("A -> ) B", 6), ("(A", 3), ("A $ B", 3), ("", 1), ("A B", 3), ("A - B", 3)],
)
def test_syntax_error_columns(text, column):
    with pytest.raises(FormulaSyntaxError) as info:
        parse(text)
    assert info.value.column == column
    assert f"column {column}" in str(info.value)


def test_syntax_error_lists_expected_tokens():
    with pytest.raises(FormulaSyntaxError) as info:
        parse("A &")
    assert "atom" in info.value.expected


def test_helpers():
    f = parse("(B -> !A) & #B")
    assert atoms(f) == ["A", "B"]
    assert depth(A) == 0 and depth(f) == 3
    assert size(f) == 7
    assert substitute(parse("A -> B"), {"A": parse("B & C")}) == parse("B & C -> B")


def test_expand_connegation_shape():
    assert expand_connegation(parse("!A")) == Or(OppNeg(A), IntNeg(A))
    assert expand_connegation(parse("!!A")) == Or(OppNeg(Or(OppNeg(A), IntNeg(A))), IntNeg(Or(OppNeg(A), IntNeg(A))))


@given(st.integers(0, 2**32 - 1), st.integers(0, 8))
def test_round_trip(seed, d):
    f = random_formula(np.random.default_rng(seed), ["A", "B", "C", "p1"], d)
    assert depth(f) <= d
    assert parse(render(f)) == f
