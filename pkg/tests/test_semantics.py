import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from trineg.semantics import (
    GOEDEL, MAX_ATOMS, LUKASIEWICZ, TRUTH_VALUES, SemanticsConfig, TooManyAtoms, UnboundAtom,
    audit_axioms, entails, eval_formula, implication, is_valid, modus_ponens_preserved,
    parse_value, show, truth_table, value_column,
)
from trineg.proof import AXIOMS
from trineg.syntax import atoms, expand_connegation, random_formula

V = st.sampled_from(TRUTH_VALUES)


def luk(a, b):
    return min(1.0, 1.0 - a + b)


def goedel(a, b):
    return 1.0 if a <= b else b


@given(V, V)
def test_implication_oracles(a, b):
    assert implication(a, b, LUKASIEWICZ) == luk(a, b)
    assert implication(a, b, GOEDEL) == goedel(a, b)


def test_tables_differ_only_at_half_zero():
    diff = [(a, b) for a in TRUTH_VALUES for b in TRUTH_VALUES if implication(a, b, LUKASIEWICZ) != implication(a, b, GOEDEL)]
    assert diff == [(0.5, 0.0)]


def test_unknown_table_rejected():
    with pytest.raises(ValueError):
        SemanticsConfig("kleene")


@given(V)
def test_unary_connectives(a):
    assert eval_formula("#A", {"A": a}) == 1 - a
    assert eval_formula("~A", {"A": a}) == (1.0 if a == 0.5 else 0.5)
    assert eval_formula("!A", {"A": a}) == max(1 - a, eval_formula("~A", {"A": a}))


def test_parse_and_show_values():
    assert [parse_value(t) for t in ("0", "1/2", "0.5", "1", "½")] == [0.0, 0.5, 0.5, 1.0, 0.5]
    assert [show(v) for v in TRUTH_VALUES] == ["0", "1/2", "1"]
    with pytest.raises(ValueError):
        parse_value("0.3")


def test_unbound_atom_named():
    with pytest.raises(UnboundAtom, match="B"):
        eval_formula("A & B", {"A": 1.0})


def test_truth_table_rows_ordered():
    t = truth_table("A -> B")
    assert t.atoms == ["A", "B"]
    assert len(t.rows) == 9
    for vals, res in t.rows:
        assert res == luk(*vals)
    assert "value" in t.to_text().splitlines()[0]


def test_atom_cap():
    f = " & ".join(f"p{i}" for i in range(MAX_ATOMS + 1))
    with pytest.raises(TooManyAtoms):
        truth_table(f)
    assert is_valid(" & ".join(f"p{i}" for i in range(MAX_ATOMS)) + " -> p0").valid


def test_validity_and_counterexamples():
    assert is_valid("A -> (B -> A)").summary() == "valid (9/9 assignments)"
    r = is_valid("(A -> (A -> B)) -> (A -> B)")
    assert not r.valid
    assert {"A": 0.5, "B": 0.0} in r.counterexamples
    assert is_valid("(A -> (A -> B)) -> (A -> B)", GOEDEL).valid
    assert not is_valid("A | #A").valid


def test_entailment():
    assert entails(["A", "A -> B"], "B").valid
    r = entails(["A | B"], "A")
    assert not r.valid and r.counterexamples[0]["A"] != 1.0


def test_modus_ponens_both_tables():
    for cfg in (LUKASIEWICZ, GOEDEL):
        ok, rows = modus_ponens_preserved(cfg)
        assert ok and len(rows) == 9


def test_axiom_audit_default_schemas():
    report = audit_axioms([AXIOMS[n] for n in ("a1", "a2", "a3")], LUKASIEWICZ, spot_checks=20)
    assert report.by_name("a1").result.valid and report.by_name("a3").result.valid
    assert not report.by_name("a2").result.valid
    assert report.by_name("a1").spot_check_failures == 0
    assert report.modus_ponens


def _brute(f, names, cfg):
    out = []
    for vals in itertools.product(TRUTH_VALUES, repeat=len(names)):
        out.append(eval_formula(f, dict(zip(names, vals)), cfg))
    return out


@given(st.integers(0, 2**32 - 1), st.sampled_from([LUKASIEWICZ, GOEDEL]))
def test_vectorised_matches_recursive(seed, cfg):
    f = random_formula(np.random.default_rng(seed), ["A", "B", "C"], 5)
    names = atoms(f)
    col = value_column(f, names, cfg)
    assert [TRUTH_VALUES[c] for c in col.tolist()] == _brute(f, names, cfg)


@given(st.integers(0, 2**32 - 1))
def test_expand_connegation_preserves_value(seed):
    f = random_formula(np.random.default_rng(seed), ["A", "B"], 4)
    names = atoms(f)
    assert np.array_equal(value_column(f, names), value_column(expand_connegation(f), names))
