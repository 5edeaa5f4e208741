import json

import pytest

from trineg.proof import (
    AXIOMS, AxiomRef, LemmaRef, ModusPonens, PremiseRef, ProofLine, ProofScript, StatedGoal,
    TheoremRegistry, check_corpus, check_proof, load_corpus, load_scripts, match_schema,
    resolve_axioms, script_from_dict,
)
from trineg.syntax import parse, substitute

P = parse


def script(lines, premises=(), name="t", expected=None):
    lines = tuple(ProofLine(P(f), j) for f, j in lines)
    return ProofScript(name, tuple(P(p) for p in premises), lines, lines[-1].formula, expected)


IDENTITY = [
    ("(p -> (p -> p)) -> (p -> p)", AxiomRef("a2")),
    ("p -> (p -> p)", AxiomRef("a1")),
    ("p -> p", ModusPonens((1, 2))),
]


def test_identity_proof_accepted_and_registered():
    reg = TheoremRegistry()
    r = check_proof(script(IDENTITY, name="id"), registry=reg)
    assert r.accepted
    assert r.lines[0].substitution == {"A": "p", "B": "p"} and r.lines[0].inferred
    assert reg.get("id").status == "proved"


def test_modus_ponens_order_and_arity():
    lines = [("p", PremiseRef(1)), ("p -> q", PremiseRef(2)), ("q", ModusPonens((2, 1)))]
    assert check_proof(script(lines, ["p", "p -> q"])).accepted
    bad = lines[:2] + [("q", ModusPonens((1,)))]
    assert "two line references" in check_proof(script(bad, ["p", "p -> q"])).lines[2].message
    fwd = [("q", ModusPonens((2, 3))), ("p", PremiseRef(1)), ("p -> q", PremiseRef(2))]
    assert "not an earlier line" in check_proof(script(fwd, ["p", "p -> q"])).lines[0].message


def test_wrong_axiom_and_explicit_substitution():
    r = check_proof(script([("p -> (q -> q)", AxiomRef("a1", {"A": P("p"), "B": P("q")}))]))
    assert not r.accepted and "not an instance of a1" in r.lines[0].message
    r = check_proof(script([("p -> (q -> p)", AxiomRef("a1", {"A": P("p"), "B": P("q")}))]))
    assert r.accepted and not r.lines[0].inferred
    r = check_proof(script([("p -> q", AxiomRef("a99"))]))
    assert "unknown axiom" in r.lines[0].message


def test_premise_mismatch():
    r = check_proof(script([("q", PremiseRef(1))], ["p"]))
    assert not r.accepted and "premise 1 is p" in r.lines[0].message


def test_lemma_reference_with_premises():
    reg = TheoremRegistry()
    reg.add_stated(StatedGoal("swap", (P("A -> B"),), P("#B -> #A")))
    lines = [("x & y -> z", PremiseRef(1)), ("#z -> #(x & y)", LemmaRef("swap", None, (1,)))]
    r = check_proof(script(lines, ["x & y -> z"]), registry=reg)
    assert r.accepted and r.lines[1].uses_stated == "swap"
    wrong = [("x -> z", PremiseRef(1)), ("#x -> #z", LemmaRef("swap", None, (1,)))]
    assert not check_proof(script(wrong, ["x -> z"]), registry=reg).accepted
    missing = [("p", LemmaRef("nope"))]
    assert "not an accepted theorem" in check_proof(script(missing), registry=reg).lines[0].message


def test_registry_rejects_duplicates():
    reg = TheoremRegistry()
    reg.add_stated(StatedGoal("x", (), P("p")))
    with pytest.raises(ValueError):
        reg.add_stated(StatedGoal("x", (), P("q")))


def test_matching_binds_consistently():
    assert match_schema(AXIOMS["a1"], P("p -> (q -> p)")) == {"A": P("p"), "B": P("q")}
    assert match_schema(AXIOMS["a1"], P("p -> (q -> r)")) is None


def test_script_validation():
    with pytest.raises(ValueError):
        ProofScript("x", (), (ProofLine(P("p"), PremiseRef(1)),), P("q"))
    with pytest.raises(ValueError):
        script_from_dict({"name": "x", "lines": [{"formula": "p", "just": {"kind": "magic"}}]})


def test_readings_redirect():
    s = resolve_axioms({"a6": "a6_alt"})
    assert s["a6"].pattern == AXIOMS["a6_alt"].pattern
    with pytest.raises(KeyError):
        resolve_axioms({"a6": "a99"})


def test_load_scripts_forms(tmp_path):
    obj = {"name": "id", "lines": [{"formula": "p", "just": {"kind": "premise", "index": 1}}], "premises": ["p"]}
    for payload in (obj, [obj], {"items": [obj]}):
        f = tmp_path / "s.json"
        f.write_text(json.dumps(payload))
        assert [s.name for s in load_scripts(f)] == ["id"]


@pytest.fixture(scope="module")
def corpus_report():
    return check_corpus(load_corpus())


def test_corpus_matches_recorded_verdicts(corpus_report):
    assert corpus_report.all_match_expected
    for name in ("T1.1", "T1.2", "T1.3", "T4.11", "T4.12", "T4.13", "T4.14"):
        assert corpus_report.report(name).accepted


def test_corpus_failures_are_localised(corpus_report):
    failing = {r.name: [v.label for v in r.lines if not v.ok] for r in corpus_report.reports if not r.accepted}
    assert failing["T1.4"] == ["(5)"]
    assert failing["T6.17"] == ["(b)", "(c)"]


def test_alternate_reading_changes_outcome():
    rep = check_corpus(load_corpus(), {"a6": "a6_alt"})
    assert rep.report("T6.13").accepted
    assert not rep.all_match_expected


def test_shadow_reverify_recorded_substitutions(corpus_report):
    """Recorded substitutions must reproduce each axiom line independently of the matcher."""
    schemas = resolve_axioms()
    items = {s.name: s for s in load_corpus() if isinstance(s, ProofScript)}
    checked = 0
    for r in corpus_report.reports:
        s = items[r.name]
        for v, line in zip(r.lines, s.lines):
            if v.ok and isinstance(line.just, AxiomRef):
                sub = {k: parse(x) for k, x in v.substitution.items()}
                assert substitute(schemas[line.just.name].pattern, sub) == line.formula
                checked += 1
    assert checked > 20
