import json

import numpy as np
import pytest

from trineg import audit, scoi
from trineg.scoi import NegationConfig

COARSE = audit.GridSpec(degree_step=0.01)


@pytest.fixture(scope="module")
def verbatim():
    return audit.audit_pointwise(COARSE)


@pytest.fixture(scope="module")
def symmetric():
    return audit.audit_pointwise(COARSE, NegationConfig(0.5, "symmetric"))


def test_grid_validation():
    with pytest.raises(ValueError):
        audit.GridSpec(degree_step=0.3)
    with pytest.raises(ValueError):
        audit.GridSpec(degree_step=0.5)
    with pytest.raises(ValueError):
        audit.GridSpec(lambda_values=(1.0,))
    assert audit.GridSpec().points == 1001


def test_claim_ids_unique_and_loadable():
    claims = audit.load_claims()
    assert len({c.id for c in claims}) == len(claims)


def test_unknown_claim_kind(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"claims": [{"id": "x", "statement": "", "source": "", "scope": "global", "kind": "magic"}]}))
    with pytest.raises(ValueError):
        audit.load_claims(p)


def test_evaluator_rejects_arbitrary_code(tmp_path):
    p = tmp_path / "c.json"
    spec = {"id": "x", "statement": "", "source": "", "scope": "global", "kind": "identity",
            "lhs": "__import__('os').getcwd()", "rhs": "d"}
    p.write_text(json.dumps({"claims": [spec]}))
    with pytest.raises(Exception):
        audit.audit_pointwise(COARSE, claims=audit.load_claims(p))


def test_expected_verdicts_verbatim(verbatim):
    fails = {c.id for c in verbatim.claims if c.verdict == audit.FAILS}
    assert fails == {"Prop1.2", "Prop1.3", "Prop3.int", "Prop3.int-strict", "P3.2", "P3.4", "P3.5", "STAR"}
    for cid in ("Prop1.2", "Prop1.3", "Prop3.int"):
        assert verbatim.claim(cid).restricted.verdict == audit.HOLDS


def test_symmetric_restores_identities(symmetric):
    for cid in ("P3.1", "P3.2", "P3.3", "P3.4", "P3.5", "STAR"):
        assert symmetric.claim(cid).verdict == audit.HOLDS


def test_counterexamples_replay(verbatim):
    """Every recorded counterexample must reproduce through an independent evaluation."""
    claims = {c.id: c for c in audit.load_claims()}
    replayed = 0
    for res in verbatim.claims:
        assert len(res.counterexamples) <= audit.COUNTEREXAMPLE_CAP
        for ce in res.counterexamples:
            assert audit.evaluate_claim_point(claims[res.id], NegationConfig(ce.lam), ce.degrees)
            replayed += 1
    assert replayed > 0


def test_identity_counterexamples_match_scalar_operators(verbatim):
    for ce in verbatim.claim("P3.2").counterexamples:
        cfg = NegationConfig(ce.lam)
        d = ce.degrees[0]
        assert ce.lhs == pytest.approx(scoi.int_neg(d, cfg))
        assert ce.rhs == pytest.approx(scoi.int_neg(1 - d, cfg))


def test_report_serialises(verbatim):
    data = json.loads(verbatim.to_json())
    assert {c["id"] for c in data["claims"]} >= {"P3.2", "STAR"}
    assert "P3.2" in verbatim.to_text()


def test_set_algebra_small_sample():
    rep = audit.audit_set_algebra(150, 8, NegationConfig(0.8), seed=3)
    fails = {c.id for c in rep.claims if c.verdict == audit.FAILS}
    assert {"P3.2", "P3.4", "P3.5"} <= fails
    for law in ("P1.1", "P1.2", "P1.3", "P1.4", "P1.5", "P1.6", "P3.1", "P3.3", "P3.6", "P3.7"):
        assert rep.claim(law).verdict == audit.HOLDS


def test_set_algebra_validation():
    with pytest.raises(ValueError):
        audit.audit_set_algebra(0)


def test_classify_opposite():
    c = audit.classify_negation("opposite", 0.3)
    assert c.is_strict and c.is_strong
    assert c.equilibrium_intervals == [(0.5, 0.5)]


@pytest.mark.parametrize("lam", [0.2, 0.8])
def test_classify_intermediary(lam):
    c = audit.classify_negation("intermediary", lam)
    assert not c.n1.holds and not c.is_strict and not c.is_strong
    assert sorted(c.n1.witness.values()) == pytest.approx([min(lam, 1 - lam), max(lam, 1 - lam)])
    assert c.has_equilibrium(0.5)
    lo, hi = min(lam, 1 - lam), max(lam, 1 - lam)
    assert c.equilibrium_intervals[0] == pytest.approx((lo, hi))


def test_classify_unknown():
    with pytest.raises(ValueError):
        audit.classify_negation("inverse", 0.5)


def test_monotone_counterexample_replays_by_hand(verbatim):
    ce = verbatim.claim("Prop3.int").counterexamples[0]
    x, y = ce.degrees
    cfg = NegationConfig(ce.lam)
    assert x < y and scoi.int_neg(y, cfg) > scoi.int_neg(x, cfg)
    assert np.isfinite(ce.lhs)
