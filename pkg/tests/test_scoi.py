from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from trineg import scoi
from trineg.scoi import FuzzySet, NegationConfig, UniverseMismatch

degrees = st.floats(0.0, 1.0, allow_nan=False)
lambdas = st.floats(0.01, 0.99, allow_nan=False)


def oracle_int(d, lam):
    """Exact rational evaluation of the piecewise intermediary formula."""
    d, lam = Fraction(d), Fraction(lam)
    half = Fraction(1, 2)
    if lam >= half:
        k = (2 * lam - 1) / (1 - lam)
        if lam < d <= 1:
            return lam - k * (d - lam)
        if 0 <= d <= 1 - lam:
            return lam - k * d
    if lam <= half:
        k = (1 - 2 * lam) / lam
        if 0 <= d <= lam:
            return (1 - lam) - k * d
        if 1 - lam < d <= 1:
            return (1 - lam) - k * (d + lam - 1)
    return d


@pytest.mark.parametrize(
    "d, lam, expected",
    [(0.9, 0.8, 0.5), (0.5, 0.8, 0.5), (0.1, 0.8, 0.5), (0.95, 0.8, 0.35), (0.9, 0.5, 0.5)],
)
def test_int_neg_hand_values(d, lam, expected):
    assert scoi.int_neg(d, NegationConfig(lam)) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("d, lam, expected", [(0.9, 0.8, 0.5), (0.5, 0.3, 0.5), (0.05, 0.8, 0.95)])
def test_con_neg_hand_values(d, lam, expected):
    assert scoi.con_neg(d, NegationConfig(lam)) == pytest.approx(expected, abs=1e-12)


def test_opp_neg_values():
    assert scoi.opp_neg(0.0) == 1.0
    assert scoi.opp_neg(0.5) == 0.5
    assert scoi.opp_neg(0.435) == pytest.approx(0.565, abs=1e-12)


@given(degrees, lambdas)
def test_int_neg_matches_rational_oracle(d, lam):
    assert scoi.int_neg(d, NegationConfig(lam)) == pytest.approx(float(oracle_int(d, lam)), abs=1e-9)


@given(degrees, lambdas, st.sampled_from(scoi.VARIANTS))
def test_outputs_in_unit_interval(d, lam, variant):
    cfg = NegationConfig(lam, variant)
    for kind in scoi.NEGATION_KINDS:
        assert 0.0 <= scoi.negate(d, kind, cfg) <= 1.0


@given(degrees)
def test_opposite_involution_exact(d):
    assert abs(scoi.opp_neg(scoi.opp_neg(d)) - d) <= 1e-15


@given(lambdas, st.sampled_from(scoi.VARIANTS))
def test_half_is_fixed(lam, variant):
    cfg = NegationConfig(lam, variant)
    assert scoi.opp_neg(0.5) == scoi.int_neg(0.5, cfg) == scoi.con_neg(0.5, cfg) == 0.5


@given(degrees, lambdas)
def test_band_containment_and_mid_identity(d, lam):
    cfg = NegationConfig(lam)
    lo, hi = min(lam, 1 - lam), max(lam, 1 - lam)
    v = scoi.int_neg(d, cfg)
    if lo <= d <= hi:
        if not (lam >= 0.5 and d > lam) and not (lam <= 0.5 and d > 1 - lam):
            assert v == pytest.approx(d, abs=1e-12)
    else:
        assert lo - 1e-12 <= v <= hi + 1e-12


@given(degrees, degrees, lambdas)
def test_strictly_decreasing_on_outer_bands(x, y, lam):
    # gaps below float resolution collapse to equal outputs
    if abs(lam - 0.5) < 1e-6 or abs(x - y) < 1e-9:
        return
    x, y = sorted((x, y))
    lo, hi = min(lam, 1 - lam), max(lam, 1 - lam)
    cfg = NegationConfig(lam)
    if y <= lo or x > hi:
        assert scoi.int_neg(y, cfg) < scoi.int_neg(x, cfg)


@pytest.mark.parametrize("lam", [0.1, 0.3, 0.5, 0.7, 0.9])
def test_continuity_at_band_edges(lam):
    cfg = NegationConfig(lam)
    for edge in (lam, 1 - lam):
        left, right = scoi.int_neg(edge - 1e-12, cfg), scoi.int_neg(min(edge + 1e-12, 1.0), cfg)
        assert left == pytest.approx(right, abs=1e-9)


@given(degrees, lambdas)
def test_symmetric_variant_mirrors(d, lam):
    cfg = NegationConfig(lam, "symmetric")
    assert scoi.int_neg(d, cfg) == pytest.approx(scoi.int_neg(1 - d, cfg), abs=1e-12)


@given(degrees, lambdas)
def test_sandwich_and_dominance(d, lam):
    cfg = NegationConfig(lam)
    i, o, c = scoi.int_neg(d, cfg), scoi.opp_neg(d), scoi.con_neg(d, cfg)
    tol = 1e-12
    assert (d + tol >= i >= o - tol) or (o + tol >= i >= d - tol)
    if d <= 0.5:
        assert c == o
    if d >= 0.5:
        assert c == i


@pytest.mark.parametrize("bad", [-0.1, 1.1, float("nan")])
def test_degree_validation(bad):
    with pytest.raises(ValueError):
        scoi.opp_neg(bad)


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.2, 1.5])
def test_lambda_validation(bad):
    with pytest.raises(ValueError):
        NegationConfig(bad)


def test_variant_validation():
    with pytest.raises(ValueError):
        NegationConfig(0.5, "mirror")


def test_array_forms_match_scalar():
    d = np.linspace(0, 1, 501)
    for variant in scoi.VARIANTS:
        cfg = NegationConfig(0.7, variant)
        for kind in scoi.NEGATION_KINDS:
            arr = scoi.negate_array(d, kind, cfg)
            assert np.array_equal(arr, [scoi.negate(x, kind, cfg) for x in d])


# fuzzy sets

def test_fuzzy_set_kind_and_validation():
    assert FuzzySet.from_mapping({"x": 1, "y": 0}).kind == "clear"
    assert FuzzySet.from_mapping({"x": 0.3}).kind == "fuzzy"
    with pytest.raises(ValueError):
        FuzzySet.from_mapping({"x": 1.2})
    with pytest.raises(ValueError):
        FuzzySet.from_mapping({"x": 0.2}, universe=["x", "y"])
    with pytest.raises(ValueError):
        FuzzySet(("a", "a"), [0.1, 0.2])


def test_fuzzy_set_is_immutable():
    s = FuzzySet.from_mapping({"x": 0.3})
    with pytest.raises(ValueError):
        s.degrees[0] = 0.9


def test_clear_set_rule():
    s = FuzzySet.from_mapping({"x": 1, "y": 0})
    cfg = NegationConfig(0.8)
    assert scoi.lift_negation(s, "intermediary", cfg).membership == {"x": 0.5, "y": 0.5}
    assert scoi.lift_negation(s, "opposite", cfg).membership == {"x": 0.0, "y": 1.0}
    assert scoi.lift_negation(s, "contradictory", cfg).membership == {"x": 0.5, "y": 1.0}


def test_fuzzy_lift_contradictory():
    s = FuzzySet.from_mapping({"x": 0.9})
    assert scoi.lift_negation(s, "contradictory", NegationConfig(0.8))["x"] == pytest.approx(0.5)


def test_union_intersect_and_inclusion():
    a = FuzzySet.from_mapping({"x": 0.3})
    b = FuzzySet.from_mapping({"x": 0.7})
    assert scoi.union(a, b)["x"] == 0.7
    assert scoi.intersect(a, b)["x"] == 0.3
    assert scoi.includes(a, b)
    assert not scoi.includes(b, a)
    assert scoi.equals(a, a)
    assert scoi.includes(b, a, tol=0.5)


def test_universe_mismatch_names_elements():
    a = FuzzySet.from_mapping({"x": 0.3, "y": 0.1})
    b = FuzzySet.from_mapping({"x": 0.3, "z": 0.1})
    with pytest.raises(UniverseMismatch, match="'y'.*'z'"):
        scoi.union(a, b)
    with pytest.raises(UniverseMismatch, match="order"):
        scoi.equals(a, FuzzySet.from_mapping({"y": 0.1, "x": 0.3}))


def test_json_round_trip():
    s = FuzzySet.from_mapping({"b": 0.25, "a": 1.0})
    again = FuzzySet.from_json(s.to_json())
    assert again.universe == s.universe and np.array_equal(again.degrees, s.degrees)
    bad = s.to_dict() | {"kind": "clear"}
    with pytest.raises(ValueError):
        FuzzySet.from_dict(bad)


@given(st.lists(degrees, min_size=1, max_size=8))
def test_opposite_antitone_on_sets(ds):
    a = FuzzySet(tuple(f"e{i}" for i in range(len(ds))), ds)
    b = scoi.union(a, FuzzySet.constant(a.universe, 0.4))
    assert scoi.includes(scoi.lift_negation(b, "opposite"), scoi.lift_negation(a, "opposite"))
