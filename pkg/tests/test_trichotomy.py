import pytest
from hypothesis import given
from hypothesis import strategies as st

from trineg.trichotomy import ConceptTriple, contradictory, integers_example, intermediary, partition, verify_star_identity


def test_integers_example():
    t = integers_example(5)
    assert intermediary(t) == {0}
    assert partition(t)["positive"] == [1, 2, 3, 4, 5]


def test_empty_intermediary_allowed():
    t = ConceptTriple({1, 2}, {1}, {2})
    assert intermediary(t) == frozenset()
    assert verify_star_identity(t)


def test_validation():
    with pytest.raises(ValueError, match="overlap"):
        ConceptTriple({1, 2}, {1}, {1})
    with pytest.raises(ValueError, match="outside"):
        ConceptTriple({1}, {1, 9}, set())
    with pytest.raises(ValueError):
        contradictory({1}, {2})


def test_json_round_trip():
    t = ConceptTriple({"a", "b", "c"}, {"a"}, {"c"})
    assert ConceptTriple.from_json(t.to_json()) == t


@given(st.lists(st.sampled_from("pon"), max_size=30))
def test_star_identity(labels):
    u = set(range(len(labels)))
    t = ConceptTriple(u, {i for i, x in enumerate(labels) if x == "p"}, {i for i, x in enumerate(labels) if x == "o"})
    check = verify_star_identity(t)
    assert check.holds and check.lhs == {i for i, x in enumerate(labels) if x == "n"}
