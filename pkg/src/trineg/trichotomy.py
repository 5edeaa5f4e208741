"""Crisp concepts: a universe partitioned around a concept and its opposite."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping


def contradictory(universe: Iterable[Hashable], s: Iterable[Hashable]) -> frozenset:
    universe, s = frozenset(universe), frozenset(s)
    extra = s - universe
    if extra:
        raise ValueError(f"subset has elements outside the universe: {sorted(map(str, extra))}")
    return universe - s


@dataclass(frozen=True)
class ConceptTriple:
    """The opposite set is supplied by the caller; it cannot be inferred from extensions."""

    universe: frozenset
    positive: frozenset
    opposite: frozenset

    def __post_init__(self):
        for name in ("universe", "positive", "opposite"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        for name in ("positive", "opposite"):
            extra = getattr(self, name) - self.universe
            if extra:
                raise ValueError(f"{name} has elements outside the universe: {sorted(map(str, extra))}")
        both = self.positive & self.opposite
        if both:
            raise ValueError(f"positive and opposite overlap on {sorted(map(str, both))}")

    def to_dict(self) -> dict:
        return {k: _sorted(getattr(self, k)) for k in ("universe", "positive", "opposite")}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: Mapping) -> "ConceptTriple":
        return cls(frozenset(obj["universe"]), frozenset(obj["positive"]), frozenset(obj["opposite"]))

    @classmethod
    def from_json(cls, text: str) -> "ConceptTriple":
        return cls.from_dict(json.loads(text))


def intermediary(t: ConceptTriple) -> frozenset:
    """Everything neither in the concept nor in its opposite; may be empty."""
    return t.universe - (t.positive | t.opposite)


@dataclass(frozen=True)
class StarCheck:
    holds: bool
    lhs: frozenset
    rhs: frozenset

    def __bool__(self) -> bool:
        return self.holds


def verify_star_identity(t: ConceptTriple) -> StarCheck:
    """Compare the intermediary with the meet of the two contradictories."""
    lhs = intermediary(t)
    rhs = contradictory(t.universe, t.positive) & contradictory(t.universe, t.opposite)
    return StarCheck(lhs == rhs, lhs, rhs)


def partition(t: ConceptTriple) -> dict[str, list]:
    return {
        "positive": _sorted(t.positive),
        "opposite": _sorted(t.opposite),
        "intermediary": _sorted(intermediary(t)),
    }


def integers_example(bound: int = 10) -> ConceptTriple:
    """Integers in [-bound, bound] split into positives and negatives."""
    universe = frozenset(range(-bound, bound + 1))
    return ConceptTriple(universe, frozenset(x for x in universe if x > 0), frozenset(x for x in universe if x < 0))


def _sorted(xs) -> list:
    try:
        return sorted(xs)
    except TypeError:
        return sorted(xs, key=str)
