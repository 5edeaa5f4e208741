"""Membership degrees, the three negations, and fuzzy sets over finite universes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Literal, Mapping

import numpy as np

from . import _kernels

Variant = Literal["verbatim", "symmetric"]
NegationKind = Literal["contradictory", "opposite", "intermediary"]

VARIANTS = ("verbatim", "symmetric")
NEGATION_KINDS = ("contradictory", "opposite", "intermediary")


class UniverseMismatch(ValueError):
    """Two fuzzy sets were combined over different universes."""


def check_degree(d: float) -> float:
    d = float(d)
    if not 0.0 <= d <= 1.0:
        raise ValueError(f"membership degree must lie in [0, 1], got {d!r}")
    return d


def check_lambda(lam: float) -> float:
    lam = float(lam)
    if not 0.0 < lam < 1.0:
        raise ValueError(f"lambda must lie in the open interval (0, 1), got {lam!r}")
    return lam


@dataclass(frozen=True)
class NegationConfig:
    """Threshold ``lam`` plus the formula variant used for the intermediary negation.

    ``verbatim`` evaluates the five piecewise cases with no mirroring.
    ``symmetric`` evaluates every degree below 1/2 at its mirror ``1 - d``,
    which forces ``int_neg(d) == int_neg(1 - d)``.
    """

    lam: float = 0.5
    variant: Variant = "verbatim"

    def __post_init__(self):
        object.__setattr__(self, "lam", check_lambda(self.lam))
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")

    @property
    def symmetric(self) -> bool:
        return self.variant == "symmetric"


DEFAULT_CONFIG = NegationConfig()


def opp_neg(d: float) -> float:
    return 1.0 - check_degree(d)


def int_neg(d: float, cfg: NegationConfig = DEFAULT_CONFIG) -> float:
    """Intermediary negation of a single degree.

    Cases are tried in a fixed order (high band, low band for ``lam >= 1/2``,
    then low band, high band for ``lam <= 1/2``); anything left over is the
    identity on the middle band.
    """
    d = check_degree(d)
    if cfg.symmetric and d < 0.5:
        d = 1.0 - d
    return _kernels._int_neg_verbatim_py(d, cfg.lam)


def con_neg(d: float, cfg: NegationConfig = DEFAULT_CONFIG) -> float:
    return max(opp_neg(d), int_neg(d, cfg))


def negate(d: float, kind: NegationKind, cfg: NegationConfig = DEFAULT_CONFIG) -> float:
    if kind == "opposite":
        return opp_neg(d)
    if kind == "intermediary":
        return int_neg(d, cfg)
    if kind == "contradictory":
        return con_neg(d, cfg)
    raise ValueError(f"unknown negation kind {kind!r}")


# vectorised forms used by the audits; same arithmetic as the scalar path
def opp_neg_array(d: np.ndarray) -> np.ndarray:
    return 1.0 - np.asarray(d, dtype=np.float64)


def int_neg_array(d: np.ndarray, cfg: NegationConfig = DEFAULT_CONFIG) -> np.ndarray:
    return _kernels.int_neg_array(np.asarray(d, dtype=np.float64), cfg.lam, cfg.symmetric)


def con_neg_array(d: np.ndarray, cfg: NegationConfig = DEFAULT_CONFIG) -> np.ndarray:
    return np.maximum(opp_neg_array(d), int_neg_array(d, cfg))


def negate_array(d: np.ndarray, kind: NegationKind, cfg: NegationConfig = DEFAULT_CONFIG) -> np.ndarray:
    if kind == "opposite":
        return opp_neg_array(d)
    if kind == "intermediary":
        return int_neg_array(d, cfg)
    if kind == "contradictory":
        return con_neg_array(d, cfg)
    raise ValueError(f"unknown negation kind {kind!r}")


@dataclass(frozen=True, eq=False)
class FuzzySet:
    """A total membership function over an ordered finite universe.

    Degrees live in a read-only float64 array aligned with ``universe``.
    ``kind`` is derived from the values: ``clear`` when every degree is 0 or 1.
    """

    universe: tuple[str, ...]
    degrees: np.ndarray = field(repr=False)

    def __post_init__(self):
        universe = tuple(str(u) for u in self.universe)
        if len(set(universe)) != len(universe):
            raise ValueError("universe elements must be distinct")
        degrees = np.array(self.degrees, dtype=np.float64).reshape(-1)
        if degrees.shape[0] != len(universe):
            raise ValueError(f"expected {len(universe)} degrees, got {degrees.shape[0]}")
        if np.any(~np.isfinite(degrees)) or np.any(degrees < 0.0) or np.any(degrees > 1.0):
            bad = [u for u, d in zip(universe, degrees) if not 0.0 <= d <= 1.0]
            raise ValueError(f"membership degrees outside [0, 1] for {bad}")
        degrees.setflags(write=False)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def from_mapping(cls, membership: Mapping[str, float], universe: Iterable[str] | None = None) -> "FuzzySet":
        if universe is None:
            universe = list(membership)
        universe = [str(u) for u in universe]
        keys = {str(k) for k in membership}
        if keys != set(universe):
            missing = sorted(set(universe) - keys)
            extra = sorted(keys - set(universe))
            raise ValueError(f"membership must cover the universe exactly (missing {missing}, extra {extra})")
        lookup = {str(k): v for k, v in membership.items()}
        return cls(tuple(universe), [lookup[u] for u in universe])

    @classmethod
    def constant(cls, universe: Iterable[str], value: float) -> "FuzzySet":
        universe = tuple(universe)
        return cls(universe, np.full(len(universe), check_degree(value)))

    @property
    def kind(self) -> str:
        return "clear" if bool(np.all((self.degrees == 0.0) | (self.degrees == 1.0))) else "fuzzy"

    @property
    def membership(self) -> dict[str, float]:
        return dict(zip(self.universe, self.degrees.tolist()))

    def __getitem__(self, element: str) -> float:
        return float(self.degrees[self.universe.index(str(element))])

    def __len__(self) -> int:
        return len(self.universe)

    def __repr__(self) -> str:
        body = ", ".join(f"{u}: {d:g}" for u, d in zip(self.universe, self.degrees))
        return f"FuzzySet({{{body}}}, kind={self.kind})"

    def to_dict(self) -> dict:
        return {"universe": list(self.universe), "membership": self.membership, "kind": self.kind}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: Mapping) -> "FuzzySet":
        s = cls.from_mapping(obj["membership"], obj.get("universe"))
        if "kind" in obj and obj["kind"] != s.kind:
            raise ValueError(f"declared kind {obj['kind']!r} does not match the degrees ({s.kind})")
        return s

    @classmethod
    def from_json(cls, text: str) -> "FuzzySet":
        return cls.from_dict(json.loads(text))


def _same_universe(a: FuzzySet, b: FuzzySet) -> None:
    if a.universe != b.universe:
        only_a = sorted(set(a.universe) - set(b.universe))
        only_b = sorted(set(b.universe) - set(a.universe))
        if not only_a and not only_b:
            raise UniverseMismatch("universes hold the same elements in a different order")
        raise UniverseMismatch(f"universes differ: only in first {only_a}, only in second {only_b}")


def lift_negation(s: FuzzySet, kind: NegationKind, cfg: NegationConfig = DEFAULT_CONFIG) -> FuzzySet:
    """Apply a negation pointwise.

    For a clear set the intermediary negation is 1/2 everywhere whatever
    ``cfg.lam`` says, and the contradictory one is ``max(1 - d, 1/2)``.
    """
    d = s.degrees
    if s.kind == "clear" and kind != "opposite":
        half = np.full(d.shape, 0.5)
        out = half if kind == "intermediary" else np.maximum(1.0 - d, half)
    else:
        out = negate_array(d, kind, cfg)
    return FuzzySet(s.universe, out)


def union(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    _same_universe(a, b)
    return FuzzySet(a.universe, np.maximum(a.degrees, b.degrees))


def intersect(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    _same_universe(a, b)
    return FuzzySet(a.universe, np.minimum(a.degrees, b.degrees))


def includes(a: FuzzySet, b: FuzzySet, tol: float = 0.0) -> bool:
    """True when ``a`` is contained in ``b``, i.e. a(x) <= b(x) + tol everywhere."""
    _same_universe(a, b)
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return bool(np.all(a.degrees <= b.degrees + tol))


def equals(a: FuzzySet, b: FuzzySet, tol: float = 0.0) -> bool:
    _same_universe(a, b)
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return bool(np.all(np.abs(a.degrees - b.degrees) <= tol))
