"""Grid and sample audits of the negation operators, and fuzzy-negation classification.

Pointwise claims come from ``data/claims.json``.  Each claim is a small
expression over the grid degree ``d``; see ``_Evaluator`` for the names
an expression may use.
"""

from __future__ import annotations

import ast
import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Callable, Mapping, Sequence

import numpy as np

from . import scoi
from .scoi import FuzzySet, NegationConfig

COUNTEREXAMPLE_CAP = 20
DEFAULT_LAMBDAS = (0.1, 0.25, 0.5, 0.75, 0.8, 0.9)

HOLDS = "holds-on-grid"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class GridSpec:
    lambda_values: tuple[float, ...] = DEFAULT_LAMBDAS
    degree_step: float = 1e-3
    tol: float = 1e-9

    def __post_init__(self):
        object.__setattr__(self, "lambda_values", tuple(scoi.check_lambda(x) for x in self.lambda_values))
        if not self.degree_step > 0:
            raise ValueError("degree_step must be positive")
        intervals = 1.0 / self.degree_step
        if abs(intervals - round(intervals)) > 1e-6:
            raise ValueError(f"degree_step {self.degree_step} does not divide [0, 1] evenly")
        if round(intervals) + 1 < 10:
            raise ValueError("the grid needs at least 10 points")
        if self.tol < 0:
            raise ValueError("tol must be non-negative")

    @property
    def points(self) -> int:
        return int(round(1.0 / self.degree_step)) + 1

    def degrees(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.points)

    def to_dict(self) -> dict:
        return {"lambda_values": list(self.lambda_values), "degree_step": self.degree_step, "tol": self.tol}


@dataclass(frozen=True)
class PropertyClaim:
    id: str
    statement: str
    source: str
    scope: str  # global | band-restricted | reconstructed
    spec: Mapping[str, Any] = field(repr=False, default_factory=dict)
    note: str = ""


@dataclass(frozen=True)
class Counterexample:
    lam: float
    degrees: tuple[float, ...]
    lhs: float
    rhs: float
    context: Mapping[str, Any] | None = None

    def to_dict(self) -> dict:
        out = {"lambda": self.lam, "degrees": list(self.degrees), "lhs": self.lhs, "rhs": self.rhs}
        if self.context:
            out["context"] = dict(self.context)
        return out


@dataclass
class Finding:
    verdict: str
    counterexamples: list[Counterexample] = field(default_factory=list)
    violations: int = 0

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "violations": self.violations,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }


@dataclass
class ClaimResult:
    id: str
    scope: str
    statement: str
    source: str
    result: Finding
    restricted: Finding | None = None
    note: str = ""

    @property
    def verdict(self) -> str:
        return self.result.verdict

    @property
    def counterexamples(self) -> list[Counterexample]:
        return self.result.counterexamples

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "scope": self.scope,
            "statement": self.statement,
            "source": self.source,
            "verdict": self.result.verdict,
            "violations": self.result.violations,
            "counterexamples": [c.to_dict() for c in self.result.counterexamples],
            "note": self.note,
        }
        if self.restricted is not None:
            out["restricted"] = self.restricted.to_dict()
        return out


@dataclass
class AuditReport:
    claims: list[ClaimResult]
    config: dict

    def __post_init__(self):
        ids = [c.id for c in self.claims]
        if len(ids) != len(set(ids)):
            raise ValueError("claim ids must be unique within a report")

    def claim(self, claim_id: str) -> ClaimResult:
        for c in self.claims:
            if c.id == claim_id:
                return c
        raise KeyError(claim_id)

    def to_dict(self) -> dict:
        return {"claims": [c.to_dict() for c in self.claims], "config": self.config}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        rows = [("claim", "scope", "verdict", "restricted", "violations", "first counterexample")]
        for c in self.claims:
            first = ""
            if c.counterexamples:
                ce = c.counterexamples[0]
                degs = ", ".join(f"{x:.6g}" for x in ce.degrees)
                first = f"lambda={ce.lam:g} d=({degs}) lhs={ce.lhs:.6g} rhs={ce.rhs:.6g}"
            restricted = c.restricted.verdict if c.restricted else "-"
            rows.append((c.id, c.scope, c.verdict, restricted, str(c.result.violations), first))
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        lines = ["  ".join(r[i].ljust(widths[i]) for i in range(5)) + "  " + r[5] for r in rows]
        return "\n".join(line.rstrip() for line in lines)


# ---------------------------------------------------------------------------
# claim expressions

class _Evaluator:
    """Evaluate a whitelisted arithmetic expression over numpy arrays."""

    _BINOPS = {
        ast.Add: np.add,
        ast.Sub: np.subtract,
        ast.Mult: np.multiply,
        ast.Div: np.divide,
        ast.BitAnd: np.logical_and,
        ast.BitOr: np.logical_or,
    }

    def __init__(self, names: Mapping[str, Any]):
        self.names = names

    def __call__(self, text: str):
        return self._eval(ast.parse(text, mode="eval").body)

    def _eval(self, node):
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name):
            if node.id not in self.names:
                raise ValueError(f"unknown name {node.id!r} in claim expression")
            return self.names[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in self._BINOPS:
            return self._BINOPS[type(node.op)](self._eval(node.left), self._eval(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return np.negative(self._eval(node.operand))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Invert):
            return np.logical_not(self._eval(node.operand))
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
            fn = self._eval(node.func)
            if not callable(fn):
                raise ValueError(f"{node.func.id!r} is not a function")
            return fn(*[self._eval(a) for a in node.args])
        raise ValueError(f"unsupported syntax in claim expression: {ast.dump(node)}")


def _names(cfg: NegationConfig, tol: float) -> dict[str, Any]:
    lam = cfg.lam
    lo, hi = min(lam, 1.0 - lam), max(lam, 1.0 - lam)
    return {
        "lam": lam,
        "lo": lo,
        "hi": hi,
        "opp": scoi.opp_neg_array,
        "int": lambda x: scoi.int_neg_array(np.asarray(x, dtype=np.float64), cfg),
        "con": lambda x: scoi.con_neg_array(np.asarray(x, dtype=np.float64), cfg),
        "min": lambda *xs: np.minimum.reduce(np.broadcast_arrays(*xs)),
        "max": lambda *xs: np.maximum.reduce(np.broadcast_arrays(*xs)),
        "abs": np.abs,
        "clamp": lambda x, a, b: np.minimum(np.maximum(x, a), b),
        "eq": lambda a, b: np.abs(np.subtract(a, b)) <= tol,
        "ne": lambda a, b: np.abs(np.subtract(a, b)) > tol,
        "lt": lambda a, b: np.subtract(b, a) > tol,
        "gt": lambda a, b: np.subtract(a, b) > tol,
        "le": lambda a, b: np.subtract(a, b) <= tol,
        "ge": lambda a, b: np.subtract(b, a) <= tol,
        "outer": lambda x: (np.subtract(lo, x) > tol) | (np.subtract(x, hi) > tol),
    }


def load_claims(path=None) -> list[PropertyClaim]:
    if path is None:
        text = (resources.files("trineg") / "data" / "claims.json").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    claims = []
    for obj in data["claims"]:
        if obj["kind"] not in ("identity", "iff", "monotone"):
            raise ValueError(f"claim {obj['id']}: unknown kind {obj['kind']!r}")
        claims.append(PropertyClaim(obj["id"], obj["statement"], obj["source"], obj["scope"], obj, obj.get("note", "")))
    return claims


def evaluate_claim_point(claim: PropertyClaim, cfg: NegationConfig, degrees: Sequence[float], tol: float = 1e-9) -> bool:
    """True when the claim is violated at this point (used to replay counterexamples)."""
    ev = _Evaluator({**_names(cfg, tol), "d": np.asarray([degrees[0]], dtype=np.float64)})
    s = claim.spec
    if s["kind"] == "monotone":
        x, y = degrees
        f = _Evaluator({**_names(cfg, tol), "d": np.asarray([x, y], dtype=np.float64)})(s["f"])
        return bool(f[1] - f[0] > tol) if not s.get("strict") else bool(f[0] - f[1] <= tol)
    if s["kind"] == "identity":
        return bool(np.abs(np.asarray(ev(s["lhs"]) - ev(s["rhs"]))).max() > tol)
    return bool(np.any(np.asarray(ev(s["lhs"]), bool) != np.asarray(ev(s["rhs"]), bool)))


class _Collector:
    def __init__(self):
        self.items: list[Counterexample] = []
        self.count = 0

    def add(self, items: list[Counterexample]):
        self.count += len(items)
        self.items.extend(items)

    def finding(self, applicable: bool = True) -> Finding:
        if not applicable:
            return Finding(NOT_APPLICABLE)
        ordered = sorted(self.items, key=lambda c: (c.lam, c.degrees))[:COUNTEREXAMPLE_CAP]
        return Finding(FAILS if self.count else HOLDS, ordered, self.count)


def _pointwise(s, ev, lam, d, mask, tol) -> list[Counterexample]:
    if s["kind"] == "identity":
        lhs = np.broadcast_to(np.asarray(ev(s["lhs"]), dtype=np.float64), d.shape)
        rhs = np.broadcast_to(np.asarray(ev(s["rhs"]), dtype=np.float64), d.shape)
        bad = mask & (np.abs(lhs - rhs) > tol)
    else:
        lhs = np.broadcast_to(np.asarray(ev(s["lhs"]), dtype=bool), d.shape).astype(np.float64)
        rhs = np.broadcast_to(np.asarray(ev(s["rhs"]), dtype=bool), d.shape).astype(np.float64)
        bad = mask & (lhs != rhs)
    idx = np.flatnonzero(bad)
    return [Counterexample(lam, (float(d[i]),), float(lhs[i]), float(rhs[i])) for i in idx]


def _monotone(s, ev, lam, d, masks, tol) -> list[Counterexample]:
    f = np.asarray(ev(s["f"]), dtype=np.float64)
    out = []
    for mask in masks:
        pair = mask[:-1] & mask[1:]
        rise = f[1:] - f[:-1]
        # adjacent pairs suffice: both orders are transitive along the grid
        bad = pair & ((rise >= -tol) if s.get("strict") else (rise > tol))
        for i in np.flatnonzero(bad):
            out.append(Counterexample(lam, (float(d[i]), float(d[i + 1])), float(f[i + 1]), float(f[i])))
    return out


def audit_pointwise(
    grid: GridSpec = GridSpec(),
    cfg: NegationConfig = scoi.DEFAULT_CONFIG,
    claims: Sequence[PropertyClaim] | None = None,
) -> AuditReport:
    """Check every catalogued claim at every (lambda, d) grid point.

    ``cfg`` supplies the variant; lambdas come from ``grid`` (or ``cfg.lam``
    when the grid lists none).
    """
    claims = load_claims() if claims is None else list(claims)
    lambdas = grid.lambda_values or (cfg.lam,)
    d = grid.degrees()
    results = []
    for claim in claims:
        s = claim.spec
        whole, restricted = _Collector(), _Collector()
        applicable = False
        has_restriction = "restrict" in s or "bands" in s
        for lam in lambdas:
            lcfg = NegationConfig(lam, cfg.variant)
            ev = _Evaluator({**_names(lcfg, grid.tol), "d": d})
            if "applies" in s and not bool(np.all(ev(s["applies"]))):
                continue
            applicable = True
            everywhere = np.ones(d.shape, dtype=bool)
            if s["kind"] == "monotone":
                whole.add(_monotone(s, ev, lam, d, [everywhere], grid.tol))
                if has_restriction:
                    masks = [np.broadcast_to(np.asarray(ev(b), dtype=bool), d.shape) for b in s["bands"]]
                    restricted.add(_monotone(s, ev, lam, d, masks, grid.tol))
            else:
                domain = np.broadcast_to(np.asarray(ev(s["domain"]), bool), d.shape) if "domain" in s else everywhere
                whole.add(_pointwise(s, ev, lam, d, domain, grid.tol))
                if has_restriction:
                    mask = domain & np.broadcast_to(np.asarray(ev(s["restrict"]), bool), d.shape)
                    restricted.add(_pointwise(s, ev, lam, d, mask, grid.tol))
        results.append(
            ClaimResult(
                claim.id,
                claim.scope,
                claim.statement,
                claim.source,
                whole.finding(applicable),
                restricted.finding(applicable) if has_restriction else None,
                claim.note,
            )
        )
    return AuditReport(results, {**grid.to_dict(), "variant": cfg.variant, "kind": "pointwise"})


# ---------------------------------------------------------------------------
# set algebra over random samples

_SETNEG = {"con": "contradictory", "opp": "opposite", "int": "intermediary"}


def _random_set(rng: np.random.Generator, universe: tuple[str, ...], cfg: NegationConfig) -> FuzzySet:
    # mostly uniform degrees, salted with band edges and endpoints
    d = rng.random(len(universe))
    special = np.array([0.0, 0.5, 1.0, cfg.lam, 1.0 - cfg.lam])
    pick = rng.random(len(universe)) < 0.15
    d[pick] = special[rng.integers(len(special), size=int(pick.sum()))]
    return FuzzySet(universe, d)


def _related(rng: np.random.Generator, a: FuzzySet, rel: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> FuzzySet:
    """Random B with rel(A(x), B(x)) at every x; falls back to B(x) = A(x), which every relation used here admits."""
    cand = rng.random((8, len(a)))
    ok = rel(np.broadcast_to(a.degrees, cand.shape), cand)
    first = np.where(ok.any(axis=0), ok.argmax(axis=0), -1)
    b = np.where(first >= 0, cand[np.maximum(first, 0), np.arange(len(a))], a.degrees)
    return FuzzySet(a.universe, b)


def audit_set_algebra(
    sample_count: int = 1000,
    universe_size: int = 16,
    cfg: NegationConfig = scoi.DEFAULT_CONFIG,
    seed: int = 0,
    tol: float = 1e-9,
) -> AuditReport:
    """Seeded random checks of the lattice laws and the negation set properties."""
    if sample_count < 1:
        raise ValueError("sample_count must be at least 1")
    if universe_size < 1:
        raise ValueError("universe_size must be at least 1")
    rng = np.random.default_rng(seed)
    universe = tuple(f"x{i}" for i in range(universe_size))
    empty = FuzzySet.constant(universe, 0.0)
    full = FuzzySet.constant(universe, 1.0)
    U, I = scoi.union, scoi.intersect
    iv = lambda x: scoi.int_neg_array(x, cfg)  # noqa: E731

    def neg(s, k):
        return scoi.lift_negation(s, _SETNEG[k], cfg)

    def sub(a, b):
        return scoi.includes(a, b, tol)

    # each law yields (lhs, rhs) set pairs that must be equal; exact laws use tol 0
    laws: list[tuple[str, str, str, Callable, bool]] = [
        ("P1.1", "Property 1 (1)", "idempotent: A u A = A, A n A = A",
         lambda a, b, c: [(U(a, a), a), (I(a, a), a)], True),
        ("P1.2", "Property 1 (2)", "commutative",
         lambda a, b, c: [(U(a, b), U(b, a)), (I(a, b), I(b, a))], True),
        ("P1.3", "Property 1 (3)", "associative",
         lambda a, b, c: [(U(U(a, b), c), U(a, U(b, c))), (I(I(a, b), c), I(a, I(b, c)))], True),
        ("P1.4", "Property 1 (4)", "absorption",
         lambda a, b, c: [(I(a, U(a, b)), a), (U(a, I(a, b)), a)], True),
        ("P1.5", "Property 1 (5)", "distributive",
         lambda a, b, c: [(U(a, I(b, c)), I(U(a, b), U(a, c))), (I(a, U(b, c)), U(I(a, b), I(a, c)))], True),
        ("P1.6", "Property 1 (6)", "0-1 laws",
         lambda a, b, c: [(U(a, empty), a), (I(a, empty), empty), (U(full, a), full), (I(full, a), a)], True),
        ("P3.1", "Property 3 (1)", "A opp opp = A", lambda a, b, c: [(neg(neg(a, "opp"), "opp"), a)], True),
        ("P3.2", "Property 3 (2)", "A int = (A opp) int",
         lambda a, b, c: [(neg(a, "int"), neg(neg(a, "opp"), "int"))], False),
        ("P3.3", "Property 3 (3)", "A con = A opp u A int",
         lambda a, b, c: [(neg(a, "con"), U(neg(a, "opp"), neg(a, "int")))], True),
        ("P3.4", "Property 3 (4)", "A int = A con n (A opp) con",
         lambda a, b, c: [(neg(a, "int"), I(neg(a, "con"), neg(neg(a, "opp"), "con")))], False),
        ("P3.5", "Property 3 (5)", "(A opp) con = A u A int",
         lambda a, b, c: [(neg(neg(a, "opp"), "con"), U(a, neg(a, "int")))], False),
        ("P3.6", "Property 3 (6)", "(A u B) opp = A opp n B opp",
         lambda a, b, c: [(neg(U(a, b), "opp"), I(neg(a, "opp"), neg(b, "opp")))], True),
        ("P3.7", "Property 3 (7)", "(A n B) opp = A opp u B opp",
         lambda a, b, c: [(neg(I(a, b), "opp"), U(neg(a, "opp"), neg(b, "opp")))], True),
    ]

    # iff claims: (left, right, pointwise relation making left true, pointwise relation making right true)
    iffs: list[tuple[str, str, str, Callable, Callable, Callable, Callable]] = [
        ("P2.1", "Property 2 (1)", "A c B iff B opp c A opp",
         lambda a, b: sub(a, b), lambda a, b: sub(neg(b, "opp"), neg(a, "opp")),
         lambda x, y: x <= y, lambda x, y: 1 - y <= 1 - x),
        ("P2.2", "Property 2 (2)", "A c B iff B int c A int",
         lambda a, b: sub(a, b), lambda a, b: sub(neg(b, "int"), neg(a, "int")),
         lambda x, y: x <= y, lambda x, y: iv(y) <= iv(x)),
        ("P2.3", "Property 2 (3)", "A int c B int iff B int int c A int int",
         lambda a, b: sub(neg(a, "int"), neg(b, "int")),
         lambda a, b: sub(neg(neg(b, "int"), "int"), neg(neg(a, "int"), "int")),
         lambda x, y: iv(x) <= iv(y), lambda x, y: iv(iv(y)) <= iv(iv(x))),
        ("P2.4", "Property 2 (4)", "A c B opp iff B c A opp",
         lambda a, b: sub(a, neg(b, "opp")), lambda a, b: sub(b, neg(a, "opp")),
         lambda x, y: x <= 1 - y, lambda x, y: y <= 1 - x),
        ("P2.5", "Property 2 (5)", "A opp c B iff B opp c A",
         lambda a, b: sub(neg(a, "opp"), b), lambda a, b: sub(neg(b, "opp"), a),
         lambda x, y: 1 - x <= y, lambda x, y: 1 - y <= x),
    ]

    kinds = ("con", "int", "opp")
    excluded: list[tuple[str, str, str, Callable]] = []
    for k in kinds:
        excluded.append((f"P4.1[{k}]", "Property 4 (1)", f"A u A {k} != U", lambda a, k=k: (U(a, neg(a, k)), full)))
        excluded.append((f"P4.4[{k}]", "Property 4 (4)", f"A n A {k} != empty", lambda a, k=k: (I(a, neg(a, k)), empty)))
    for k1 in kinds:
        for k2 in kinds:
            if k1 < k2:
                excluded.append((f"P4.3[{k1},{k2}]", "Property 4 (3)", f"A {k1} u A {k2} != U",
                                 lambda a, k1=k1, k2=k2: (U(neg(a, k1), neg(a, k2)), full)))
                excluded.append((f"P4.6[{k1},{k2}]", "Property 4 (6)", f"A {k1} n A {k2} != empty",
                                 lambda a, k1=k1, k2=k2: (I(neg(a, k1), neg(a, k2)), empty)))

    law_hits = {x[0]: _Collector() for x in laws}
    iff_hits = {x[0]: _Collector() for x in iffs}
    ex_hits = {x[0]: _Collector() for x in excluded}
    fuzzy_samples = 0

    def ctx(i, **sets):
        return {"sample": i, **{k: v.degrees.tolist() for k, v in sets.items()}}

    for i in range(sample_count):
        a, b, c = (_random_set(rng, universe, cfg) for _ in range(3))
        for lid, _, _, fn, exact in laws:
            for lhs, rhs in fn(a, b, c):
                if not scoi.equals(lhs, rhs, 0.0 if exact else tol):
                    x = int(np.argmax(np.abs(lhs.degrees - rhs.degrees)))
                    law_hits[lid].add([Counterexample(
                        cfg.lam, (float(a.degrees[x]), float(b.degrees[x]), float(c.degrees[x])),
                        float(lhs.degrees[x]), float(rhs.degrees[x]), {**ctx(i, A=a, B=b, C=c), "element": universe[x]})])
                    break
        for lid, _, _, left, right, lrel, rrel in iffs:
            # a quarter of the pairs satisfy the left side by construction, a quarter the right
            mode = i % 4
            b2 = _related(rng, a, lrel) if mode == 0 else _related(rng, a, rrel) if mode == 1 else b
            l, r = left(a, b2), right(a, b2)
            if l != r:
                iff_hits[lid].add([Counterexample(cfg.lam, (float(a.degrees[0]), float(b2.degrees[0])),
                                                  float(l), float(r), ctx(i, A=a, B=b2))])
        if a.kind == "fuzzy":
            fuzzy_samples += 1
            for lid, _, _, fn in excluded:
                lhs, bound = fn(a)
                if scoi.equals(lhs, bound):
                    x = int(np.argmax(np.abs(lhs.degrees - 0.5)))
                    ex_hits[lid].add([Counterexample(cfg.lam, (float(a.degrees[x]),), float(lhs.degrees[x]),
                                                     float(bound.degrees[x]) + 1.0, ctx(i, A=a))])

    results = []
    for lid, src, stmt, _, exact in laws:
        results.append(ClaimResult(lid, "global", stmt, src, law_hits[lid].finding(),
                                   note="exact" if exact else f"compared with tol {tol:g}"))
    for lid, src, stmt, *_ in iffs:
        results.append(ClaimResult(lid, "global", stmt, src, iff_hits[lid].finding(),
                                   note="half the pairs are built so that one side holds; lhs and rhs are the two sides as 1/0"))
    for lid, src, stmt, _ in excluded:
        results.append(ClaimResult(lid, "global", stmt, src, ex_hits[lid].finding(fuzzy_samples > 0),
                                   note=f"checked on {fuzzy_samples} fuzzy samples"))
    config = {
        "kind": "set-algebra",
        "sample_count": sample_count,
        "universe_size": universe_size,
        "lambda": cfg.lam,
        "variant": cfg.variant,
        "seed": seed,
        "tol": tol,
    }
    return AuditReport(results, config)


# ---------------------------------------------------------------------------
# fuzzy-negation axioms

@dataclass
class AxiomVerdict:
    holds: bool
    witness: dict | None = None
    per_band: dict[str, bool] | None = None

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"verdict": "holds" if self.holds else "fails"}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.per_band is not None:
            out["per_band"] = self.per_band
        return out


@dataclass
class NegationClassification:
    which: str
    lam: float
    variant: str
    n1: AxiomVerdict
    n2: AxiomVerdict
    n3: AxiomVerdict
    n4: AxiomVerdict
    n5: AxiomVerdict
    equilibrium_points: list[float]
    equilibrium_intervals: list[tuple[float, float]]
    notes: list[str] = field(default_factory=list)

    @property
    def is_strict(self) -> bool:
        return self.n1.holds and self.n2.holds and self.n3.holds and self.n4.holds

    @property
    def is_strong(self) -> bool:
        return self.n1.holds and self.n2.holds and self.n5.holds

    def has_equilibrium(self, e: float, tol: float = 1e-9) -> bool:
        return any(a - tol <= e <= b + tol for a, b in self.equilibrium_intervals)

    def to_dict(self) -> dict:
        return {
            "negation": self.which,
            "lambda": self.lam,
            "variant": self.variant,
            **{f"n{i}": getattr(self, f"n{i}").to_dict() for i in range(1, 6)},
            "is_strict": self.is_strict,
            "is_strong": self.is_strong,
            "equilibrium_intervals": [list(iv) for iv in self.equilibrium_intervals],
            "equilibrium_point_count": len(self.equilibrium_points),
            "notes": self.notes,
        }

    def to_text(self) -> str:
        def show(v: AxiomVerdict) -> str:
            s = "holds" if v.holds else "fails"
            if v.witness:
                s += " " + ", ".join(f"{k}={val:.6g}" if isinstance(val, float) else f"{k}={val}" for k, val in v.witness.items())
            return s

        lines = [f"{self.which} negation, lambda={self.lam:g}, variant={self.variant}"]
        for i, label in enumerate(("boundary", "non-increasing", "continuous", "strictly decreasing", "involutive"), 1):
            lines.append(f"  N{i} {label:<20} {show(getattr(self, f'n{i}'))}")
        lines.append(f"  strict: {self.is_strict}  strong: {self.is_strong}")
        ivs = ", ".join(f"{a:g}" if a == b else f"[{a:g}, {b:g}]" for a, b in self.equilibrium_intervals)
        lines.append(f"  equilibrium: {ivs or 'none'}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def _intervals(points: np.ndarray, step: float) -> list[tuple[float, float]]:
    out: list[tuple[float, float]] = []
    for p in points.tolist():
        if out and p - out[-1][1] <= step * 1.5:
            out[-1] = (out[-1][0], p)
        else:
            out.append((p, p))
    return out


def _first_pair(mask: np.ndarray, d: np.ndarray, f: np.ndarray) -> dict | None:
    idx = np.flatnonzero(mask)
    if idx.size == 0:
        return None
    i = int(idx[0])
    return {"x": float(d[i]), "y": float(d[i + 1]), "N(x)": float(f[i]), "N(y)": float(f[i + 1]), "violations": int(idx.size)}


def classify_negation(which: str, lam: float, grid: GridSpec = GridSpec(), variant: str = "verbatim") -> NegationClassification:
    """Check the fuzzy-negation axioms N1..N5 for one negation at one lambda."""
    if which not in scoi.NEGATION_KINDS:
        raise ValueError(f"unknown negation {which!r}")
    cfg = NegationConfig(lam, variant)
    tol = grid.tol
    step = 1.0 / (grid.points - 1)
    d = grid.degrees()
    f = scoi.negate_array(d, which, cfg)
    lo, hi = min(lam, 1 - lam), max(lam, 1 - lam)

    f1, f0 = scoi.negate(1.0, which, cfg), scoi.negate(0.0, which, cfg)
    n1 = AxiomVerdict(f1 == 0.0 and f0 == 1.0, None if (f1 == 0.0 and f0 == 1.0) else {"N(1)": f1, "N(0)": f0})

    rise = f[1:] - f[:-1]
    bands = {
        "low": (d[:-1] <= lo + tol) & (d[1:] <= lo + tol),
        "mid": (d[:-1] >= lo - tol) & (d[1:] <= hi + tol),
        "high": (d[:-1] >= hi - tol) & (d[1:] >= hi - tol),
    }
    # adjacent pairs suffice: a violation between any x < y implies one between neighbours
    up = rise > tol
    n2 = AxiomVerdict(not up.any(), _first_pair(up, d, f), {b: not (up & m).any() for b, m in bands.items()})
    flat = rise >= -tol
    n4 = AxiomVerdict(not flat.any(), _first_pair(flat, d, f), {b: not (flat & m).any() for b, m in bands.items()})

    slope = max((2 * lam - 1) / (1 - lam), (1 - 2 * lam) / lam, 1.0) + 1.0
    jump = np.abs(rise)
    worst = int(np.argmax(jump))
    bound = slope * step + tol
    n3 = AxiomVerdict(bool(jump[worst] <= bound),
                      None if jump[worst] <= bound else {"x": float(d[worst]), "jump": float(jump[worst]), "bound": bound})

    ff = scoi.negate_array(f, which, cfg)
    err = np.abs(ff - d)
    bad5 = np.flatnonzero(err > tol)
    n5 = AxiomVerdict(bad5.size == 0,
                      None if bad5.size == 0 else {"x": float(d[bad5[0]]), "N(N(x))": float(ff[bad5[0]]), "violations": int(bad5.size)})

    fixed = d[np.abs(f - d) <= tol]
    notes = []
    if which == "intermediary" and not n1.holds:
        notes.append(
            f"N(1) = {f1:.6g} = min(lambda, 1 - lambda) and N(0) = {f0:.6g} = max(lambda, 1 - lambda); "
            "they reach 0 and 1 only in the limit lambda -> 1 or lambda -> 0, which no admissible lambda attains"
        )
    if which != "opposite" and fixed.size > 1:
        notes.append("fixed points form an interval, not the single point 1/2")
    return NegationClassification(which, lam, variant, n1, n2, n3, n4, n5,
                                  fixed.tolist(), _intervals(fixed, step), notes)
