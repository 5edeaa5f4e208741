"""Fuzzy production-rule decision pipeline over integrated survey data.

Pipeline: table -> ramp specs -> memberships -> thresholds -> rule firing.
All comparisons use unrounded values; rounding (3 decimals, half-up) is
applied only when values are displayed.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

from . import scoi
from .scoi import NegationConfig

ATTRIBUTES = ("income", "savings")
MODES = ("high", "low", "moderate")
COLUMNS = ("high_income", "low_income", "high_deposit", "low_deposit")
_COLUMN_OF = {"income": ("high_income", "low_income"), "savings": ("high_deposit", "low_deposit")}
EPS = 1e-12  # absorbs float noise at band edges; degrees are O(1)


def round_half_up(x: float, places: int = 3) -> float:
    q = Decimal(1).scaleb(-places)
    return float(Decimal(repr(round(x, 12))).quantize(q, rounding=ROUND_HALF_UP))


def show(x: float) -> str:
    return f"{round_half_up(x):.3f}"


def show_band(upper: float) -> tuple[str, str]:
    """Display a (lambda, 1 - lambda) band; the lower edge is 1 minus the displayed upper edge."""
    r = round_half_up(upper)
    return f"{r:.3f}", f"{1 - r:.3f}"


class DecisionError(ValueError):
    pass


@dataclass(frozen=True)
class Elasticities:
    high_income: float = 500.0
    low_income: float = 100.0
    high_deposit: float = 20000.0
    low_deposit: float = 10000.0


@dataclass(frozen=True)
class IntegratedDataTable:
    rows: Mapping[str, Mapping[str, float]]
    elasticities: Elasticities = Elasticities()

    def __post_init__(self):
        if not self.rows:
            raise DecisionError("data table has no rows")
        for name, row in self.rows.items():
            missing = [c for c in COLUMNS if c not in row]
            if missing:
                raise DecisionError(f"row {name!r} lacks columns {missing}")
            if not row["low_income"] < row["high_income"]:
                raise DecisionError(f"row {name!r}: low_income must be below high_income")
            if not row["low_deposit"] < row["high_deposit"]:
                raise DecisionError(f"row {name!r}: low_deposit must be below high_deposit")

    @classmethod
    def from_csv(cls, text: str, elasticities: Elasticities = Elasticities()) -> "IntegratedDataTable":
        reader = csv.DictReader(io.StringIO(text))
        header = tuple(reader.fieldnames or ())
        if header != ("province", *COLUMNS):
            raise DecisionError(f"expected header province,{','.join(COLUMNS)}; got {','.join(header)}")
        rows = {}
        for rec in reader:
            try:
                rows[rec["province"]] = {c: float(rec[c]) for c in COLUMNS}
            except (TypeError, ValueError) as exc:
                raise DecisionError(f"row {rec.get('province')!r}: {exc}") from None
        return cls(rows, elasticities)


@dataclass(frozen=True)
class MembershipSpec:
    alpha_T: float
    eps_T: float
    alpha_F: float
    eps_F: float

    def __post_init__(self):
        if not self.low_end < self.high_end:
            raise DecisionError(f"degenerate ramp: {self.low_end} >= {self.high_end}")

    @property
    def low_end(self) -> float:
        return self.alpha_F + self.eps_F

    @property
    def high_end(self) -> float:
        return self.alpha_T - self.eps_T


def derive_spec(table: IntegratedDataTable, attribute: str) -> MembershipSpec:
    hi_col, lo_col = _COLUMN_OF[_attr(attribute)]
    e = table.elasticities
    return MembershipSpec(
        max(r[hi_col] for r in table.rows.values()),
        getattr(e, hi_col),
        min(r[lo_col] for r in table.rows.values()),
        getattr(e, lo_col),
    )


def membership_high(x: float, spec: MembershipSpec) -> float:
    if x < 0:
        raise DecisionError("amounts must be non-negative")
    if x <= spec.low_end:
        return 0.0
    if x >= spec.high_end:
        return 1.0
    return abs(x - spec.low_end) / abs(spec.high_end - spec.low_end)


def membership_low(x: float, spec: MembershipSpec) -> float:
    return scoi.opp_neg(membership_high(x, spec))


def membership_moderate(x: float, spec: MembershipSpec, cfg: NegationConfig) -> float:
    return scoi.int_neg(membership_high(x, spec), cfg)


@dataclass(frozen=True)
class ThresholdSet:
    lambda_high: float
    lambda_low: float
    band: tuple[float, float]

    def __post_init__(self):
        l1, l2 = self.band
        if not 0 < l2 <= l1 < 1:
            raise DecisionError(f"invalid band ({l1}, {l2})")

    def to_dict(self) -> dict:
        return {
            "lambda_high": self.lambda_high,
            "lambda_low": self.lambda_low,
            "band": list(self.band),
            "display": {
                "lambda_high": show(self.lambda_high),
                "lambda_low": show(self.lambda_low),
                "band": list(show_band(self.band[0])),
            },
        }


def derive_thresholds(
    table: IntegratedDataTable, spec: MembershipSpec, attribute: str, override: float | None = None
) -> tuple[dict[str, float], ThresholdSet]:
    hi_col, _ = _COLUMN_OF[_attr(attribute)]
    per = {name: (membership_high(row[hi_col], spec) + 1.0) / 2.0 for name, row in table.rows.items()}
    lam = sum(per.values()) / len(per) if override is None else scoi.check_lambda(override)
    return per, ThresholdSet(lam, lam, (lam, 1.0 - lam))


@dataclass(frozen=True)
class ProductionRule:
    name: str
    premises: tuple[tuple[str, str], ...]
    conclusion: str
    belief: float = 1.0  # carried through, never gates firing

    def __post_init__(self):
        if not self.premises:
            raise DecisionError(f"rule {self.name} has no premises")
        for attr, mode in self.premises:
            _attr(attr)
            if mode not in MODES:
                raise DecisionError(f"rule {self.name}: unknown mode {mode!r}")
        scoi.check_degree(self.belief)

    @classmethod
    def from_dict(cls, obj: Mapping) -> "ProductionRule":
        return cls(obj["name"], tuple((a, m) for a, m in obj["premises"]), obj["conclusion"], float(obj.get("belief", 1.0)))


@dataclass
class PremiseEvaluation:
    attribute: str
    mode: str
    degree: float
    lower: float
    upper: float | None
    satisfied: bool

    def to_dict(self) -> dict:
        if self.upper is None:
            bounds = f">= {show(self.lower)}"
        else:
            hi, lo = show_band(self.upper)
            bounds = f"in [{lo}, {hi}]"
        return {
            "attribute": self.attribute,
            "mode": self.mode,
            "degree": self.degree,
            "lower": self.lower,
            "upper": self.upper,
            "satisfied": self.satisfied,
            "display": f"{self.mode} {self.attribute} {show(self.degree)} {bounds}",
        }


@dataclass
class RuleEvaluation:
    rule: ProductionRule
    premises: list[PremiseEvaluation]

    @property
    def fired(self) -> bool:
        return all(p.satisfied for p in self.premises)

    def to_dict(self) -> dict:
        return {
            "name": self.rule.name,
            "conclusion": self.rule.conclusion,
            "belief": self.rule.belief,
            "fired": self.fired,
            "premises": [p.to_dict() for p in self.premises],
        }


@dataclass
class Degrees:
    high: float
    low: float
    moderate: float


def evaluate_rule(
    rule: ProductionRule,
    degrees: Mapping[str, Degrees],
    thresholds: Mapping[str, ThresholdSet],
) -> RuleEvaluation:
    out = []
    for attr, mode in rule.premises:
        t, dg = thresholds[attr], degrees[attr]
        if mode == "high":
            ev = PremiseEvaluation(attr, mode, dg.high, t.lambda_high, None, dg.high >= t.lambda_high - EPS)
        elif mode == "low":
            ev = PremiseEvaluation(attr, mode, dg.low, t.lambda_low, None, dg.low >= t.lambda_low - EPS)
        else:
            l1, l2 = t.band
            ok = l2 - EPS <= dg.moderate <= l1 + EPS
            ev = PremiseEvaluation(attr, mode, dg.moderate, l2, l1, ok)
        out.append(ev)
    return RuleEvaluation(rule, out)


@dataclass
class DecisionConfig:
    elasticities: Elasticities = Elasticities()
    lambda_overrides: Mapping[str, float | None] = field(default_factory=dict)
    rules: tuple[ProductionRule, ...] = ()

    @classmethod
    def from_dict(cls, obj: Mapping) -> "DecisionConfig":
        return cls(
            Elasticities(**{k: float(v) for k, v in obj.get("elasticities", {}).items()}),
            dict(obj.get("lambda_overrides", {})),
            tuple(ProductionRule.from_dict(r) for r in obj.get("rules", ())),
        )


def default_config() -> DecisionConfig:
    text = (resources.files("trineg") / "data" / "decision.json").read_text(encoding="utf-8")
    return DecisionConfig.from_dict(json.loads(text))


def default_table(elasticities: Elasticities = Elasticities()) -> IntegratedDataTable:
    text = (resources.files("trineg") / "data" / "table2.csv").read_text(encoding="utf-8")
    return IntegratedDataTable.from_csv(text, elasticities)


def load_table(path: str | Path, elasticities: Elasticities = Elasticities()) -> IntegratedDataTable:
    return IntegratedDataTable.from_csv(Path(path).read_text(encoding="utf-8"), elasticities)


@dataclass
class DecisionReport:
    scenario: dict[str, float]
    specs: dict[str, MembershipSpec]
    per_province: dict[str, dict[str, float]]
    thresholds: dict[str, ThresholdSet]
    degrees: dict[str, Degrees]
    evaluations: list[RuleEvaluation]
    variant: str = "verbatim"

    @property
    def fired(self) -> list[str]:
        return [e.rule.name for e in self.evaluations if e.fired]

    @property
    def tie(self) -> bool:
        return len(self.fired) > 1

    @property
    def recommendation(self) -> str | None:
        return self.fired[0] if len(self.fired) == 1 else None

    @property
    def conclusion(self) -> str | None:
        for e in self.evaluations:
            if e.rule.name == self.recommendation:
                return e.rule.conclusion
        return None

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "variant": self.variant,
            "specs": {
                a: {"alpha_T": s.alpha_T, "eps_T": s.eps_T, "alpha_F": s.alpha_F, "eps_F": s.eps_F,
                    "ramp": [s.low_end, s.high_end]}
                for a, s in self.specs.items()
            },
            "per_province_thresholds": {
                a: {p: {"value": v, "display": show(v)} for p, v in per.items()} for a, per in self.per_province.items()
            },
            "thresholds": {a: t.to_dict() for a, t in self.thresholds.items()},
            "degrees": {
                a: {"high": d.high, "low": d.low, "moderate": d.moderate,
                    "display": {"high": show(d.high), "low": show(d.low), "moderate": show(d.moderate)}}
                for a, d in self.degrees.items()
            },
            "rules": [e.to_dict() for e in self.evaluations],
            "fired": self.fired,
            "tie": self.tie,
            "recommendation": self.recommendation,
            "conclusion": self.conclusion,
        }

    def to_text(self) -> str:
        lines = [f"scenario: income {self.scenario['income']:g}, savings {self.scenario['savings']:g}"]
        for a in ATTRIBUTES:
            s, t, d = self.specs[a], self.thresholds[a], self.degrees[a]
            per = ", ".join(f"{p} {show(v)}" for p, v in self.per_province[a].items())
            disp = t.to_dict()["display"]
            lines.append(f"{a}: ramp {s.low_end:g}..{s.high_end:g}; per-province {per}")
            lines.append(f"  lambda {disp['lambda_high']}  band ({disp['band'][0]}, {disp['band'][1]})"
                         f"  high {show(d.high)}  low {show(d.low)}  moderate {show(d.moderate)}")
        for e in self.evaluations:
            prem = "; ".join(p.to_dict()["display"] for p in e.premises)
            lines.append(f"rule {e.rule.name} {'fired' if e.fired else 'not fired'}: {prem}")
        if self.recommendation:
            lines.append(f"recommendation: {self.recommendation} {self.conclusion}")
        elif self.tie:
            lines.append(f"recommendation: none (tie between {', '.join(self.fired)})")
        else:
            lines.append("recommendation: none (no rule fired)")
        return "\n".join(lines)


def decide(
    income: float,
    savings: float,
    rules: Sequence[ProductionRule] | None = None,
    table: IntegratedDataTable | None = None,
    config: DecisionConfig | None = None,
    variant: str = "verbatim",
) -> DecisionReport:
    config = default_config() if config is None else config
    rules = tuple(config.rules if rules is None else rules)
    if not rules:
        raise DecisionError("no rules to evaluate")
    table = default_table(config.elasticities) if table is None else table
    scenario = {"income": float(income), "savings": float(savings)}
    specs, per, thresholds, degrees = {}, {}, {}, {}
    for a in ATTRIBUTES:
        specs[a] = derive_spec(table, a)
        per[a], thresholds[a] = derive_thresholds(table, specs[a], a, config.lambda_overrides.get(a))
        cfg = NegationConfig(thresholds[a].lambda_high, variant)
        x = scenario[a]
        degrees[a] = Degrees(membership_high(x, specs[a]), membership_low(x, specs[a]), membership_moderate(x, specs[a], cfg))
    evaluations = [evaluate_rule(r, degrees, thresholds) for r in rules]
    return DecisionReport(scenario, specs, per, thresholds, degrees, evaluations, variant)


def _attr(attribute: str) -> str:
    if attribute not in ATTRIBUTES:
        raise DecisionError(f"unknown attribute {attribute!r}; expected one of {ATTRIBUTES}")
    return attribute
