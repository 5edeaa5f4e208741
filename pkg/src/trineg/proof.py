"""Hilbert-style proof checking: axiom schemas, justifications, a theorem registry.

Checking is purely structural.  No truth values are computed here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Sequence, Union

from .syntax import Atom, Formula, Implies, Unary, atoms, parse, render, substitute

METAVARIABLES = ("A", "B", "C")


@dataclass(frozen=True)
class AxiomSchema:
    name: str
    pattern: Formula
    provenance: str = "default"  # or "alternate-reading"
    note: str = ""

    def __post_init__(self):
        extra = set(atoms(self.pattern)) - set(METAVARIABLES)
        if extra:
            raise ValueError(f"schema {self.name} uses non-metavariables {sorted(extra)}")


def _schema(name, text, provenance="default", note=""):
    return AxiomSchema(name, parse(text), provenance, note)


# Ambiguous glyphs in a4-a7 and a12-a13 get one default reading and one
# "_alt" reading.  Defaults follow the way the axioms are used in the
# transcribed derivations.
AXIOMS: dict[str, AxiomSchema] = {
    s.name: s
    for s in [
        _schema("a1", "A -> (B -> A)"),
        _schema("a2", "(A -> (A -> B)) -> (A -> B)"),
        _schema("a3", "(A -> B) -> ((B -> C) -> (A -> C))"),
        _schema("a4", "(A -> !B) -> (B -> !A)"),
        _schema("a5", "(A -> #B) -> (B -> #A)"),
        _schema("a6", "#A -> (A -> B)"),
        _schema("a7", "((A -> #A) -> B) -> ((A -> B) -> B)"),
        _schema("a8", "A -> A | B"),
        _schema("a9", "B -> A | B"),
        _schema("a10", "A & B -> A"),
        _schema("a11", "A & B -> B"),
        _schema("a12", "#A -> !A & !~A"),
        _schema("a13", "~A -> !A & !#A"),
        _schema("a4_alt", "(A -> #B) -> (B -> #A)", "alternate-reading", "opposite instead of contradictory negation"),
        _schema("a5_alt", "(A -> #A) -> (B -> #A)", "alternate-reading", "antecedent negates A itself"),
        _schema("a6_alt", "!A -> (A -> B)", "alternate-reading", "contradictory instead of opposite negation"),
        _schema("a7_alt", "((A -> !A) -> B) -> ((A -> B) -> B)", "alternate-reading", "contradictory instead of opposite negation"),
        _schema("a12_alt", "!A -> #A & !~A", "alternate-reading", "contradictory antecedent, opposite first conjunct"),
        _schema("a13_alt", "~A -> !A & !!A", "alternate-reading", "double contradictory negation in the second conjunct"),
    ]
}

DEFAULT_AXIOM_NAMES = tuple(f"a{i}" for i in range(1, 14))


def resolve_axioms(readings: Mapping[str, str] | None = None) -> dict[str, AxiomSchema]:
    """Name -> schema table used by the checker.

    ``readings`` redirects a cited name to another schema, e.g.
    ``{"a6": "a6_alt"}``.  Every schema stays citable under its own name.
    """
    table = dict(AXIOMS)
    for cited, target in (readings or {}).items():
        if target not in AXIOMS:
            raise KeyError(f"unknown axiom reading {target!r}")
        table[cited] = AXIOMS[target]
    return table


# ---------------------------------------------------------------------------
# matching

def _match(pattern: Formula, f: Formula, binding: dict[str, Formula]) -> bool:
    if isinstance(pattern, Atom):
        bound = binding.get(pattern.name)
        if bound is None:
            binding[pattern.name] = f
            return True
        return bound == f
    if type(pattern) is not type(f):
        return False
    if isinstance(pattern, Unary):
        return _match(pattern.arg, f.arg, binding)
    return _match(pattern.left, f.left, binding) and _match(pattern.right, f.right, binding)


def match_many(pairs: Iterable[tuple[Formula, Formula]]) -> dict[str, Formula] | None:
    binding: dict[str, Formula] = {}
    for pattern, f in pairs:
        if not _match(pattern, f, binding):
            return None
    return binding


def match_schema(schema: AxiomSchema | Formula, f: Formula) -> dict[str, Formula] | None:
    """Substitution turning the schema into ``f`` exactly, or None."""
    pattern = schema.pattern if isinstance(schema, AxiomSchema) else schema
    return match_many([(pattern, f)])


# ---------------------------------------------------------------------------
# scripts

@dataclass(frozen=True)
class AxiomRef:
    name: str
    substitution: Mapping[str, Formula] | None = None


@dataclass(frozen=True)
class PremiseRef:
    index: int  # 1-based


@dataclass(frozen=True)
class ModusPonens:
    lines: tuple[int, ...]  # 1-based, expected length 2


@dataclass(frozen=True)
class LemmaRef:
    name: str
    substitution: Mapping[str, Formula] | None = None
    lines: tuple[int, ...] = ()  # lines supplying the lemma's premises, in order


Justification = Union[AxiomRef, PremiseRef, ModusPonens, LemmaRef]


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    just: Justification
    label: str = ""
    note: str = ""


@dataclass(frozen=True)
class ProofScript:
    name: str
    premises: tuple[Formula, ...]
    lines: tuple[ProofLine, ...]
    goal: Formula
    expected: tuple[str, ...] | None = None
    title: str = ""
    note: str = ""

    def __post_init__(self):
        if not self.lines:
            raise ValueError(f"script {self.name} has no lines")
        if self.goal != self.lines[-1].formula:
            raise ValueError(f"script {self.name}: goal {render(self.goal)} differs from last line {render(self.lines[-1].formula)}")
        if self.expected is not None:
            if len(self.expected) != len(self.lines):
                raise ValueError(f"script {self.name}: {len(self.expected)} expected verdicts for {len(self.lines)} lines")
            bad = set(self.expected) - {"checks", "fails"}
            if bad:
                raise ValueError(f"script {self.name}: unknown verdicts {sorted(bad)}")


@dataclass(frozen=True)
class StatedGoal:
    """A theorem listed without a derivation; registered so later lines may cite it."""

    name: str
    premises: tuple[Formula, ...]
    goal: Formula
    title: str = ""


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class RegistryEntry:
    premises: tuple[Formula, ...]
    goal: Formula
    status: str  # "proved" | "stated"


class TheoremRegistry:
    """Accepted theorems by name.  Entries are never removed or replaced."""

    def __init__(self):
        self.accepted: dict[str, RegistryEntry] = {}

    def __contains__(self, name: str) -> bool:
        return name in self.accepted

    def get(self, name: str) -> RegistryEntry | None:
        return self.accepted.get(name)

    def _add(self, name: str, entry: RegistryEntry) -> None:
        if name in self.accepted:
            raise ValueError(f"theorem {name!r} is already registered")
        self.accepted[name] = entry

    def add_proved(self, script: ProofScript) -> None:
        self._add(script.name, RegistryEntry(script.premises, script.goal, "proved"))

    def add_stated(self, goal: StatedGoal) -> None:
        self._add(goal.name, RegistryEntry(goal.premises, goal.goal, "stated"))


# ---------------------------------------------------------------------------
# checking

@dataclass
class LineVerdict:
    index: int
    label: str
    formula: str
    ok: bool
    message: str = ""
    substitution: dict[str, str] | None = None
    inferred: bool = False
    uses_stated: str | None = None

    @property
    def verdict(self) -> str:
        return "checks" if self.ok else "fails"


@dataclass
class ProofReport:
    name: str
    lines: list[LineVerdict]
    expected: tuple[str, ...] | None = None

    @property
    def accepted(self) -> bool:
        return all(v.ok for v in self.lines)

    @property
    def verdicts(self) -> list[str]:
        return [v.verdict for v in self.lines]

    @property
    def matches_expected(self) -> bool | None:
        if self.expected is None:
            return None
        return list(self.expected) == self.verdicts

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "accepted": self.accepted,
            "matches_expected": self.matches_expected,
            "lines": [
                {
                    "index": v.index,
                    "label": v.label,
                    "formula": v.formula,
                    "verdict": v.verdict,
                    "message": v.message,
                    "substitution": v.substitution,
                    "inferred": v.inferred,
                    **({"uses_stated": v.uses_stated} if v.uses_stated else {}),
                }
                for v in self.lines
            ],
        }

    def to_text(self) -> str:
        status = "accepted" if self.accepted else "rejected"
        if self.matches_expected is not None:
            status += ", matches expected" if self.matches_expected else ", DIFFERS from expected"
        out = [f"{self.name}: {status}"]
        for v in self.lines:
            msg = f"  {v.message}" if v.message else ""
            out.append(f"  {v.index:>3} {v.label:<7} {v.verdict:<6} {v.formula}{msg}")
        return "\n".join(out)


def _show_sub(sub: Mapping[str, Formula]) -> dict[str, str]:
    return {k: render(v) for k, v in sorted(sub.items())}


def _earlier(refs: Sequence[int], index: int) -> str | None:
    for r in refs:
        if not isinstance(r, int) or r < 1 or r >= index:
            return f"line reference {r} is not an earlier line"
    return None


def _check_line(index, line, script, schemas, registry, formulas) -> LineVerdict:
    v = LineVerdict(index, line.label, render(line.formula), False)
    j = line.just
    f = line.formula
    if isinstance(j, PremiseRef):
        if not 1 <= j.index <= len(script.premises):
            v.message = f"no premise {j.index}"
        elif script.premises[j.index - 1] != f:
            v.message = f"premise {j.index} is {render(script.premises[j.index - 1])}"
        else:
            v.ok = True
        return v
    if isinstance(j, ModusPonens):
        if len(j.lines) != 2:
            v.message = f"modus ponens needs two line references, got {len(j.lines)}"
            return v
        err = _earlier(j.lines, index)
        if err:
            v.message = err
            return v
        g, h = (formulas[r - 1] for r in j.lines)
        if h == Implies(g, f) or g == Implies(h, f):
            v.ok = True
        else:
            v.message = f"lines {j.lines[0]} and {j.lines[1]} do not yield this formula by modus ponens"
        return v
    if isinstance(j, AxiomRef):
        schema = schemas.get(j.name)
        if schema is None:
            v.message = f"unknown axiom {j.name!r}"
            return v
        if j.substitution is not None:
            sub = dict(j.substitution)
            ok = substitute(schema.pattern, sub) == f
        else:
            sub = match_schema(schema, f)
            ok = sub is not None
            v.inferred = True
        if ok:
            v.ok = True
            v.substitution = _show_sub(sub)
        else:
            v.message = f"not an instance of {j.name}: {render(schema.pattern)}"
        return v
    if isinstance(j, LemmaRef):
        entry = registry.get(j.name)
        if entry is None:
            v.message = f"{j.name} is not an accepted theorem"
            return v
        err = _earlier(j.lines, index)
        if err:
            v.message = err
            return v
        if len(j.lines) != len(entry.premises):
            v.message = f"{j.name} takes {len(entry.premises)} premise line(s), got {len(j.lines)}"
            return v
        supplied = [formulas[r - 1] for r in j.lines]
        if j.substitution is not None:
            sub = dict(j.substitution)
            ok = substitute(entry.goal, sub) == f and all(
                substitute(p, sub) == s for p, s in zip(entry.premises, supplied)
            )
        else:
            sub = match_many([(entry.goal, f), *zip(entry.premises, supplied)])
            ok = sub is not None
            v.inferred = True
        if ok:
            v.ok = True
            v.substitution = _show_sub(sub)
            if entry.status == "stated":
                v.uses_stated = j.name
        else:
            v.message = f"not an instance of {j.name}"
        return v
    v.message = f"unsupported justification {j!r}"
    return v


def check_proof(
    script: ProofScript,
    schemas: Mapping[str, AxiomSchema] | None = None,
    registry: TheoremRegistry | None = None,
    register: bool = True,
) -> ProofReport:
    """Check every line; register the script when all lines check."""
    schemas = resolve_axioms() if schemas is None else schemas
    registry = TheoremRegistry() if registry is None else registry
    formulas = [line.formula for line in script.lines]
    verdicts = [
        _check_line(i, line, script, schemas, registry, formulas)
        for i, line in enumerate(script.lines, start=1)
    ]
    report = ProofReport(script.name, verdicts, script.expected)
    if register and report.accepted and script.name not in registry:
        registry.add_proved(script)
    return report


@dataclass
class CorpusReport:
    reports: list[ProofReport]
    registry: TheoremRegistry
    stated: list[str] = field(default_factory=list)

    @property
    def all_match_expected(self) -> bool:
        return all(r.matches_expected is not False for r in self.reports)

    def report(self, name: str) -> ProofReport:
        for r in self.reports:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "scripts": [r.to_dict() for r in self.reports],
            "stated_without_derivation": list(self.stated),
            "all_match_expected": self.all_match_expected,
        }

    def to_text(self) -> str:
        out = []
        for r in self.reports:
            mark = "matches" if r.matches_expected is not False else "differs"
            acc = "accepted" if r.accepted else "rejected"
            failing = [v.label or str(v.index) for v in r.lines if not v.ok]
            tail = f"  failing lines: {' '.join(failing)}" if failing else ""
            out.append(f"{mark} {r.name:<6} {acc}{tail}")
        out.append(f"{len(self.stated)} theorem(s) registered without derivation; "
                   "matches/differs compares against the recorded default-reading verdicts")
        return "\n".join(out)


def check_corpus(
    items: Iterable[ProofScript | StatedGoal],
    readings: Mapping[str, str] | None = None,
) -> CorpusReport:
    """Check scripts in order against one registry; stated goals are registered as they appear."""
    schemas = resolve_axioms(readings)
    registry = TheoremRegistry()
    reports = []
    stated = []
    for item in items:
        if isinstance(item, StatedGoal):
            registry.add_stated(item)
            stated.append(item.name)
        else:
            reports.append(check_proof(item, schemas, registry))
    return CorpusReport(reports, registry, stated)


# ---------------------------------------------------------------------------
# JSON loading

def _parse_sub(obj) -> dict[str, Formula] | None:
    if obj is None:
        return None
    return {k: parse(v) for k, v in obj.items()}


def _parse_just(obj: Mapping) -> Justification:
    kind = obj.get("kind")
    if kind == "axiom":
        return AxiomRef(obj["name"], _parse_sub(obj.get("subst")))
    if kind == "premise":
        return PremiseRef(int(obj["index"]))
    if kind == "mp":
        return ModusPonens(tuple(obj["lines"]))
    if kind == "lemma":
        return LemmaRef(obj["name"], _parse_sub(obj.get("subst")), tuple(obj.get("from", ())))
    raise ValueError(f"unknown justification kind {kind!r}")


def script_from_dict(obj: Mapping) -> ProofScript | StatedGoal:
    premises = tuple(parse(p) for p in obj.get("premises", ()))
    if "lines" not in obj:
        return StatedGoal(obj["name"], premises, parse(obj["goal"]), obj.get("title", ""))
    lines = tuple(
        ProofLine(parse(ln["formula"]), _parse_just(ln["just"]), ln.get("label", ""), ln.get("note", ""))
        for ln in obj["lines"]
    )
    goal = parse(obj["goal"]) if "goal" in obj else lines[-1].formula
    expected = tuple(obj["expected"]) if "expected" in obj else None
    return ProofScript(obj["name"], premises, lines, goal, expected, obj.get("title", ""), obj.get("note", ""))


def load_scripts(path: str | Path) -> list[ProofScript | StatedGoal]:
    """Read a proof file: a single script object, a list, or ``{"items": [...]}``."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(data, Mapping):
        data = data["items"] if "items" in data else [data]
    return [script_from_dict(obj) for obj in data]


def load_corpus() -> list[ProofScript | StatedGoal]:
    """The bundled derivations and stated theorems, in citation order."""
    root = resources.files("trineg") / "data" / "corpus"
    items: list[ProofScript | StatedGoal] = []
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            data = json.loads(entry.read_text(encoding="utf-8"))
            items.extend(script_from_dict(obj) for obj in data["items"])
    return items
