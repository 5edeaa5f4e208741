"""Three-valued interpretation of formulas: evaluation, truth tables, validity, entailment.

Truth values are the floats 0.0, 0.5 and 1.0; 1 is the only designated value.
Implication follows one of two tables:

``lukasiewicz``                          ``goedel``
     B:  1   1/2  0                         B:  1   1/2  0
A=1      1   1/2  0                     A=1     1   1/2  0
A=1/2    1   1    1/2                   A=1/2   1   1    0
A=0      1   1    1                     A=0     1   1    1

Conjunction is min, disjunction max, ``#A = 1 - A``, ``~A`` maps 1/2 to 1 and
both 0 and 1 to 1/2, and ``!A = max(#A, ~A)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Literal, Mapping, Sequence

import numpy as np

from . import _kernels
from .syntax import And, Atom, ConNeg, Formula, Implies, IntNeg, OppNeg, Or, atoms, random_formula, render, substitute, to_formula

TRUTH_VALUES = (0.0, 0.5, 1.0)
MAX_ATOMS = 12
COUNTEREXAMPLE_CAP = 20

Implication = Literal["lukasiewicz", "goedel"]

# rows/cols indexed by value code 0, 1, 2 (= 0, 1/2, 1)
IMPLICATION_TABLES = {
    "lukasiewicz": np.array([[2, 2, 2], [1, 2, 2], [0, 1, 2]], dtype=np.int8),
    "goedel": np.array([[2, 2, 2], [0, 2, 2], [0, 1, 2]], dtype=np.int8),
}


class UnboundAtom(KeyError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"atom {name!r} has no value in the assignment")

    def __str__(self):
        return self.args[0]


class TooManyAtoms(ValueError):
    pass


@dataclass(frozen=True)
class SemanticsConfig:
    implication: Implication = "lukasiewicz"

    def __post_init__(self):
        if self.implication not in IMPLICATION_TABLES:
            raise ValueError(f"implication must be one of {sorted(IMPLICATION_TABLES)}")

    @property
    def table(self) -> np.ndarray:
        return IMPLICATION_TABLES[self.implication]


LUKASIEWICZ = SemanticsConfig("lukasiewicz")
GOEDEL = SemanticsConfig("goedel")


def code(v: float) -> int:
    try:
        return {0.0: 0, 0.5: 1, 1.0: 2}[float(v)]
    except KeyError:
        raise ValueError(f"truth value must be one of 0, 1/2, 1; got {v!r}") from None


def value(c: int) -> float:
    return TRUTH_VALUES[int(c)]


def show(v: float) -> str:
    return {0.0: "0", 0.5: "1/2", 1.0: "1"}[float(v)]


def parse_value(text: str) -> float:
    t = text.strip()
    if t in ("1/2", "0.5", ".5", "½"):
        return 0.5
    if t in ("0", "0.0"):
        return 0.0
    if t in ("1", "1.0"):
        return 1.0
    raise ValueError(f"not a three-valued truth value: {text!r}")


# ---------------------------------------------------------------------------
# single-assignment evaluation (recursive, independent of the kernels)

def implication(a: float, b: float, cfg: SemanticsConfig = LUKASIEWICZ) -> float:
    return value(cfg.table[code(a), code(b)])


def eval_formula(f: Formula | str, assignment: Mapping[str, float], cfg: SemanticsConfig = LUKASIEWICZ) -> float:
    f = to_formula(f)
    if isinstance(f, Atom):
        try:
            v = assignment[f.name]
        except KeyError:
            raise UnboundAtom(f.name) from None
        code(v)
        return float(v)
    if isinstance(f, OppNeg):
        return 1.0 - eval_formula(f.arg, assignment, cfg)
    if isinstance(f, IntNeg):
        return 1.0 if eval_formula(f.arg, assignment, cfg) == 0.5 else 0.5
    if isinstance(f, ConNeg):
        v = eval_formula(f.arg, assignment, cfg)
        return max(1.0 - v, 1.0 if v == 0.5 else 0.5)
    a = eval_formula(f.left, assignment, cfg)
    b = eval_formula(f.right, assignment, cfg)
    if isinstance(f, And):
        return min(a, b)
    if isinstance(f, Or):
        return max(a, b)
    return implication(a, b, cfg)


# ---------------------------------------------------------------------------
# enumeration over all assignments

def compile_formula(f: Formula, atom_order: Sequence[str]) -> tuple[np.ndarray, np.ndarray]:
    """Postfix program for the kernels: parallel arrays of opcodes and atom indices."""
    index = {a: i for i, a in enumerate(atom_order)}
    ops: list[int] = []
    args: list[int] = []

    def emit(g):
        if isinstance(g, Atom):
            ops.append(_kernels.OP_ATOM)
            args.append(index[g.name])
        elif isinstance(g, (OppNeg, IntNeg, ConNeg)):
            emit(g.arg)
            ops.append({OppNeg: _kernels.OP_OPP, IntNeg: _kernels.OP_INT, ConNeg: _kernels.OP_CON}[type(g)])
            args.append(0)
        else:
            emit(g.left)
            emit(g.right)
            ops.append({And: _kernels.OP_AND, Or: _kernels.OP_OR, Implies: _kernels.OP_IMP}[type(g)])
            args.append(0)

    emit(f)
    return np.array(ops, dtype=np.int64), np.array(args, dtype=np.int64)


def _check_atoms(names: Sequence[str]) -> None:
    if len(names) > MAX_ATOMS:
        raise TooManyAtoms(f"{len(names)} atoms exceeds the enumeration bound of {MAX_ATOMS} (3^{MAX_ATOMS} rows)")


def value_column(f: Formula, atom_order: Sequence[str], cfg: SemanticsConfig = LUKASIEWICZ) -> np.ndarray:
    """Value codes of ``f`` on every assignment, rows in lexicographic order of ``atom_order``."""
    ops, args = compile_formula(f, atom_order)
    return _kernels.eval_program(ops, args, len(atom_order), cfg.table)


def assignment_at(row: int, atom_order: Sequence[str]) -> dict[str, float]:
    n = len(atom_order)
    out = {}
    for j in range(n - 1, -1, -1):
        out[atom_order[j]] = TRUTH_VALUES[row % 3]
        row //= 3
    return {a: out[a] for a in atom_order}


def assignments(atom_order: Sequence[str]) -> Iterable[dict[str, float]]:
    for vals in itertools.product(TRUTH_VALUES, repeat=len(atom_order)):
        yield dict(zip(atom_order, vals))


@dataclass
class TruthTable:
    atoms: list[str]
    values: np.ndarray  # int8 codes, one per row

    @property
    def rows(self) -> list[tuple[tuple[float, ...], float]]:
        out = []
        for r, c in enumerate(self.values.tolist()):
            a = assignment_at(r, self.atoms)
            out.append((tuple(a[x] for x in self.atoms), TRUTH_VALUES[c]))
        return out

    def to_dict(self) -> dict:
        return {
            "atoms": list(self.atoms),
            "rows": [[show(v) for v in vals] + [show(res)] for vals, res in self.rows],
        }

    def to_text(self) -> str:
        header = list(self.atoms) + ["value"]
        body = [[show(v) for v in vals] + [show(res)] for vals, res in self.rows]
        widths = [max(len(h), 3) for h in header]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in body]
        return "\n".join(lines)


def truth_table(f: Formula | str, cfg: SemanticsConfig = LUKASIEWICZ) -> TruthTable:
    f = to_formula(f)
    names = atoms(f)
    _check_atoms(names)
    return TruthTable(names, value_column(f, names, cfg))


@dataclass
class ValidityResult:
    verdict: str  # "valid" | "invalid"
    counterexamples: list[dict[str, float]]
    assignments_checked: int
    counterexample_values: list[float] = field(default_factory=list)
    failures: int = 0

    @property
    def valid(self) -> bool:
        return self.verdict == "valid"

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "assignments_checked": self.assignments_checked,
            "failures": self.failures,
            "counterexamples": [
                {"assignment": {k: show(v) for k, v in ce.items()}, "value": show(val)}
                for ce, val in zip(self.counterexamples, self.counterexample_values)
            ],
        }

    def summary(self) -> str:
        n = self.assignments_checked
        if self.valid:
            return f"valid ({n}/{n} assignments)"
        return f"invalid ({self.failures} of {n} assignments fail)"


def entails(premises: Sequence[Formula | str], f: Formula | str, cfg: SemanticsConfig = LUKASIEWICZ) -> ValidityResult:
    """Every assignment giving all premises the value 1 gives ``f`` the value 1."""
    premises = [to_formula(p) for p in premises]
    f = to_formula(f)
    names = sorted(set(atoms(f)).union(*(atoms(p) for p in premises)))
    _check_atoms(names)
    rows = 3 ** len(names)
    satisfied = np.ones(rows, dtype=bool)
    for p in premises:
        satisfied &= value_column(p, names, cfg) == 2
    goal = value_column(f, names, cfg)
    bad = np.flatnonzero(satisfied & (goal != 2))
    ces = [assignment_at(int(r), names) for r in bad[:COUNTEREXAMPLE_CAP]]
    vals = [TRUTH_VALUES[int(goal[r])] for r in bad[:COUNTEREXAMPLE_CAP]]
    return ValidityResult("valid" if bad.size == 0 else "invalid", ces, rows, vals, int(bad.size))


def is_valid(f: Formula | str, cfg: SemanticsConfig = LUKASIEWICZ) -> ValidityResult:
    return entails([], f, cfg)


# ---------------------------------------------------------------------------
# axiom audit

@dataclass
class SchemaAudit:
    name: str
    formula: str
    result: ValidityResult
    spot_checks: int
    spot_check_failures: int

    def to_dict(self) -> dict:
        d = {"name": self.name, "formula": self.formula}
        d.update(self.result.to_dict())
        d["spot_checks"] = self.spot_checks
        d["spot_check_failures"] = self.spot_check_failures
        return d


@dataclass
class AxiomAuditReport:
    implication: str
    schemas: list[SchemaAudit]
    modus_ponens: bool
    modus_ponens_rows: list[tuple[float, float, float]]

    def by_name(self, name: str) -> SchemaAudit:
        for s in self.schemas:
            if s.name == name:
                return s
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "implication": self.implication,
            "schemas": [s.to_dict() for s in self.schemas],
            "modus_ponens": {
                "preserves_designated": self.modus_ponens,
                "rows": [[show(a), show(b), show(r)] for a, b, r in self.modus_ponens_rows],
            },
        }

    def to_text(self) -> str:
        lines = [f"implication table: {self.implication}"]
        w = max(len(s.name) for s in self.schemas)
        for s in self.schemas:
            extra = ""
            if not s.result.valid:
                ce = s.result.counterexamples[0]
                extra = "  e.g. " + ", ".join(f"{k}={show(v)}" for k, v in ce.items())
                extra += f" -> {show(s.result.counterexample_values[0])}"
            lines.append(f"{s.name.ljust(w)}  {s.result.verdict:<7}  {s.formula}{extra}")
        mp = "holds" if self.modus_ponens else "FAILS"
        lines.append(f"modus ponens preserves value 1: {mp}")
        return "\n".join(lines)


def modus_ponens_preserved(cfg: SemanticsConfig = LUKASIEWICZ) -> tuple[bool, list[tuple[float, float, float]]]:
    """Check over all 9 value pairs that A = 1 and A -> B = 1 force B = 1."""
    rows = []
    ok = True
    for a in TRUTH_VALUES:
        for b in TRUTH_VALUES:
            r = implication(a, b, cfg)
            rows.append((a, b, r))
            if a == 1.0 and r == 1.0 and b != 1.0:
                ok = False
    return ok, rows


def audit_axioms(schemas, cfg: SemanticsConfig = LUKASIEWICZ, spot_checks: int = 100, seed: int = 0) -> AxiomAuditReport:
    """Validity of each schema's canonical instance plus random substitution spot checks.

    ``schemas`` is any iterable of objects with ``name`` and ``pattern``
    attributes.  The canonical instance uses the metavariables themselves as
    distinct atoms.
    """
    rng = np.random.default_rng(seed)
    out = []
    for s in schemas:
        pattern = to_formula(s.pattern)
        result = is_valid(pattern, cfg)
        metas = atoms(pattern)
        failures = 0
        for _ in range(spot_checks):
            sub = {m: random_formula(rng, ["p", "q", "r"], 2) for m in metas}
            if not is_valid(substitute(pattern, sub), cfg).valid:
                failures += 1
        out.append(SchemaAudit(s.name, render(pattern), result, spot_checks, failures))
    mp_ok, mp_rows = modus_ponens_preserved(cfg)
    return AxiomAuditReport(cfg.implication, out, mp_ok, mp_rows)
