"""Command-line entry point.

Exit status: 0 success, 1 domain error (bad formula, bad data, ...), 2 usage error.
Every failure ends with one stderr line ``error: <code>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import audit as audit_mod
from . import decision, proof, scoi, semantics, trichotomy
from .syntax import FormulaSyntaxError, parse, render


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: usage: {message}\n")
        raise SystemExit(2)


def _lambda(text: str) -> float:
    try:
        return scoi.check_lambda(float(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--lambda", dest="lam", type=_lambda, default=0.5, help="threshold in (0, 1) (default 0.5)")
    p.add_argument("--variant", choices=scoi.VARIANTS, default="verbatim", help="intermediary formula variant")
    p.add_argument("--semantics", choices=tuple(semantics.IMPLICATION_TABLES), default="lukasiewicz", help="implication table")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    return p


def _readings(items: Sequence[str] | None) -> dict[str, str]:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"reading must look like a6=a6_alt, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _num(x: float) -> str:
    return f"{x:.12g}"


def build_parser() -> _Parser:
    common = _common()
    parser = _Parser(prog="trineg", description="Three negations: fuzzy operators, three-valued logic, proofs, decisions.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("neg", parents=[common], help="three negations of degrees or of a fuzzy set")
    p.add_argument("degrees", nargs="*", type=float, help="membership degrees in [0, 1]")
    p.add_argument("--set", dest="set_file", help="JSON fuzzy set file (universe, membership, kind)")

    p = sub.add_parser("eval", parents=[common], help="evaluate a formula under one assignment")
    p.add_argument("formula")
    p.add_argument("assign", nargs="*", help="bindings like A=1 B=1/2 C=0")

    p = sub.add_parser("truth-table", parents=[common], help="print the truth table of a formula")
    p.add_argument("formula")

    p = sub.add_parser("valid", parents=[common], help="check validity by enumerating all assignments")
    p.add_argument("formula")

    p = sub.add_parser("entails", parents=[common], help="check that premises entail a conclusion")
    p.add_argument("formulas", nargs="+", help="premises followed by the conclusion")

    p = sub.add_parser("check-proof", parents=[common], help="check proof scripts (the bundled corpus by default)")
    p.add_argument("--proofs", help="JSON proof file")
    p.add_argument("--reading", action="append", help="axiom reading override, e.g. a6=a6_alt (repeatable)")

    p = sub.add_parser("audit", help="audit negation properties or axiom soundness")
    asub = p.add_subparsers(dest="target", metavar="TARGET", parser_class=_Parser)
    asub.required = True
    a = asub.add_parser("scoi", parents=[common], help="grid, set-algebra and classification audits")
    a.add_argument("--part", choices=("pointwise", "sets", "classify", "all"), default="all")
    a.add_argument("--lambdas", type=_lambda, nargs="+", default=list(audit_mod.DEFAULT_LAMBDAS))
    a.add_argument("--step", type=float, default=1e-3, help="degree grid step")
    a.add_argument("--samples", type=int, default=1000)
    a.add_argument("--universe-size", type=int, default=16)
    a = asub.add_parser("axioms", parents=[common], help="validity of each axiom schema")
    a.add_argument("--reading", action="append", help="axiom reading override, e.g. a6=a6_alt (repeatable)")
    a.add_argument("--all-readings", action="store_true", help="also audit the alternate readings")
    a.add_argument("--spot-checks", type=int, default=100)

    p = sub.add_parser("trichotomy", parents=[common], help="partition a crisp universe")
    p.add_argument("--data", help='JSON {"universe", "positive", "opposite"}; default: integers example')
    p.add_argument("--bound", type=int, default=10, help="integers example range [-bound, bound]")

    p = sub.add_parser("decide", parents=[common], help="run the production-rule decision pipeline")
    p.add_argument("--income", type=float, required=True)
    p.add_argument("--savings", type=float, required=True)
    p.add_argument("--data", help="CSV table (province,high_income,low_income,high_deposit,low_deposit)")
    p.add_argument("--config", help="JSON with elasticities, lambda_overrides and rules")
    return parser


# ---------------------------------------------------------------------------
# commands; each returns (text, json-able object)

def _cmd_neg(args):
    cfg = scoi.NegationConfig(args.lam, args.variant)
    if args.set_file:
        with open(args.set_file, encoding="utf-8") as fh:
            s = scoi.FuzzySet.from_json(fh.read())
        out = {k: scoi.lift_negation(s, k, cfg).to_dict() for k in ("opposite", "intermediary", "contradictory")}
        obj = {"lambda": cfg.lam, "variant": cfg.variant, "set": s.to_dict(), **out}
        lines = [f"{'element':<12} {'degree':>10} {'opposite':>10} {'intermed.':>10} {'contrad.':>10}"]
        for u in s.universe:
            vals = [s[u]] + [out[k]["membership"][u] for k in ("opposite", "intermediary", "contradictory")]
            lines.append(f"{u:<12} " + " ".join(f"{_num(v):>10}" for v in vals))
        return "\n".join(lines), obj
    if not args.degrees:
        raise UsageError("give at least one degree or --set FILE")
    rows = []
    for d in args.degrees:
        scoi.check_degree(d)
        rows.append({"degree": d, "opposite": scoi.opp_neg(d), "intermediary": scoi.int_neg(d, cfg),
                     "contradictory": scoi.con_neg(d, cfg)})
    text = "\n".join(
        f"{_num(r['degree'])}: opposite {_num(r['opposite'])}, intermediary {_num(r['intermediary'])}, "
        f"contradictory {_num(r['contradictory'])}"
        for r in rows
    )
    return text, {"lambda": cfg.lam, "variant": cfg.variant, "results": rows}


def _cmd_eval(args):
    f = parse(args.formula)
    assignment = {}
    for item in args.assign:
        if "=" not in item:
            raise UsageError(f"binding must look like A=1/2, got {item!r}")
        k, v = item.split("=", 1)
        assignment[k.strip()] = semantics.parse_value(v.strip())
    cfg = semantics.SemanticsConfig(args.semantics)
    v = semantics.eval_formula(f, assignment, cfg)
    return semantics.show(v), {"formula": render(f), "assignment": {k: semantics.show(x) for k, x in assignment.items()},
                               "semantics": args.semantics, "value": semantics.show(v)}


def _cmd_truth_table(args):
    t = semantics.truth_table(args.formula, semantics.SemanticsConfig(args.semantics))
    return t.to_text(), {"formula": render(parse(args.formula)), "semantics": args.semantics, **t.to_dict()}


def _validity_text(r: semantics.ValidityResult) -> str:
    lines = [r.summary()]
    for ce, v in zip(r.counterexamples, r.counterexample_values):
        lines.append("  " + ", ".join(f"{k}={semantics.show(x)}" for k, x in ce.items()) + f" -> {semantics.show(v)}")
    return "\n".join(lines)


def _cmd_valid(args):
    r = semantics.is_valid(args.formula, semantics.SemanticsConfig(args.semantics))
    return _validity_text(r), {"formula": render(parse(args.formula)), "semantics": args.semantics, **r.to_dict()}


def _cmd_entails(args):
    *premises, goal = args.formulas
    r = semantics.entails(premises, goal, semantics.SemanticsConfig(args.semantics))
    obj = {"premises": [render(parse(p)) for p in premises], "conclusion": render(parse(goal)),
           "semantics": args.semantics, **r.to_dict()}
    return _validity_text(r), obj


def _cmd_check_proof(args):
    items = proof.load_scripts(args.proofs) if args.proofs else proof.load_corpus()
    report = proof.check_corpus(items, _readings(args.reading))
    text = report.to_text() if not args.proofs else "\n".join(r.to_text() for r in report.reports)
    return text, report.to_dict()


def _cmd_audit(args):
    if args.target == "axioms":
        readings = _readings(args.reading)
        table = proof.resolve_axioms(readings)
        names = list(proof.DEFAULT_AXIOM_NAMES)
        if args.all_readings:
            names += [n for n in proof.AXIOMS if n.endswith("_alt")]
        schemas = [proof.AxiomSchema(n, table[n].pattern) for n in names]
        r = semantics.audit_axioms(schemas, semantics.SemanticsConfig(args.semantics), args.spot_checks, args.seed)
        return r.to_text(), r.to_dict()
    cfg = scoi.NegationConfig(args.lam, args.variant)
    grid = audit_mod.GridSpec(tuple(args.lambdas), args.step)
    texts, obj = [], {}
    if args.part in ("pointwise", "all"):
        r = audit_mod.audit_pointwise(grid, cfg)
        texts.append(r.to_text())
        obj["pointwise"] = r.to_dict()
    if args.part in ("sets", "all"):
        r = audit_mod.audit_set_algebra(args.samples, args.universe_size, cfg, args.seed)
        texts.append(r.to_text())
        obj["set_algebra"] = r.to_dict()
    if args.part in ("classify", "all"):
        cs = [audit_mod.classify_negation(w, cfg.lam, grid, cfg.variant) for w in ("opposite", "intermediary", "contradictory")]
        texts.extend(c.to_text() for c in cs)
        obj["classification"] = [c.to_dict() for c in cs]
    return "\n\n".join(texts), obj


def _cmd_trichotomy(args):
    if args.data:
        with open(args.data, encoding="utf-8") as fh:
            t = trichotomy.ConceptTriple.from_json(fh.read())
    else:
        t = trichotomy.integers_example(args.bound)
    parts = trichotomy.partition(t)
    star = trichotomy.verify_star_identity(t)
    obj = {**parts, "star_identity": star.holds}
    text = "\n".join(f"{k}: {' '.join(map(str, v)) or '(empty)'}" for k, v in parts.items())
    text += f"\nintermediary equals the meet of both contradictories: {'yes' if star.holds else 'no'}"
    return text, obj


def _cmd_decide(args):
    cfg = decision.default_config()
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            cfg = decision.DecisionConfig.from_dict(json.load(fh))
        if not cfg.rules:
            cfg = decision.DecisionConfig(cfg.elasticities, cfg.lambda_overrides, decision.default_config().rules)
    table = decision.load_table(args.data, cfg.elasticities) if args.data else decision.default_table(cfg.elasticities)
    r = decision.decide(args.income, args.savings, table=table, config=cfg, variant=args.variant)
    return r.to_text(), r.to_dict()


_COMMANDS = {
    "neg": _cmd_neg,
    "eval": _cmd_eval,
    "truth-table": _cmd_truth_table,
    "valid": _cmd_valid,
    "entails": _cmd_entails,
    "check-proof": _cmd_check_proof,
    "audit": _cmd_audit,
    "trichotomy": _cmd_trichotomy,
    "decide": _cmd_decide,
}


def _error_code(exc: BaseException) -> str:
    if isinstance(exc, FormulaSyntaxError):
        return "syntax"
    if isinstance(exc, semantics.UnboundAtom):
        return "unbound-atom"
    if isinstance(exc, semantics.TooManyAtoms):
        return "too-many-atoms"
    if isinstance(exc, decision.DecisionError):
        return "data"
    if isinstance(exc, (OSError, json.JSONDecodeError)):
        return "io"
    return "domain"


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, obj = _COMMANDS[args.command](args)
    except UsageError as exc:
        err.write(f"error: usage: {exc}\n")
        return 2
    except (ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"error: {_error_code(exc)}: {' '.join(str(msg).split())}\n")
        return 1
    if args.format == "json":
        out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(text + "\n")
    return 0


def main() -> None:
    raise SystemExit(run())
