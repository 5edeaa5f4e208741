"""Formula trees, the concrete ASCII syntax, and the contradictory-negation rewrite.

Grammar (whitespace insignificant)::

    formula := implies
    implies := or ( "->" implies )?
    or      := and ( "|" and )*
    and     := unary ( "&" unary )*
    unary   := ( "!" | "#" | "~" )* primary
    primary := atom | "(" formula ")"
    atom    := [A-Za-z][A-Za-z0-9_]*

``!`` is contradictory negation, ``#`` opposite negation, ``~`` intermediary
negation.  The glyphs ¬ ⌐ ∼ ∧ ∨ → are accepted as input aliases.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not _ATOM_RE.fullmatch(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class ConNeg:
    arg: "Formula"


@dataclass(frozen=True)
class OppNeg:
    arg: "Formula"


@dataclass(frozen=True)
class IntNeg:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, ConNeg, OppNeg, IntNeg, And, Or, Implies]
Unary = (ConNeg, OppNeg, IntNeg)
Binary = (And, Or, Implies)

_ATOM_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")

UNARY_SYMBOL = {ConNeg: "!", OppNeg: "#", IntNeg: "~"}
BINARY_SYMBOL = {And: "&", Or: "|", Implies: "->"}
_PREC = {Implies: 1, Or: 2, And: 3, ConNeg: 4, OppNeg: 4, IntNeg: 4, Atom: 5}

_ALIASES = {
    "¬": "!",
    "⌐": "#",
    "∼": "~",
    "∧": "&",
    "∨": "|",
    "→": "->",
}


class FormulaSyntaxError(ValueError):
    """Lexical or syntax error; ``column`` is 1-based."""

    def __init__(self, message: str, text: str, column: int, expected: tuple[str, ...] = ()):
        self.text = text
        self.column = column
        self.expected = expected
        detail = f" (expected one of: {', '.join(expected)})" if expected else ""
        super().__init__(f"column {column}: {message}{detail}")


# ---------------------------------------------------------------------------
# lexer

@dataclass(frozen=True)
class _Token:
    kind: str  # "atom", "op", "(", ")", "end"
    value: str
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        col = i + 1
        if ch.isspace():
            i += 1
            continue
        ch = _ALIASES.get(ch, ch)
        if ch in "!#~&|":
            tokens.append(_Token("op", ch, col))
            i += 1
        elif ch == "-":
            if text.startswith("->", i):
                tokens.append(_Token("op", "->", col))
                i += 2
            else:
                raise FormulaSyntaxError("lone '-'", text, col, ("->",))
        elif ch == "->":
            tokens.append(_Token("op", "->", col))
            i += 1
        elif ch in "()":
            tokens.append(_Token(ch, ch, col))
            i += 1
        else:
            m = _ATOM_RE.match(text, i)
            if not m:
                raise FormulaSyntaxError(f"unexpected character {text[i]!r}", text, col)
            tokens.append(_Token("atom", m.group(), col))
            i = m.end()
    tokens.append(_Token("end", "", n + 1))
    return tokens


# ---------------------------------------------------------------------------
# parser

_PRIMARY_START = ("atom", "(", "!", "#", "~")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def accept(self, value: str) -> bool:
        tok = self.peek()
        if tok.kind in ("op", "(", ")") and tok.value == value:
            self.pos += 1
            return True
        return False

    def fail(self, expected: tuple[str, ...]):
        tok = self.peek()
        found = "end of input" if tok.kind == "end" else repr(tok.value)
        raise FormulaSyntaxError(f"unexpected {found}", self.text, tok.column, expected)

    def formula(self) -> Formula:
        return self.implies()

    def implies(self) -> Formula:
        left = self.disjunction()
        if self.accept("->"):
            return Implies(left, self.implies())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.accept("|"):
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.accept("&"):
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        prefixes = []
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value in ("!", "#", "~"):
                prefixes.append(tok.value)
                self.pos += 1
            else:
                break
        f = self.primary()
        for sym in reversed(prefixes):
            f = {"!": ConNeg, "#": OppNeg, "~": IntNeg}[sym](f)
        return f

    def primary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "atom":
            self.pos += 1
            return Atom(tok.value)
        if self.accept("("):
            f = self.formula()
            if not self.accept(")"):
                self.fail((")", "&", "|", "->"))
            return f
        self.fail(_PRIMARY_START)


def parse(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.peek().kind != "end":
        p.fail(("&", "|", "->", "end of input"))
    return f


# ---------------------------------------------------------------------------
# printer

def render(f: Formula) -> str:
    """Canonical ASCII text with the fewest parentheses that reparse to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Unary):
        inner = render(f.arg)
        if _PREC[type(f.arg)] < 4:
            inner = f"({inner})"
        return UNARY_SYMBOL[type(f)] + inner
    prec = _PREC[type(f)]
    left, right = render(f.left), render(f.right)
    if isinstance(f, Implies):
        # right associative
        if _PREC[type(f.left)] <= prec:
            left = f"({left})"
        if _PREC[type(f.right)] < prec:
            right = f"({right})"
    else:
        if _PREC[type(f.left)] < prec:
            left = f"({left})"
        if _PREC[type(f.right)] <= prec:
            right = f"({right})"
    return f"{left} {BINARY_SYMBOL[type(f)]} {right}"


def to_formula(f: "Formula | str") -> Formula:
    return parse(f) if isinstance(f, str) else f


# ---------------------------------------------------------------------------
# traversal helpers

def atoms(f: Formula) -> list[str]:
    """Atom names of ``f`` in sorted order, without repetition."""
    return sorted(set(_iter_atoms(f)))


def _iter_atoms(f: Formula) -> Iterator[str]:
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            yield g.name
        elif isinstance(g, Unary):
            stack.append(g.arg)
        else:
            stack.append(g.left)
            stack.append(g.right)


def substitute(f: Formula, mapping: dict[str, Formula]) -> Formula:
    """Replace atoms by formulas simultaneously; unmapped atoms are kept."""
    if isinstance(f, Atom):
        return mapping.get(f.name, f)
    if isinstance(f, Unary):
        return type(f)(substitute(f.arg, mapping))
    return type(f)(substitute(f.left, mapping), substitute(f.right, mapping))


def depth(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Unary):
        return 1 + depth(f.arg)
    return 1 + max(depth(f.left), depth(f.right))


def size(f: Formula) -> int:
    if isinstance(f, Atom):
        return 1
    if isinstance(f, Unary):
        return 1 + size(f.arg)
    return 1 + size(f.left) + size(f.right)


def expand_connegation(f: Formula) -> Formula:
    """Rewrite every ``!g`` bottom-up as ``#g' | ~g'``."""
    if isinstance(f, Atom):
        return f
    if isinstance(f, ConNeg):
        g = expand_connegation(f.arg)
        return Or(OppNeg(g), IntNeg(g))
    if isinstance(f, Unary):
        return type(f)(expand_connegation(f.arg))
    return type(f)(expand_connegation(f.left), expand_connegation(f.right))


def random_formula(rng, atom_names, max_depth: int) -> Formula:
    """Draw a random formula of depth at most ``max_depth`` (``rng`` is a numpy Generator)."""
    if max_depth == 0 or rng.random() < 0.25:
        return Atom(atom_names[int(rng.integers(len(atom_names)))])
    r = int(rng.integers(6))
    if r < 3:
        return (ConNeg, OppNeg, IntNeg)[r](random_formula(rng, atom_names, max_depth - 1))
    return (And, Or, Implies)[r - 3](
        random_formula(rng, atom_names, max_depth - 1),
        random_formula(rng, atom_names, max_depth - 1),
    )
