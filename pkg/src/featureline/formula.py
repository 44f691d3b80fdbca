"""Boolean formulas over feature labels.

Grammar (keywords case-insensitive, ``NOT`` binds tightest)::

    iff  := imp ("<=>" imp)*          left-associative
    imp  := or ("=>" or)*             right-associative
    or   := and (("OR" | "|") and)*
    and  := not (("AND" | "&") not)*
    not  := ("NOT" | "!") not | atom
    atom := identifier | "quoted label" | "(" iff ")" | TRUE | FALSE

Identifiers are letters, digits, underscore and hyphen, not starting with a
digit; anything else must be double-quoted (backslash escapes ``\\"`` and
``\\\\``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import DnfSizeError, FormulaSyntaxError, UnknownLabelError


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Formula:
    """Marker base class for AST nodes."""


@dataclass(frozen=True)
class Atom(Formula):
    label: str

    def __post_init__(self):
        if not self.label:
            raise ValueError("atoms need a non-empty label")


@dataclass(frozen=True)
class Const(Formula):
    value: bool


TRUE = Const(True)
FALSE = Const(False)


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    operands: tuple[Formula, ...]

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValueError("AND needs at least two operands")


@dataclass(frozen=True)
class Or(Formula):
    operands: tuple[Formula, ...]

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValueError("OR needs at least two operands")


@dataclass(frozen=True)
class Implies(Formula):
    antecedent: Formula
    consequent: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


class TriValue(Enum):
    """Strong Kleene three-valued truth values."""

    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


class UnknownPolicy(Enum):
    STRICT = "strict"
    DEFAULT_FALSE = "default-false"


def atoms(f: Formula) -> set[str]:
    """All labels occurring in the formula."""
    if isinstance(f, Atom):
        return {f.label}
    if isinstance(f, Const):
        return set()
    if isinstance(f, Not):
        return atoms(f.operand)
    if isinstance(f, (And, Or)):
        out: set[str] = set()
        for g in f.operands:
            out |= atoms(g)
        return out
    if isinstance(f, Implies):
        return atoms(f.antecedent) | atoms(f.consequent)
    if isinstance(f, Iff):
        return atoms(f.left) | atoms(f.right)
    raise TypeError(f"not a formula node: {f!r}")


# ---------------------------------------------------------------------------
# Parsing

_IDENT_RE = re.compile(r"[A-Za-z_\-][A-Za-z0-9_\-]*")
_KEYWORDS = {"and": "AND", "or": "OR", "not": "NOT", "true": "TRUE", "false": "FALSE"}


@dataclass(frozen=True)
class _Token:
    kind: str   # AND OR NOT TRUE FALSE IDENT STRING LPAREN RPAREN IMP IFF EOF
    value: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if text.startswith("<=>", i):
            tokens.append(_Token("IFF", "<=>", line, start_col))
            i += 3
            col += 3
            continue
        if text.startswith("=>", i):
            tokens.append(_Token("IMP", "=>", line, start_col))
            i += 2
            col += 2
            continue
        if ch == "(":
            tokens.append(_Token("LPAREN", ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch == ")":
            tokens.append(_Token("RPAREN", ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch == "&":
            tokens.append(_Token("AND", ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch == "|":
            tokens.append(_Token("OR", ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch == "!":
            tokens.append(_Token("NOT", ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch == '"':
            value, length = _scan_string(text, i, line, start_col)
            tokens.append(_Token("STRING", value, line, start_col))
            i += length
            col += length
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            word = m.group(0)
            kind = _KEYWORDS.get(word.lower(), "IDENT")
            tokens.append(_Token(kind, word, line, start_col))
            i = m.end()
            col += len(word)
            continue
        raise FormulaSyntaxError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


def _scan_string(text: str, start: int, line: int, col: int) -> tuple[str, int]:
    out: list[str] = []
    i = start + 1
    while i < len(text):
        ch = text[i]
        if ch == "\\":
            if i + 1 >= len(text):
                break
            nxt = text[i + 1]
            if nxt in ('"', "\\"):
                out.append(nxt)
                i += 2
                continue
            raise FormulaSyntaxError(f"bad escape \\{nxt}", line, col + (i - start))
        if ch == '"':
            return "".join(out), i - start + 1
        if ch == "\n":
            break
        out.append(ch)
        i += 1
    raise FormulaSyntaxError("unterminated string", line, col)


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise FormulaSyntaxError(
                f"expected {kind}, found {tok.value or 'end of input'!r}",
                tok.line, tok.column)
        return self.take()

    def parse_iff(self) -> Formula:
        node = self.parse_imp()
        while self.peek().kind == "IFF":
            self.take()
            node = Iff(node, self.parse_imp())
        return node

    def parse_imp(self) -> Formula:
        left = self.parse_or()
        if self.peek().kind == "IMP":
            self.take()
            return Implies(left, self.parse_imp())
        return left

    def parse_or(self) -> Formula:
        parts = [self.parse_and()]
        while self.peek().kind == "OR":
            self.take()
            parts.append(self.parse_and())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def parse_and(self) -> Formula:
        parts = [self.parse_not()]
        while self.peek().kind == "AND":
            self.take()
            parts.append(self.parse_not())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def parse_not(self) -> Formula:
        if self.peek().kind == "NOT":
            self.take()
            return Not(self.parse_not())
        return self.parse_atom()

    def parse_atom(self) -> Formula:
        tok = self.peek()
        if tok.kind == "IDENT":
            self.take()
            return Atom(tok.value)
        if tok.kind == "STRING":
            self.take()
            if not tok.value:
                raise FormulaSyntaxError("empty quoted label", tok.line, tok.column)
            return Atom(tok.value)
        if tok.kind == "TRUE":
            self.take()
            return TRUE
        if tok.kind == "FALSE":
            self.take()
            return FALSE
        if tok.kind == "LPAREN":
            self.take()
            inner = self.parse_iff()
            self.expect("RPAREN")
            return inner
        raise FormulaSyntaxError(
            f"expected a formula, found {tok.value or 'end of input'!r}",
            tok.line, tok.column)


def parse_formula(text: str) -> Formula:
    """Parse formula text into an AST; raises :class:`FormulaSyntaxError`."""
    tokens = _tokenize(text)
    if tokens[0].kind == "EOF":
        raise FormulaSyntaxError("empty formula", 1, 1)
    parser = _Parser(tokens)
    node = parser.parse_iff()
    trailing = parser.peek()
    if trailing.kind != "EOF":
        raise FormulaSyntaxError(
            f"unexpected trailing input {trailing.value!r}",
            trailing.line, trailing.column)
    return node


# ---------------------------------------------------------------------------
# Printing

_PREC = {"iff": 1, "imp": 2, "or": 3, "and": 4, "not": 5, "atom": 6}


def _prec(f: Formula) -> int:
    if isinstance(f, Iff):
        return _PREC["iff"]
    if isinstance(f, Implies):
        return _PREC["imp"]
    if isinstance(f, Or):
        return _PREC["or"]
    if isinstance(f, And):
        return _PREC["and"]
    if isinstance(f, Not):
        return _PREC["not"]
    return _PREC["atom"]


def quote_label(label: str) -> str:
    """Render a label as bare identifier when possible, quoted otherwise."""
    if _IDENT_RE.fullmatch(label) and label.lower() not in _KEYWORDS:
        return label
    escaped = label.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def format_formula(f: Formula) -> str:
    """Canonical text form; ``parse_formula(format_formula(f))`` equals ``f``."""

    def wrap(child: Formula, minimum: int) -> str:
        text = format_formula(child)
        return f"({text})" if _prec(child) < minimum else text

    if isinstance(f, Atom):
        return quote_label(f.label)
    if isinstance(f, Const):
        return "TRUE" if f.value else "FALSE"
    if isinstance(f, Not):
        return f"NOT {wrap(f.operand, _PREC['not'])}"
    if isinstance(f, And):
        return " AND ".join(wrap(g, _PREC["and"] + 1) for g in f.operands)
    if isinstance(f, Or):
        return " OR ".join(wrap(g, _PREC["or"] + 1) for g in f.operands)
    if isinstance(f, Implies):
        left = wrap(f.antecedent, _PREC["imp"] + 1)
        right = wrap(f.consequent, _PREC["imp"])
        return f"{left} => {right}"
    if isinstance(f, Iff):
        left = wrap(f.left, _PREC["iff"])
        right = wrap(f.right, _PREC["iff"] + 1)
        return f"{left} <=> {right}"
    raise TypeError(f"not a formula node: {f!r}")


# ---------------------------------------------------------------------------
# Evaluation


def evaluate(f: Formula, assignment: dict[str, bool],
             unknown_policy: UnknownPolicy = UnknownPolicy.STRICT) -> bool:
    """Two-valued evaluation under a (possibly partial) assignment."""
    if isinstance(f, Atom):
        if f.label in assignment:
            return assignment[f.label]
        if unknown_policy is UnknownPolicy.STRICT:
            raise UnknownLabelError(f.label, "not in assignment")
        return False
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not evaluate(f.operand, assignment, unknown_policy)
    if isinstance(f, And):
        return all(evaluate(g, assignment, unknown_policy) for g in f.operands)
    if isinstance(f, Or):
        return any(evaluate(g, assignment, unknown_policy) for g in f.operands)
    if isinstance(f, Implies):
        return (not evaluate(f.antecedent, assignment, unknown_policy)
                or evaluate(f.consequent, assignment, unknown_policy))
    if isinstance(f, Iff):
        return evaluate(f.left, assignment, unknown_policy) == \
            evaluate(f.right, assignment, unknown_policy)
    raise TypeError(f"not a formula node: {f!r}")


def evaluate3(f: Formula, partial: dict[str, TriValue]) -> TriValue:
    """Strong Kleene evaluation; labels absent from ``partial`` are UNKNOWN."""
    T, F, U = TriValue.TRUE, TriValue.FALSE, TriValue.UNKNOWN
    if isinstance(f, Atom):
        return partial.get(f.label, U)
    if isinstance(f, Const):
        return T if f.value else F
    if isinstance(f, Not):
        v = evaluate3(f.operand, partial)
        return {T: F, F: T, U: U}[v]
    if isinstance(f, And):
        vals = [evaluate3(g, partial) for g in f.operands]
        if F in vals:
            return F
        return U if U in vals else T
    if isinstance(f, Or):
        vals = [evaluate3(g, partial) for g in f.operands]
        if T in vals:
            return T
        return U if U in vals else F
    if isinstance(f, Implies):
        return evaluate3(Or((Not(f.antecedent), f.consequent)), partial)
    if isinstance(f, Iff):
        lv = evaluate3(f.left, partial)
        rv = evaluate3(f.right, partial)
        if U in (lv, rv):
            return U
        return T if lv == rv else F
    raise TypeError(f"not a formula node: {f!r}")


# ---------------------------------------------------------------------------
# Normal form

DEFAULT_DNF_CLAUSE_CAP = 4096

_Literal = tuple[str, bool]  # (label, positive)


def desugar(f: Formula) -> Formula:
    """Rewrite IMPLIES and IFF into AND/OR/NOT."""
    if isinstance(f, (Atom, Const)):
        return f
    if isinstance(f, Not):
        return Not(desugar(f.operand))
    if isinstance(f, And):
        return And(tuple(desugar(g) for g in f.operands))
    if isinstance(f, Or):
        return Or(tuple(desugar(g) for g in f.operands))
    if isinstance(f, Implies):
        return Or((Not(desugar(f.antecedent)), desugar(f.consequent)))
    if isinstance(f, Iff):
        a, b = desugar(f.left), desugar(f.right)
        return Or((And((a, b)), And((Not(a), Not(b)))))
    raise TypeError(f"not a formula node: {f!r}")


def to_nnf(f: Formula) -> Formula:
    """Negation normal form with constants folded; IMPLIES/IFF are desugared."""

    def push(g: Formula, negate: bool) -> Formula:
        if isinstance(g, Const):
            return Const(g.value != negate)
        if isinstance(g, Atom):
            return Not(g) if negate else g
        if isinstance(g, Not):
            return push(g.operand, not negate)
        if isinstance(g, (And, Or)):
            parts = tuple(push(op, negate) for op in g.operands)
            make_and = isinstance(g, And) != negate
            # fold constants, splice nested same-type nodes, drop duplicates
            kept: list[Formula] = []
            for p in parts:
                if isinstance(p, Const):
                    if p.value == make_and:
                        continue  # neutral element
                    return Const(not make_and)  # absorbing element
                nested = (p.operands if isinstance(p, And if make_and else Or)
                          else (p,))
                for q in nested:
                    if q not in kept:
                        kept.append(q)
            if not kept:
                return Const(make_and)
            if len(kept) == 1:
                return kept[0]
            return And(tuple(kept)) if make_and else Or(tuple(kept))
        raise TypeError(f"unexpected node in NNF: {g!r}")

    return push(desugar(f), False)


def to_dnf(f: Formula, max_clauses: int = DEFAULT_DNF_CLAUSE_CAP) -> Formula:
    """Disjunctive normal form, capped at ``max_clauses`` clauses.

    Clauses with complementary literals are dropped and duplicates are
    merged, so the result is a plain OR of ANDs of literals (or a single
    conjunct, literal or constant).
    """
    nnf = to_nnf(f)
    if isinstance(nnf, Const):
        return TRUE if nnf.value else FALSE

    def clauses_of(g: Formula) -> list[tuple[_Literal, ...]]:
        if isinstance(g, Atom):
            return [((g.label, True),)]
        if isinstance(g, Not):
            assert isinstance(g.operand, Atom)
            return [((g.operand.label, False),)]
        if isinstance(g, Or):
            out: list[tuple[_Literal, ...]] = []
            seen: set[frozenset[_Literal]] = set()
            for op in g.operands:
                for clause in clauses_of(op):
                    key = frozenset(clause)
                    if key in seen:
                        continue
                    seen.add(key)
                    out.append(clause)
                    if len(out) > max_clauses:
                        raise DnfSizeError(len(out), max_clauses)
            return out
        if isinstance(g, And):
            acc: list[tuple[_Literal, ...]] = [()]
            for op in g.operands:
                branch = clauses_of(op)
                nxt: list[tuple[_Literal, ...]] = []
                seen = set()
                for left in acc:
                    for right in branch:
                        merged = _merge_clause(left, right)
                        if merged is None:
                            continue  # complementary literals
                        key = frozenset(merged)
                        if key in seen:
                            continue
                        seen.add(key)
                        nxt.append(merged)
                        if len(nxt) > max_clauses:
                            raise DnfSizeError(len(nxt), max_clauses)
                acc = nxt
            return acc
        raise TypeError(f"unexpected node in DNF: {g!r}")

    clauses = clauses_of(nnf)
    if not clauses:
        return FALSE

    def lit(l: _Literal) -> Formula:
        return Atom(l[0]) if l[1] else Not(Atom(l[0]))

    conjuncts = [lit(c[0]) if len(c) == 1 else And(tuple(lit(l) for l in c))
                 for c in clauses]
    return conjuncts[0] if len(conjuncts) == 1 else Or(tuple(conjuncts))


def _merge_clause(left: tuple[_Literal, ...],
                  right: tuple[_Literal, ...]) -> tuple[_Literal, ...] | None:
    polarity = dict(left)
    out = list(left)
    for label, pos in right:
        if label in polarity:
            if polarity[label] != pos:
                return None
            continue
        polarity[label] = pos
        out.append((label, pos))
    return tuple(out)


def is_dnf(f: Formula) -> bool:
    """True when the formula is an OR of ANDs of literals (or simpler)."""

    def literal(g: Formula) -> bool:
        return isinstance(g, Atom) or (isinstance(g, Not) and isinstance(g.operand, Atom))

    def conjunct(g: Formula) -> bool:
        if literal(g):
            return True
        return isinstance(g, And) and all(literal(op) for op in g.operands)

    if isinstance(f, Const) or conjunct(f):
        return True
    return isinstance(f, Or) and all(conjunct(op) for op in f.operands)
