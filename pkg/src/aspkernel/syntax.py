"""AST, parser and printer for DATALOG programs with negation as failure
and explicit negation.

Surface syntax::

    head :- b1, not b2, -b3.     % rule
    fact.                        % fact
    :- b1, not b2.               % constraint
    ?- b1, not b2.               % query (parse_query only)

Identifiers starting with an uppercase letter are variables; lowercase
identifiers and integers are constants and predicate names.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional


class ParseError(ValueError):
    """Raised on malformed program text. Carries a 1-based line/column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line else ""
        super().__init__(f"{where}{message}")


class ArityError(ParseError):
    pass


class UnsafeRuleError(ParseError):
    pass


@dataclass(frozen=True, order=True)
class Term:
    """A constant or a variable. Variables start with an uppercase letter."""

    name: str

    @property
    def is_variable(self) -> bool:
        return self.name[:1].isupper()

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Atom:
    predicate: str
    args: tuple[Term, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def is_ground(self) -> bool:
        return not any(t.is_variable for t in self.args)

    def variables(self) -> Iterator[Term]:
        return (t for t in self.args if t.is_variable)

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(map(str, self.args))})"


@dataclass(frozen=True, order=True)
class Literal:
    """An atom, possibly under explicit negation (``-p``)."""

    atom: Atom
    negated: bool = False
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        # literals are hashed constantly during search
        object.__setattr__(self, "_hash", hash((self.atom, self.negated)))

    def __hash__(self) -> int:
        return self._hash

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.negated)

    @property
    def is_ground(self) -> bool:
        return self.atom.is_ground

    def __str__(self) -> str:
        return ("-" if self.negated else "") + str(self.atom)

    def __repr__(self) -> str:
        return f"lit({str(self)!r})"


def lit(text: str) -> Literal:
    """Shorthand: ``lit("-p(a)")`` parses a single ground or non-ground literal."""
    return parse_literal(text)


@dataclass(frozen=True)
class Rule:
    """``head :- pos, not neg``. A rule without a head is a constraint."""

    head: Optional[Literal]
    pos: tuple[Literal, ...] = ()
    neg: tuple[Literal, ...] = ()
    origin: Optional[tuple[int, int]] = field(default=None, compare=False)

    @property
    def body(self) -> frozenset[Literal]:
        return frozenset(self.pos) | frozenset(self.neg)

    @property
    def is_fact(self) -> bool:
        return self.head is not None and not self.pos and not self.neg

    @property
    def is_constraint(self) -> bool:
        return self.head is None

    @property
    def is_positive(self) -> bool:
        return not self.neg

    @property
    def is_ground(self) -> bool:
        return all(l.is_ground for l in self.literals())

    def literals(self) -> Iterator[Literal]:
        if self.head is not None:
            yield self.head
        yield from self.pos
        yield from self.neg

    def variables(self) -> list[Term]:
        """Distinct variables in order of first occurrence."""
        seen: dict[Term, None] = {}
        for l in self.literals():
            for v in l.atom.variables():
                seen.setdefault(v, None)
        return list(seen)

    def __str__(self) -> str:
        body = [str(l) for l in self.pos] + [f"not {l}" for l in self.neg]
        if self.head is None:
            return f":- {', '.join(body)}."
        if not body:
            return f"{self.head}."
        return f"{self.head} :- {', '.join(body)}."


def signature_of(rules: Iterable[Rule]) -> dict[str, int]:
    """Predicate -> arity map. Raises ArityError on a clash."""
    sig: dict[str, int] = {}
    for r in rules:
        for l in r.literals():
            a = l.atom
            known = sig.setdefault(a.predicate, a.arity)
            if known != a.arity:
                line, col = r.origin or (0, 0)
                raise ArityError(
                    f"predicate {a.predicate!r} used with arity {a.arity}, "
                    f"previously {known}", line, col)
    return sig


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...] = ()
    constraints: tuple[Rule, ...] = ()
    constants: frozenset[Term] = field(init=False, compare=False)
    predicates: dict[str, int] = field(init=False, compare=False)

    def __post_init__(self):
        if any(r.head is None for r in self.rules):
            raise ValueError("headless rule among program rules; use constraints")
        if any(r.head is not None for r in self.constraints):
            raise ValueError("constraint with a head")
        everything = self.rules + self.constraints
        consts = frozenset(t for r in everything for l in r.literals()
                           for t in l.atom.args if not t.is_variable)
        object.__setattr__(self, "constants", consts)
        object.__setattr__(self, "predicates", signature_of(everything))

    @property
    def is_extended(self) -> bool:
        """True when explicit negation occurs anywhere."""
        return any(l.negated for r in self.rules + self.constraints
                   for l in r.literals())

    def __add__(self, other: "Program") -> "Program":
        return Program(self.rules + other.rules,
                       self.constraints + other.constraints)


@dataclass(frozen=True)
class Query:
    pos: tuple[Literal, ...] = ()
    neg: tuple[Literal, ...] = ()

    def __post_init__(self):
        for l in self.pos + self.neg:
            if not l.is_ground:
                raise ParseError(f"query literal {l} is not ground")

    def __str__(self) -> str:
        body = [str(l) for l in self.pos] + [f"not {l}" for l in self.neg]
        return f"?- {', '.join(body)}."


# --------------------------------------------------------------------------
# lexer

class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<nl>\n)
  | (?P<comment>%[^\n]*)
  | (?P<if>:-)
  | (?P<query>\?-)
  | (?P<ident>[a-z][A-Za-z0-9_]*|[0-9]+)
  | (?P<var>[A-Z][A-Za-z0-9_]*)
  | (?P<minus>-)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<comma>,)
  | (?P<dot>\.)
""", re.VERBOSE)


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}",
                             line, pos - line_start + 1)
        kind = m.lastgroup
        col = pos - line_start + 1
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "ident" and m.group() == "not":
            tokens.append(Token("not", "not", line, col))
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# --------------------------------------------------------------------------
# parser

class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, msg: str, tok: Optional[Token] = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.column)

    def expect(self, kind: str) -> Token:
        tok = self.tok
        if tok.kind != kind:
            found = repr(tok.text) if tok.text else "end of input"
            raise self.error(f"expected {kind}, found {found}")
        self.i += 1
        return tok

    def accept(self, kind: str) -> Optional[Token]:
        if self.tok.kind == kind:
            self.i += 1
            return self.tokens[self.i - 1]
        return None

    def literal(self) -> Literal:
        negated = self.accept("minus") is not None
        name = self.expect("ident").text
        if name[0].isdigit():
            raise self.error(f"integer {name} cannot be a predicate",
                             self.tokens[self.i - 1])
        args: list[Term] = []
        if self.accept("lpar"):
            while True:
                tok = self.tok
                if tok.kind not in ("ident", "var"):
                    raise self.error(f"expected a term, found {tok.text!r}")
                self.i += 1
                args.append(Term(tok.text))
                if not self.accept("comma"):
                    break
            self.expect("rpar")
        return Literal(Atom(name, tuple(args)), negated)

    def body(self) -> tuple[list[Literal], list[Literal]]:
        pos: list[Literal] = []
        neg: list[Literal] = []
        while True:
            if self.accept("not"):
                neg.append(self.literal())
            else:
                pos.append(self.literal())
            if not self.accept("comma"):
                return pos, neg

    def statement(self) -> tuple[str, Rule]:
        start = self.tok
        origin = (start.line, start.column)
        if self.accept("if"):
            pos, neg = self.body()
            self.expect("dot")
            return "constraint", Rule(None, tuple(pos), tuple(neg), origin)
        if self.accept("query"):
            pos, neg = self.body()
            self.expect("dot")
            return "query", Rule(None, tuple(pos), tuple(neg), origin)
        head = self.literal()
        pos, neg = [], []
        if self.accept("if"):
            pos, neg = self.body()
        self.expect("dot")
        return "rule", Rule(head, tuple(pos), tuple(neg), origin)


def check_safety(rule: Rule) -> None:
    """Every variable of the head or the negative body must occur positively."""
    bound = {v for l in rule.pos for v in l.atom.variables()}
    others = list(rule.neg)
    if rule.head is not None:
        others.insert(0, rule.head)
    for l in others:
        for v in l.atom.variables():
            if v not in bound:
                line, col = rule.origin or (0, 0)
                raise UnsafeRuleError(
                    f"unsafe variable {v} in rule {rule}: "
                    "no positive body occurrence", line, col)


def parse_program(text: str) -> Program:
    parser = _Parser(text)
    rules: list[Rule] = []
    constraints: list[Rule] = []
    while parser.tok.kind != "eof":
        start = parser.tok
        kind, rule = parser.statement()
        if kind == "query":
            raise ParseError("queries (?-) are not allowed in programs",
                             start.line, start.column)
        check_safety(rule)
        (constraints if kind == "constraint" else rules).append(rule)
    signature_of(rules + constraints)
    return Program(tuple(rules), tuple(constraints))


def parse_literal(text: str) -> Literal:
    parser = _Parser(text)
    l = parser.literal()
    parser.expect("eof")
    return l


def parse_query(text: str) -> Query:
    """Parse ``?- body.``; the ``?-`` prefix and the final dot are optional."""
    parser = _Parser(text)
    parser.accept("query")
    pos, neg = parser.body()
    parser.accept("dot")
    parser.expect("eof")
    return Query(tuple(pos), tuple(neg))


def parse_literal_set(text: str) -> frozenset[Literal]:
    """Parse a comma-separated list of literals such as ``"b,-a"``."""
    text = text.strip().removeprefix("{").removesuffix("}").strip()
    if not text:
        return frozenset()
    parser = _Parser(text)
    out = [parser.literal()]
    while parser.accept("comma"):
        out.append(parser.literal())
    parser.expect("eof")
    return frozenset(out)


def print_program(p: Program) -> str:
    return "".join(f"{r}\n" for r in p.rules + p.constraints)
