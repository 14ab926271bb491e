"""Herbrand base computation and full grounding of safe programs."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .syntax import Atom, Literal, Program, Rule, Term, parse_program


@dataclass(frozen=True)
class GroundProgram:
    """Variable-free rules and constraints plus the Herbrand base.

    Rules are kept in a deterministic order (first occurrence) with
    duplicates removed.
    """

    rules: tuple[Rule, ...] = ()
    constraints: tuple[Rule, ...] = ()
    base: frozenset[Atom] = frozenset()

    def __post_init__(self):
        rules = tuple(dict.fromkeys(self.rules))
        constraints = tuple(dict.fromkeys(self.constraints))
        for r in rules + constraints:
            if not r.is_ground:
                raise ValueError(f"rule {r} is not ground")
        if any(r.head is None for r in rules) or any(
                r.head is not None for r in constraints):
            raise ValueError("rules need heads and constraints must not have one")
        occurring = {l.atom for r in rules + constraints for l in r.literals()}
        object.__setattr__(self, "rules", rules)
        object.__setattr__(self, "constraints", constraints)
        object.__setattr__(self, "base", frozenset(self.base) | occurring)

    @classmethod
    def from_rules(cls, rules: Iterable[Rule],
                   constraints: Iterable[Rule] = ()) -> "GroundProgram":
        return cls(tuple(rules), tuple(constraints))

    @property
    def is_extended(self) -> bool:
        return any(l.negated for r in self.rules + self.constraints
                   for l in r.literals())

    @property
    def is_positive(self) -> bool:
        return all(not r.neg for r in self.rules + self.constraints)

    def literal_universe(self) -> frozenset[Literal]:
        """All literals over the base; both signs only for extended programs."""
        lits = {Literal(a) for a in self.base}
        if self.is_extended:
            lits |= {Literal(a, True) for a in self.base}
        return frozenset(lits)

    def all_literals(self) -> frozenset[Literal]:
        """Both signs over the base, regardless of the program's kind."""
        return frozenset(Literal(a, neg) for a in self.base for neg in (False, True))

    def __str__(self) -> str:
        return "".join(f"{r}\n" for r in self.rules + self.constraints)


def herbrand_base(p: Program) -> frozenset[Atom]:
    constants = sorted(p.constants)
    base = set()
    for pred, arity in p.predicates.items():
        for args in itertools.product(constants, repeat=arity):
            base.add(Atom(pred, args))
    return frozenset(base)


def _substitute(l: Literal, theta: dict[Term, Term]) -> Literal:
    if l.atom.is_ground:
        return l
    args = tuple(theta.get(t, t) for t in l.atom.args)
    return Literal(Atom(l.atom.predicate, args), l.negated)


def instantiate(rule: Rule, constants: Iterable[Term]) -> list[Rule]:
    """All ground instances of ``rule`` over ``constants`` (c**v of them)."""
    variables = rule.variables()
    if not variables:
        return [rule]
    out = []
    for values in itertools.product(sorted(set(constants)), repeat=len(variables)):
        theta = dict(zip(variables, values))
        head = _substitute(rule.head, theta) if rule.head is not None else None
        out.append(Rule(head,
                        tuple(_substitute(l, theta) for l in rule.pos),
                        tuple(_substitute(l, theta) for l in rule.neg),
                        rule.origin))
    return out


def prune(rules: Iterable[Rule]) -> list[Rule]:
    """Drop rules whose positive body needs a literal that heads no rule.

    Repeated until nothing changes. Only applied to rules: a constraint
    over an underivable literal can still fire in the saturated
    inconsistent answer set, so constraints are left alone.
    """
    rules = list(rules)
    while True:
        heads = {r.head for r in rules}
        kept = [r for r in rules if all(l in heads for l in r.pos)]
        if len(kept) == len(rules):
            return kept
        rules = kept


def ground(p: Program, prune_rules: bool = False) -> GroundProgram:
    rules = [g for r in p.rules for g in instantiate(r, p.constants)]
    constraints = [g for r in p.constraints for g in instantiate(r, p.constants)]
    if prune_rules:
        rules = prune(rules)
    return GroundProgram(tuple(rules), tuple(constraints), herbrand_base(p))


def as_ground(p: Program | GroundProgram) -> GroundProgram:
    return p if isinstance(p, GroundProgram) else ground(p)


def ground_text(text: str, prune_rules: bool = False) -> GroundProgram:
    return ground(parse_program(text), prune_rules)
