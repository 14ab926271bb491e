"""Stable-model semantics: immediate consequences, the reduct, stability
and answer-set enumeration.

Candidate sets are plain ``frozenset``s of ground :class:`Literal`. An
explicitly negated literal ``-a`` is handled as an atom of its own by the
fixpoint machinery; a set holding both ``a`` and ``-a`` is inconsistent and
gets saturated to every literal over the base.
"""
from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass
from typing import AbstractSet, Iterable, Optional

from .grounder import GroundProgram
from .syntax import Atom, Literal, Rule

DEFAULT_NODE_CAP = 10**6
DEFAULT_ORACLE_BOUND = 20


class ResourceLimitExceeded(RuntimeError):
    """The search visited more nodes than allowed."""


class InconsistentAnswerSetError(RuntimeError):
    """An inconsistent answer set exists and inconsistency was forbidden."""


class UniverseTooLarge(ValueError):
    """Brute-force enumeration was asked to cover too many literals."""


class NotPositiveError(ValueError):
    """A positive program was required but a ``not`` literal is present."""


@dataclass(frozen=True)
class AnswerSet:
    literals: frozenset[Literal]
    consistent: bool = True

    def __contains__(self, l: Literal) -> bool:
        return l in self.literals

    def __iter__(self):
        return iter(sorted(self.literals, key=str))

    def __len__(self) -> int:
        return len(self.literals)

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"

    def strings(self) -> list[str]:
        return [str(l) for l in self]


def is_consistent(s: AbstractSet[Literal]) -> bool:
    return not any(l.negated and l.complement() in s for l in s)


def canonical_key(s: AbstractSet[Literal]) -> tuple:
    return (len(s), sorted(map(str, s)))


def node_cap_from_env(default: int = DEFAULT_NODE_CAP) -> int:
    value = os.environ.get("ASP_NODE_CAP")
    return int(value) if value else default


# --------------------------------------------------------------------------
# positive programs

def _require_positive(rules: Iterable[Rule]) -> None:
    for r in rules:
        if r.neg:
            raise NotPositiveError(f"rule {r} has a negative body")


def tp_step(p: GroundProgram, s: AbstractSet[Literal]) -> frozenset[Literal]:
    """One application of the immediate consequence operator, kept cumulative."""
    _require_positive(p.rules)
    out = set(s)
    for r in p.rules:
        if all(l in s for l in r.pos):
            out.add(r.head)
    return frozenset(out)


def tp_fixpoint(p: GroundProgram) -> tuple[frozenset[Literal], int]:
    """Iterate :func:`tp_step` from the empty set.

    Returns the fixpoint and the number of applications made, counting the
    last one that changed nothing.
    """
    s: frozenset[Literal] = frozenset()
    steps = 0
    while True:
        nxt = tp_step(p, s)
        steps += 1
        if nxt == s:
            return s, steps
        s = nxt


def _least_model(rules: Iterable[Rule]) -> set[Literal]:
    # counter-based forward chaining, linear in program size
    rules = list(rules)
    waiting = [len(set(r.pos)) for r in rules]
    watchers: dict[Literal, list[int]] = defaultdict(list)
    for i, r in enumerate(rules):
        for l in set(r.pos):
            watchers[l].append(i)
    model: set[Literal] = set()
    queue = [r.head for r, n in zip(rules, waiting) if n == 0]
    while queue:
        l = queue.pop()
        if l in model:
            continue
        model.add(l)
        for i in watchers.get(l, ()):
            waiting[i] -= 1
            if waiting[i] == 0:
                queue.append(rules[i].head)
    return model


def minimal_model(p: GroundProgram) -> frozenset[Literal]:
    """Least set of literals closed under the rules of a positive program."""
    _require_positive(p.rules)
    return frozenset(_least_model(p.rules))


# --------------------------------------------------------------------------
# reduct and stability

def _reduce(rules: Iterable[Rule], s: AbstractSet[Literal]) -> list[Rule]:
    return [Rule(r.head, r.pos, (), r.origin) for r in rules
            if not any(l in s for l in r.neg)]


def reduct(p: GroundProgram, s: AbstractSet[Literal]) -> GroundProgram:
    """Delete rules blocked by ``s``, then strip ``not`` from the rest."""
    return GroundProgram(tuple(_reduce(p.rules, s)),
                         tuple(_reduce(p.constraints, s)), p.base)


def saturate_inconsistent(s: AbstractSet[Literal],
                          base: Iterable[Atom]) -> frozenset[Literal]:
    if is_consistent(s):
        return frozenset(s)
    return frozenset(Literal(a, neg) for a in base for neg in (False, True))


def violated_constraints(p: GroundProgram, s: AbstractSet[Literal]) -> list[Rule]:
    return [c for c in p.constraints
            if all(l in s for l in c.pos) and not any(l in s for l in c.neg)]


def stable_closure(p: GroundProgram, s: AbstractSet[Literal]) -> frozenset[Literal]:
    """The answer set of the reduct of ``p`` relative to ``s``, saturated."""
    m = _least_model(_reduce(p.rules, s))
    return saturate_inconsistent(m, p.base)


def is_stable(p: GroundProgram, s: AbstractSet[Literal]) -> bool:
    s = frozenset(s)
    return stable_closure(p, s) == s and not violated_constraints(p, s)


def _answer_set(s: frozenset[Literal]) -> AnswerSet:
    return AnswerSet(s, is_consistent(s))


def _finish(found: Iterable[frozenset[Literal]], limit: Optional[int],
            forbid_inconsistent: bool) -> list[AnswerSet]:
    models = sorted(set(found), key=canonical_key)
    out = [_answer_set(m) for m in models]
    if forbid_inconsistent and any(not a.consistent for a in out):
        raise InconsistentAnswerSetError(
            "the program has an inconsistent answer set")
    return out if limit is None else out[:limit]


# --------------------------------------------------------------------------
# enumeration

class _Search:
    """Backtracking over the literals that occur under ``not``.

    Each such literal is assumed in or out of the answer set. Two bounds
    prune the tree: ``lower`` is derivable from rules whose ``not`` literals
    are all assumed out, ``upper`` from rules none of whose ``not`` literals
    is assumed in. Any consistent answer set agreeing with the assumptions
    lies between them.
    """

    def __init__(self, p: GroundProgram, node_cap: int):
        self.p = p
        self.node_cap = node_cap
        self.nodes = 0
        self.choices = sorted({l for r in p.rules + p.constraints for l in r.neg},
                              key=str)
        self.found: list[frozenset[Literal]] = []

    def bounds(self, ins, outs):
        rules = self.p.rules
        lower = _least_model(r for r in rules if all(l in outs for l in r.neg))
        upper = _least_model(r for r in rules if not any(l in ins for l in r.neg))
        return lower, upper

    def propagate(self, ins: set, outs: set) -> bool:
        while True:
            lower, upper = self.bounds(ins, outs)
            if not is_consistent(lower):
                return False
            if any(l in lower for l in outs) or any(l not in upper for l in ins):
                return False
            changed = False
            for l in self.choices:
                if l in ins or l in outs:
                    continue
                if l in lower:
                    ins.add(l)
                    changed = True
                elif l not in upper:
                    outs.add(l)
                    changed = True
            if not changed:
                return True

    def run(self) -> list[frozenset[Literal]]:
        self.visit(set(), set())
        return self.found

    def visit(self, ins: set, outs: set) -> None:
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise ResourceLimitExceeded(
                f"search exceeded {self.node_cap} nodes")
        if not self.propagate(ins, outs):
            return
        open_ = [l for l in self.choices if l not in ins and l not in outs]
        if not open_:
            self.leaf(ins)
            return
        l = open_[0]
        self.visit(ins | {l}, set(outs))
        self.visit(set(ins), outs | {l})

    def leaf(self, ins: set) -> None:
        m = frozenset(_least_model(_reduce(self.p.rules, ins)))
        if not is_consistent(m):
            return
        if any((l in m) != (l in ins) for l in self.choices):
            return
        if violated_constraints(self.p, m):
            return
        self.found.append(m)


def enumerate_answer_sets(p: GroundProgram, limit: Optional[int] = None, *,
                          node_cap: Optional[int] = None,
                          forbid_inconsistent: bool = False) -> list[AnswerSet]:
    """All answer sets of ``p`` in canonical order (size, then literal text).

    ``limit`` truncates the canonically ordered list. Raises
    :class:`ResourceLimitExceeded` once more than ``node_cap`` search nodes
    are visited.
    """
    cap = node_cap_from_env() if node_cap is None else node_cap
    if cap < 1:
        raise ValueError("node_cap must be at least 1")
    if p.is_extended:
        everything = p.all_literals()
        if is_stable(p, everything):
            # an inconsistent answer set excludes every other one: any reduct
            # relative to a smaller set keeps at least the rules that derived
            # the contradiction
            return _finish([everything], limit, forbid_inconsistent)
    return _finish(_Search(p, cap).run(), limit, forbid_inconsistent)


def brute_force_answer_sets(p: GroundProgram, limit: Optional[int] = None, *,
                            bound: int = DEFAULT_ORACLE_BOUND,
                            forbid_inconsistent: bool = False) -> list[AnswerSet]:
    """Test every subset of the literal universe for stability."""
    universe = sorted(p.literal_universe(), key=str)
    if len(universe) > bound:
        raise UniverseTooLarge(
            f"{len(universe)} literals exceed the oracle bound of {bound}")
    found = []
    for mask in range(1 << len(universe)):
        s = frozenset(l for i, l in enumerate(universe) if mask >> i & 1)
        if is_stable(p, s):
            found.append(s)
    return _finish(found, limit, forbid_inconsistent)
