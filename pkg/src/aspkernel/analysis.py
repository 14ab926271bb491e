"""Program analyses: stratification, categoricity, support and justification."""
from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Optional, Union

import networkx as nx

from .engine import AnswerSet, enumerate_answer_sets, is_consistent, is_stable
from .grounder import GroundProgram
from .syntax import Literal, Rule

LevelMapping = dict[Literal, int]
Model = Union[AnswerSet, AbstractSet[Literal]]


class NotAnAnswerSetError(ValueError):
    pass


def _literals(a: Model) -> frozenset[Literal]:
    return a.literals if isinstance(a, AnswerSet) else frozenset(a)


def dependency_graph(p: GroundProgram) -> nx.DiGraph:
    """Edges run from a rule head to each body literal.

    Edge attribute ``strict`` is True when the body literal occurs under
    ``not``. An explicit literal ``-a`` is a node distinct from ``a``.
    """
    g = nx.DiGraph()
    g.add_nodes_from(Literal(a) for a in p.base)
    for r in p.rules:
        g.add_node(r.head)
        for l in r.pos:
            if not g.has_edge(r.head, l):
                g.add_edge(r.head, l, strict=False)
        for l in r.neg:
            g.add_edge(r.head, l, strict=True)
    return g


def stratify(p: GroundProgram) -> Optional[LevelMapping]:
    """Smallest level mapping with head >= positive body and head > negative
    body, or None when a cycle goes through a negative dependency."""
    g = dependency_graph(p)
    cond = nx.condensation(g)
    member = cond.graph["mapping"]
    for u, v, strict in g.edges(data="strict"):
        if strict and member[u] == member[v]:
            return None
    level: dict[int, int] = {}
    for c in reversed(list(nx.topological_sort(cond))):
        level[c] = max((level[member[v]] + strict
                        for u in cond.nodes[c]["members"]
                        for _, v, strict in g.out_edges(u, data="strict")
                        if member[v] != c), default=0)
    return {l: level[member[l]] for l in g.nodes}


def check_level_mapping(p: GroundProgram, levels: LevelMapping) -> bool:
    for r in p.rules:
        h = levels[r.head]
        if any(h < levels[l] for l in r.pos) or any(h <= levels[l] for l in r.neg):
            return False
    return True


def is_categorical(p: GroundProgram, node_cap: Optional[int] = None) -> bool:
    if not p.is_extended and not p.constraints and stratify(p) is not None:
        return True
    return len(enumerate_answer_sets(p, limit=2, node_cap=node_cap)) == 1


def supports(r: Rule, l: Literal) -> bool:
    return r.head == l


def supported_only_by(p: GroundProgram, l: Literal) -> Optional[Rule]:
    found = [r for r in p.rules if supports(r, l)]
    return found[0] if len(found) == 1 else None


def applicable(r: Rule, a: AbstractSet[Literal]) -> bool:
    """Positive body inside ``a``, negative body outside it."""
    return all(l in a for l in r.pos) and not any(l in a for l in r.neg)


@dataclass(frozen=True)
class Justification:
    literal: Literal
    rule: Rule
    pos_witness: tuple[Literal, ...]
    neg_witness: tuple[Literal, ...]

    def __str__(self) -> str:
        lines = [str(self.rule)]
        if self.pos_witness:
            lines.append("in model: " + ", ".join(map(str, self.pos_witness)))
        if self.neg_witness:
            lines.append("absent from model: " + ", ".join(map(str, self.neg_witness)))
        return "\n".join(lines)


def _justifying_rule(p: GroundProgram, a: AbstractSet[Literal],
                     l: Literal) -> Optional[Rule]:
    for r in sorted(p.rules, key=str):
        if supports(r, l) and applicable(r, a):
            return r
    return None


def justify(p: GroundProgram, a: Model, l: Literal) -> Optional[Justification]:
    """A rule deriving ``l`` in the consistent answer set ``a``, if ``l`` is in it.

    Ties are broken by the rule's printed form.
    """
    lits = _literals(a)
    if not is_consistent(lits):
        raise NotAnAnswerSetError("justification needs a consistent answer set")
    if not is_stable(p, lits):
        raise NotAnAnswerSetError("the given set is not an answer set of the program")
    if l not in lits:
        return None
    r = _justifying_rule(p, lits, l)
    if r is None:  # cannot happen for a genuine answer set
        raise AssertionError(f"no justifying rule for {l}")
    return Justification(l, r, r.pos, r.neg)


def support_violations(p: GroundProgram, a: Model) -> list[str]:
    """Human-readable list of every failed support or closure condition."""
    lits = _literals(a)
    problems = []
    for r in p.rules:
        if applicable(r, lits) and r.head not in lits:
            kind = "fact" if r.is_fact else "closure"
            problems.append(f"{kind}: rule {r} is applicable but {r.head} is missing")
    if is_consistent(lits):
        for l in sorted(lits, key=str):
            if _justifying_rule(p, lits, l) is None:
                problems.append(f"support: no rule justifies {l}")
    return problems


def verify_supportedness(p: GroundProgram, a: Model) -> bool:
    return not support_violations(p, a)
