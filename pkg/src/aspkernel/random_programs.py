"""Random ground programs for differential and property testing."""
from __future__ import annotations

import random
from typing import Optional

from .grounder import GroundProgram
from .syntax import Atom, Literal, Rule


def _atoms(n: int) -> list[Atom]:
    return [Atom(f"p{i}") for i in range(n)]


def random_program(rng: random.Random, n_atoms: int = 8, n_rules: int = 12, *,
                   neg_prob: float = 0.4, explicit_prob: float = 0.0,
                   constraint_prob: float = 0.0,
                   max_body: int = 3, choice_pairs: int = 0) -> GroundProgram:
    """Propositional program over ``p0 .. p{n_atoms-1}``.

    Each body slot is negated-as-failure with ``neg_prob``; each literal is
    explicitly negated with ``explicit_prob``; each rule becomes a
    constraint with ``constraint_prob``. ``choice_pairs`` even negative
    cycles (``a :- not b. b :- not a.``) are put in first, within the
    ``n_rules`` budget.
    """
    atoms = _atoms(n_atoms)

    def literal() -> Literal:
        return Literal(rng.choice(atoms), rng.random() < explicit_prob)

    rules, constraints = [], []
    for _ in range(min(choice_pairs, n_rules // 2)):
        a, b = literal(), literal()
        rules += [Rule(a, (), (b,)), Rule(b, (), (a,))]
    for _ in range(rng.randint(0, n_rules - len(rules))):
        pos, neg = [], []
        for _ in range(rng.randint(0, max_body)):
            (neg if rng.random() < neg_prob else pos).append(literal())
        if rng.random() < constraint_prob and (pos or neg):
            constraints.append(Rule(None, tuple(pos), tuple(neg)))
        else:
            rules.append(Rule(literal(), tuple(pos), tuple(neg)))
    return GroundProgram(tuple(rules), tuple(constraints), frozenset(atoms))


def random_positive_program(rng: random.Random, n_atoms: int = 8,
                            n_rules: int = 12) -> GroundProgram:
    return random_program(rng, n_atoms, n_rules, neg_prob=0.0)


def random_stratified_program(rng: random.Random, n_atoms: int = 8,
                              n_rules: int = 12,
                              n_levels: Optional[int] = None) -> GroundProgram:
    """Program built against a hidden level mapping, so it is stratified."""
    atoms = _atoms(n_atoms)
    n_levels = n_levels or rng.randint(1, 4)
    level = {a: rng.randrange(n_levels) for a in atoms}
    rules = []
    for _ in range(rng.randint(0, n_rules)):
        head = rng.choice(atoms)
        pos, neg = [], []
        for _ in range(rng.randint(0, 3)):
            lower_eq = [a for a in atoms if level[a] <= level[head]]
            strictly_lower = [a for a in atoms if level[a] < level[head]]
            if strictly_lower and rng.random() < 0.5:
                neg.append(Literal(rng.choice(strictly_lower)))
            else:
                pos.append(Literal(rng.choice(lower_eq)))
        rules.append(Rule(Literal(head), tuple(pos), tuple(neg)))
    return GroundProgram(tuple(rules), (), frozenset(atoms))
