"""Independent reference implementations used to compute expected values.

Everything here works on plain strings ("a", "-a") and tuples
``(head, pos, neg)``; nothing is imported from the package under test.
"""
import itertools


def parse(text):
    rules = []
    for line in text.strip().splitlines():
        line = line.strip().rstrip(".")
        if not line:
            continue
        head, _, body = line.partition(":-")
        pos, neg = [], []
        for part in filter(None, (b.strip() for b in body.split(","))):
            if part.startswith("not "):
                neg.append(part[4:].strip())
            else:
                pos.append(part)
        rules.append((head.strip(), pos, neg))
    return rules


def atoms_of(rules):
    out = set()
    for h, pos, neg in rules:
        for l in [h, *pos, *neg]:
            out.add(l.lstrip("-"))
    return sorted(out)


def subsets(universe):
    universe = sorted(universe)
    for k in range(len(universe) + 1):
        for combo in itertools.combinations(universe, k):
            yield frozenset(combo)


def closed(rules, s):
    return all(h in s for h, pos, neg in rules if set(pos) <= s)


def least_model_by_subsets(rules, universe):
    """Smallest closed subset, found by exhaustive search."""
    closed_sets = [s for s in subsets(universe) if closed(rules, s)]
    least = min(closed_sets, key=len)
    assert all(least <= s for s in closed_sets)
    return least


def least_model_by_iteration(rules):
    s = set()
    while True:
        new = {h for h, pos, neg in rules if set(pos) <= s} | s
        if new == s:
            return frozenset(s)
        s = new


def stable_models(rules, universe=None):
    """Brute force over subsets of the literal universe, with saturation."""
    base = atoms_of(rules) if universe is None else sorted(universe)
    extended = any(l.startswith("-") for r in rules for l in [r[0], *r[1], *r[2]])
    lits = base + (["-" + a for a in base] if extended else [])
    everything = frozenset(base) | frozenset("-" + a for a in base)
    out = []
    for s in subsets(lits):
        red = [(h, pos, []) for h, pos, neg in rules if not set(neg) & s]
        m = least_model_by_iteration(red)
        if any("-" + a in m and a in m for a in base):
            m = everything
        if m == s:
            out.append(s)
    return out


def stratified_by_search(rules, atoms):
    """Try every level mapping into range(len(atoms))."""
    n = len(atoms)
    for levels in itertools.product(range(max(n, 1)), repeat=n):
        lv = dict(zip(atoms, levels))
        if all(lv[h] >= lv[a] for h, pos, neg in rules for a in pos) and \
           all(lv[h] > lv[a] for h, pos, neg in rules for a in neg):
            return lv
    return None
