"""Independent brute-force oracles shared by the representation and acceptance tests."""

import itertools
from functools import lru_cache

from prefmodels.logic import subsets
from prefmodels.structures import Copy, PreferentialStructure, mu_of_structure


def all_tables_2models():
    """Every table on universe {0,1} with mu(X) inside X: 1*2*2*4 = 16 tables."""
    keys = subsets(0b11)
    for values in itertools.product(*(subsets(x) for x in keys)):
        yield dict(zip(keys, values))


def _naive_mu(copies, prefers, x):
    out = 0
    for c in copies:
        if x >> c.model & 1 and not any(w == c and x >> b.model & 1 for b, w in prefers):
            out |= 1 << c.model
    return out


@lru_cache(maxsize=None)
def realizable_tables_2models() -> frozenset:
    """Tables realized by some structure with <= 2 copies per model and any edge set.

    Uses its own minimality evaluation; ``mu_of_structure`` is only cross-checked.
    """
    found = set()
    keys = subsets(0b11)
    for k0, k1 in itertools.product(range(3), repeat=2):
        copies = [Copy(0, t) for t in range(k0)] + [Copy(1, t) for t in range(k1)]
        pairs = [(a, b) for a in copies for b in copies if a != b]
        for mask in range(1 << len(pairs)):
            prefers = [p for i, p in enumerate(pairs) if mask >> i & 1]
            table = tuple(_naive_mu(copies, prefers, x) for x in keys)
            found.add(table)
    return frozenset(found)


def table_key(table: dict) -> tuple:
    return tuple(table[x] for x in subsets(0b11))


def cross_check_sample() -> bool:
    """Spot-check the naive evaluator against the library on a few structures."""
    copies = [Copy(0, 0), Copy(1, 0), Copy(1, 1)]
    pairs = [(a, b) for a in copies for b in copies if a != b]
    for mask in range(1 << len(pairs)):
        prefers = [p for i, p in enumerate(pairs) if mask >> i & 1]
        s = PreferentialStructure(frozenset(copies), frozenset(prefers))
        for x in subsets(0b11):
            if _naive_mu(copies, prefers, x) != mu_of_structure(s, x):
                return False
    return True
