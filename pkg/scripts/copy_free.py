"""Which law-abiding tables over a small universe need copies?

Enumerates every table on a universe of ``--models`` models that satisfies both
laws and searches all copy-free structures (one copy per model, any edge set)
for one realizing it.  Exhaustive, so keep ``--models`` at 2 or 3.
"""

import argparse
import itertools

from prefmodels.logic import subsets
from prefmodels.representation import check_properties
from prefmodels.structures import PreferentialStructure, SelectionFunction, selection_of_structure


def copy_free_tables(n: int) -> set[tuple]:
    models = range(n)
    universe = (1 << n) - 1
    pairs = [(a, b) for a in models for b in models if a != b]
    found = set()
    for mask in range(1 << len(pairs)):
        s = PreferentialStructure.from_relation(models, [p for i, p in enumerate(pairs) if mask >> i & 1])
        table = selection_of_structure(s, universe=universe).table
        found.add(tuple(table[x] for x in subsets(universe)))
    return found


def main(n: int) -> None:
    universe = (1 << n) - 1
    keys = subsets(universe)
    realizable = copy_free_tables(n)
    lawful = need_copies = 0
    for values in itertools.product(*(subsets(x) for x in keys)):
        sel = SelectionFunction(universe, dict(zip(keys, values)))
        if check_properties(sel) is None:
            lawful += 1
            if tuple(values) not in realizable:
                need_copies += 1
    print(f"models\t{n}\nlawful_tables\t{lawful}\ncopy_free_realizable\t{lawful - need_copies}\nneed_copies\t{need_copies}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--models", type=int, default=2, choices=[1, 2, 3])
    main(ap.parse_args().models)
