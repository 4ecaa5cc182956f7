"""Preferential structures over model copies and the minimal-model choice mu.

A structure holds copies ``(model, tag)`` and a strict relation ``c1 < c2``
read as "c1 is preferred to (more normal than) c2".  Neither transitivity
nor acyclicity is assumed.  A model is minimal in ``X`` when at least one of
its copies is not beaten by any copy of a model in ``X``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .logic import Alphabet, Formula, ModelSet, is_subset, members, models_of, subsets


class Copy(NamedTuple):
    model: int
    tag: int = 0

    def __str__(self) -> str:
        return f"{self.model}:{self.tag}"


@dataclass(frozen=True)
class PreferentialStructure:
    copies: frozenset[Copy]
    prefers: frozenset[tuple[Copy, Copy]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "copies", frozenset(Copy(*c) for c in self.copies))
        object.__setattr__(self, "prefers", frozenset((Copy(*a), Copy(*b)) for a, b in self.prefers))
        for a, b in self.prefers:
            if a == b:
                raise ValueError(f"relation must be irreflexive, got {a} < {a}")
            for c in (a, b):
                if c not in self.copies:
                    raise ValueError(f"copy {c} is not declared in the structure")

    @classmethod
    def from_relation(cls, models: Iterable[int], pairs: Iterable[tuple[int, int]] = ()) -> "PreferentialStructure":
        """One copy (tag 0) per model; ``pairs`` are ``(better, worse)`` model indices."""
        return cls(
            frozenset(Copy(m) for m in models),
            frozenset((Copy(a), Copy(b)) for a, b in pairs),
        )

    @cached_property
    def _killers(self) -> dict[Copy, ModelSet]:
        # for each copy, the models owning at least one copy preferred to it
        killers = {c: 0 for c in self.copies}
        for better, worse in self.prefers:
            killers[worse] |= 1 << better.model
        return killers

    @cached_property
    def _copies_by_model(self) -> dict[int, list[ModelSet]]:
        out: dict[int, list[ModelSet]] = {}
        for c in sorted(self.copies):
            out.setdefault(c.model, []).append(self._killers[c])
        return out

    @property
    def models(self) -> ModelSet:
        """Models owning at least one copy."""
        bits = 0
        for c in self.copies:
            bits |= 1 << c.model
        return bits

    def copies_per_model(self) -> dict[int, int]:
        return {m: len(ks) for m, ks in sorted(self._copies_by_model.items())}

    def mu(self, x: ModelSet) -> ModelSet:
        return mu_of_structure(self, x)


def mu_of_structure(s: PreferentialStructure, x: ModelSet) -> ModelSet:
    """Models of ``x`` with a copy not beaten by any copy of a model in ``x``."""
    out = 0
    by_model = s._copies_by_model
    for m in members(x):
        for killers in by_model.get(m, ()):
            if killers & x == 0:
                out |= 1 << m
                break
    return out


@dataclass(frozen=True)
class SelectionFunction:
    """An explicit table ``X -> mu(X)`` over subsets of ``universe``.

    Arbitrary tables are allowed so that law violations can be represented.
    """

    universe: ModelSet
    table: dict[ModelSet, ModelSet] = field(hash=False)

    def __post_init__(self):
        for x in self.table:
            if not is_subset(x, self.universe):
                raise ValueError(f"domain set {x:#b} is not a subset of the universe")

    def __call__(self, x: ModelSet) -> ModelSet:
        return self.table[x]

    @property
    def domain(self) -> list[ModelSet]:
        return sorted(self.table)

    def is_full_powerset(self) -> bool:
        return len(self.table) == 1 << bin(self.universe).count("1")


def selection_of_structure(
    s: PreferentialStructure, domain: Sequence[ModelSet] | None = None, universe: ModelSet | None = None
) -> SelectionFunction:
    """Tabulate ``mu`` over ``domain`` (default: every subset of ``universe``).

    ``universe`` defaults to the models mentioned by the structure.
    """
    if universe is None:
        universe = s.models
        for x in domain or ():
            universe |= x
    if domain is None:
        domain = subsets(universe)
    return SelectionFunction(universe, {x: mu_of_structure(s, x) for x in domain})


def pref_entails(s: PreferentialStructure, theory: Sequence[Formula], f: Formula, alphabet: Alphabet) -> bool:
    """``theory |~ f``: every minimal model of the theory satisfies ``f``."""
    return is_subset(mu_of_structure(s, models_of(theory, alphabet)), models_of([f], alphabet))
