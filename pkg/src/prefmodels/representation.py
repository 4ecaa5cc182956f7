"""Checking (mu-subset) and (mu-PR) for explicit choice tables, and building a
preferential structure that realizes a table satisfying both.

Construction (full powerset domains only).  For a model ``m`` let ``D_m`` be
the sets containing ``m`` from which ``m`` is not chosen.  ``m`` gets one copy
per set ``X`` with ``m`` in ``mu(X)``; that copy is beaten, for every ``Y`` in
``D_m``, by all copies of the smallest model of ``Y - X``.  Such a model
exists by (mu-PR), and lies outside ``X``, so the copy survives in ``X``.
A model chosen from no set gets two default copies that are beaten by all
copies of ``min(Y)`` (the other default copy when ``min(Y)`` is ``m``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal

from .logic import ModelSet, format_set, is_subset, lowest, members, subsets
from .structures import Copy, PreferentialStructure, SelectionFunction, selection_of_structure

MAX_UNIVERSE = 8


class DomainError(ValueError):
    """A set needed to test the laws is missing from the table's domain."""

    def __init__(self, missing: ModelSet):
        self.missing = missing
        super().__init__(f"domain is missing the set {format_set(missing)}")


@dataclass(frozen=True)
class ViolationWitness:
    kind: Literal["SubsetViolation", "PRViolation"]
    x: ModelSet
    model: int
    x_sub: ModelSet | None = None  # the smaller set, for PRViolation

    def holds_in(self, sel: SelectionFunction) -> bool:
        """Re-check the cited violation against ``sel``."""
        mu_x = sel(self.x)
        if self.kind == "SubsetViolation":
            return bool(mu_x >> self.model & 1) and not self.x >> self.model & 1
        assert self.x_sub is not None
        return (
            is_subset(self.x_sub, self.x)
            and bool((mu_x & self.x_sub) >> self.model & 1)
            and not sel(self.x_sub) >> self.model & 1
        )

    def __str__(self) -> str:
        if self.kind == "SubsetViolation":
            return f"SubsetViolation x={format_set(self.x)} m={self.model}"
        return f"PRViolation x={format_set(self.x)} x'={format_set(self.x_sub)} m={self.model}"


@dataclass(frozen=True)
class SynthesisReport:
    structure: PreferentialStructure
    copies_per_model: dict[int, int]
    verified: bool


def check_properties(sel: SelectionFunction) -> ViolationWitness | None:
    """Return ``None`` if both laws hold, else the first violation found.

    Sets are visited in ascending bit-set order; for each ``x`` the subset law
    is tested before the PR pairs ``(x, x')`` with ``x'`` ascending.  Models
    are reported smallest first.

    On a domain that is not a full powerset the laws are tested on key pairs,
    and the domain must be closed under intersection.
    """
    domain = sel.domain
    full = sel.is_full_powerset()
    if not full:
        keys = set(domain)
        for x in domain:
            for y in domain:
                if x & y not in keys:
                    raise DomainError(x & y)
    for x in domain:
        mu_x = sel(x)
        extra = mu_x & ~x
        if extra:
            return ViolationWitness("SubsetViolation", x, lowest(extra))
        smaller = subsets(x) if full else [y for y in domain if is_subset(y, x)]
        for y in smaller:
            lost = mu_x & y & ~sel(y)
            if lost:
                return ViolationWitness("PRViolation", x, lowest(lost), y)
    return None


def synthesize_structure(sel: SelectionFunction) -> SynthesisReport | ViolationWitness:
    """Build a structure whose mu reproduces ``sel`` on every subset of its universe."""
    n = bin(sel.universe).count("1")
    if n > MAX_UNIVERSE:
        raise ValueError(f"universe too large for synthesis: {n} models (max {MAX_UNIVERSE})")
    if not sel.is_full_powerset():
        raise ValueError("synthesis needs the full powerset of the universe as domain")
    witness = check_properties(sel)
    if witness is not None:
        return witness

    domain = sel.domain
    copies: list[Copy] = []
    beaten_by: dict[Copy, ModelSet] = {}
    for m in members(sel.universe):
        bit = 1 << m
        kill_sets = [y for y in domain if y & bit and not sel(y) & bit]
        chosen_in = [x for x in domain if sel(x) & bit]
        if chosen_in:
            for tag, x in enumerate(chosen_in):
                rng = 0
                for y in kill_sets:
                    rest = y & ~x
                    if not rest:
                        raise AssertionError(
                            f"empty Y-X for m={m}, X={format_set(x)}, Y={format_set(y)}; (mu-PR) check is wrong"
                        )
                    rng |= 1 << lowest(rest)
                c = Copy(m, tag)
                copies.append(c)
                beaten_by[c] = rng
        else:
            rng = 0
            for y in kill_sets:
                rng |= 1 << lowest(y)
            for tag in (0, 1):
                c = Copy(m, tag)
                copies.append(c)
                beaten_by[c] = rng

    by_model: dict[int, list[Copy]] = {}
    for c in copies:
        by_model.setdefault(c.model, []).append(c)
    prefers = set()
    for c, rng in beaten_by.items():
        for killer in members(rng):
            for c2 in by_model[killer]:
                if c2 != c:
                    prefers.add((c2, c))

    structure = PreferentialStructure(frozenset(copies), frozenset(prefers))
    rebuilt = selection_of_structure(structure, domain, sel.universe)
    return SynthesisReport(structure, structure.copies_per_model(), rebuilt.table == sel.table)


def random_structure(
    rng: random.Random, universe: ModelSet, max_copies: int = 2, density: float | None = None
) -> PreferentialStructure:
    """Random structure over ``universe``; each model gets 1..max_copies copies."""
    if density is None:
        density = rng.random()
    copies = [Copy(m, t) for m in members(universe) for t in range(rng.randint(1, max_copies))]
    prefers = frozenset((a, b) for a in copies for b in copies if a != b and rng.random() < density)
    return PreferentialStructure(frozenset(copies), prefers)


def random_selection(
    seed: int, universe: ModelSet, mode: Literal["from_structure", "arbitrary"] = "from_structure"
) -> SelectionFunction:
    """Deterministic random table over the full powerset of ``universe``.

    ``from_structure`` tabulates a random structure, so both laws hold;
    ``arbitrary`` only respects mu(X) being a subset of X.
    """
    if bin(universe).count("1") > MAX_UNIVERSE:
        raise ValueError(f"universe too large (max {MAX_UNIVERSE} models)")
    rng = random.Random(seed)
    if mode == "from_structure":
        return selection_of_structure(random_structure(rng, universe), universe=universe)
    if mode == "arbitrary":
        table = {}
        for x in subsets(universe):
            table[x] = sum(1 << m for m in members(x) if rng.random() < 0.5)
        return SelectionFunction(universe, table)
    raise ValueError(f"unknown mode {mode!r}")
