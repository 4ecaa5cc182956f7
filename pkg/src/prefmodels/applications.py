"""Defaults with exceptions and deontic ideal worlds, compiled to preferential structures."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

from .logic import (
    Alphabet,
    And,
    Atom,
    Formula,
    Implies,
    ModelSet,
    Not,
    evaluate,
    is_subset,
    models_of,
)
from .structures import Copy, PreferentialStructure, mu_of_structure, pref_entails

MAX_RULES = 8
_AB_RE = re.compile(r"ab_\d+")

Mode = Literal["subset", "count"]


@dataclass(frozen=True)
class DefaultRule:
    """``prerequisite => consequent``, applicable unless ``ab_<index>`` holds."""

    prerequisite: Formula
    consequent: Formula
    index: int

    @property
    def ab_atom(self) -> str:
        return f"ab_{self.index}"

    def as_formula(self) -> Formula:
        return Implies(And(self.prerequisite, Not(Atom(self.ab_atom))), self.consequent)


@dataclass(frozen=True)
class DefaultTheory:
    facts: tuple[Formula, ...] = ()
    rules: tuple[DefaultRule, ...] = ()

    @classmethod
    def build(cls, facts: Iterable[Formula], rules: Iterable[tuple[Formula, Formula]]) -> "DefaultTheory":
        """Number the rules 0, 1, ... in the given order."""
        return cls(tuple(facts), tuple(DefaultRule(p, c, k) for k, (p, c) in enumerate(rules)))

    @property
    def ab_atoms(self) -> list[str]:
        return [r.ab_atom for r in self.rules]

    def user_atoms(self) -> set[str]:
        names: set[str] = set()
        for f in self.facts:
            names |= f.atoms()
        for r in self.rules:
            names |= r.prerequisite.atoms() | r.consequent.atoms()
        return names - set(self.ab_atoms)

    def validate(self) -> None:
        if len(self.rules) > MAX_RULES:
            raise ValueError(f"at most {MAX_RULES} default rules are supported, got {len(self.rules)}")
        if [r.index for r in self.rules] != list(range(len(self.rules))):
            raise ValueError("rules must be numbered 0..k-1 in order")
        own = set(self.ab_atoms)
        for r in self.rules:
            used = (r.prerequisite.atoms() | r.consequent.atoms()) & own
            if used:
                raise ValueError(f"rule {r.index} mentions abnormality atom(s) {sorted(used)}")
        for name in self.user_atoms():
            if _AB_RE.fullmatch(name):
                raise ValueError(f"{name} is reserved for rule abnormality but there is no such rule")


def _ab_structure(alphabet: Alphabet, ab_atoms: Sequence[str]) -> PreferentialStructure:
    positions = [alphabet.index(a) for a in ab_atoms]

    def ab_set(m: int) -> int:
        return sum(1 << k for k, i in enumerate(positions) if m >> i & 1)

    by_model = {m: ab_set(m) for m in alphabet.models()}
    pairs = [
        (a, b)
        for a, sa in by_model.items()
        for b, sb in by_model.items()
        if sa != sb and sa & ~sb == 0
    ]
    return PreferentialStructure.from_relation(alphabet.models(), pairs)


def compile_defaults(
    dt: DefaultTheory, extra_atoms: Iterable[str] = ()
) -> tuple[list[Formula], PreferentialStructure, Alphabet]:
    """Theory over the extended alphabet plus the abnormality ordering.

    ``m' < m`` iff the abnormality atoms true in ``m'`` form a proper subset of
    those true in ``m``.
    """
    dt.validate()
    alphabet = Alphabet(dt.user_atoms() | set(dt.ab_atoms) | set(extra_atoms))
    theory = list(dt.facts) + [r.as_formula() for r in dt.rules]
    return theory, _ab_structure(alphabet, dt.ab_atoms), alphabet


def default_minimal_models(dt: DefaultTheory, given: Sequence[Formula] = (), extra_atoms: Iterable[str] = ()):
    """Minimal models of facts + rules + ``given``, with their alphabet."""
    names = set(extra_atoms)
    for f in given:
        names |= f.atoms()
    theory, s, alphabet = compile_defaults(dt, names)
    return mu_of_structure(s, models_of(theory + list(given), alphabet)), alphabet


def default_entails(dt: DefaultTheory, given: Sequence[Formula], f: Formula) -> bool:
    names = set(f.atoms())
    for g in given:
        names |= g.atoms()
    theory, s, alphabet = compile_defaults(dt, names)
    return pref_entails(s, theory + list(given), f, alphabet)


# ---------------------------------------------------------------------------
# Deontic


@dataclass(frozen=True)
class ObligationSet:
    obligations: tuple[Formula, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.obligations)

    def atoms(self) -> set[str]:
        names: set[str] = set()
        for o in self.obligations:
            names |= o.atoms()
        return names


def violations(m: int, obs: ObligationSet, alphabet: Alphabet) -> int:
    """Bit ``k`` set iff obligation ``k`` is violated in ``m``."""
    return sum(1 << k for k, o in enumerate(obs.obligations) if not evaluate(m, o, alphabet))


def violation_structure(obs: ObligationSet, alphabet: Alphabet, mode: Mode = "subset") -> PreferentialStructure:
    """Worlds ordered by violated obligations: proper subset, or fewer in ``count`` mode."""
    viol = {m: violations(m, obs, alphabet) for m in alphabet.models()}
    if mode == "subset":
        better = lambda a, b: a != b and a & ~b == 0  # noqa: E731
    elif mode == "count":
        better = lambda a, b: bin(a).count("1") < bin(b).count("1")  # noqa: E731
    else:
        raise ValueError(f"unknown mode {mode!r}")
    pairs = [(a, b) for a, va in viol.items() for b, vb in viol.items() if better(va, vb)]
    return PreferentialStructure(frozenset(Copy(m) for m in viol), frozenset((Copy(a), Copy(b)) for a, b in pairs))


def _deontic_alphabet(facts: Sequence[Formula], obs: ObligationSet, *more: Formula) -> Alphabet:
    return Alphabet.of(*facts, *obs.obligations, *more)


def ideal_worlds(
    facts: Sequence[Formula], obs: ObligationSet, mode: Mode = "subset", alphabet: Alphabet | None = None
) -> ModelSet:
    if alphabet is None:
        alphabet = _deontic_alphabet(facts, obs)
    return mu_of_structure(violation_structure(obs, alphabet, mode), models_of(facts, alphabet))


def ought(
    facts: Sequence[Formula],
    obs: ObligationSet,
    f: Formula,
    mode: Mode = "subset",
    alphabet: Alphabet | None = None,
) -> bool:
    if alphabet is None:
        alphabet = _deontic_alphabet(facts, obs, f)
    return is_subset(ideal_worlds(facts, obs, mode, alphabet), models_of([f], alphabet))

