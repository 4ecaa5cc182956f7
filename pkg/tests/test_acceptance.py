"""Exit criteria.  One test per criterion; ``conftest`` prints a PASS/FAIL line for each."""

import itertools
import random
import time

import pytest

from prefmodels.applications import DefaultTheory, ObligationSet, default_entails, ideal_worlds, ought
from prefmodels.logic import (
    Alphabet,
    And,
    Atom,
    Not,
    Or,
    as_formula,
    as_theory,
    classical_entails,
    evaluate,
    members,
    models_of,
    subsets,
)
from prefmodels.representation import (
    SynthesisReport,
    check_properties,
    random_selection,
    random_structure,
    synthesize_structure,
)
from prefmodels.structures import SelectionFunction, mu_of_structure, pref_entails, selection_of_structure

from conftest import random_formula, truth_table_eval, valuations
from oracles import all_tables_2models, realizable_tables_2models, table_key
from test_cli import CASES, DATA, GOLDEN, transcript

SEED = 20261019


def test_criterion_1_mu_laws():
    rng = random.Random(SEED)
    start = time.perf_counter()
    checked = 0
    for i in range(1000):
        n = 2 if i % 2 == 0 else 3
        universe = (1 << (1 << n)) - 1
        s = random_structure(rng, universe, max_copies=2)
        sets = subsets(universe)
        mu = {x: mu_of_structure(s, x) for x in sets}
        for x in sets:
            assert mu[x] & ~x == 0, "mu(X) not inside X"
            for y in subsets(x):
                assert mu[x] & y & ~mu[y] == 0, "(mu-PR) fails"
                checked += 1
    elapsed = time.perf_counter() - start
    print(f"criterion 1: {checked} (X, X') pairs over 1000 structures in {elapsed:.1f}s")
    assert elapsed < 60


def test_criterion_2_representation_roundtrip():
    for n, count in ((2, 200), (3, 50)):
        universe = (1 << (1 << n)) - 1
        for seed in range(count):
            sel = random_selection(SEED + seed, universe, "from_structure")
            assert len(sel.table) == 1 << (1 << n)
            r = synthesize_structure(sel)
            assert isinstance(r, SynthesisReport) and r.verified
            assert selection_of_structure(r.structure, sel.domain, universe).table == sel.table


def test_criterion_3_checker_exact_on_two_models():
    realizable = realizable_tables_2models()
    tables = list(all_tables_2models())
    assert len(tables) == 16
    mismatches = [t for t in tables if (check_properties(SelectionFunction(0b11, t)) is None) != (table_key(t) in realizable)]
    assert mismatches == []


def test_criterion_4_violation_detection():
    found = []
    for seed in itertools.count():
        sel = random_selection(seed, 0b11, "arbitrary")
        w = check_properties(sel)
        if w is not None and w.kind == "PRViolation":
            assert w.holds_in(sel)
            found.append(seed)
        if len(found) >= 20:
            break
    for seed in range(20):
        sel = random_selection(seed, 0xFF, "arbitrary")
        w = check_properties(sel)
        assert w is not None and w.holds_in(sel)
    assert len(found) >= 20


def test_criterion_5_bird_penguin():
    dt = DefaultTheory.build(
        as_theory(["penguin -> bird", "penguin -> ab_0", "penguin -> !fly"]),
        [(as_formula("bird"), as_formula("fly"))],
    )
    assert default_entails(dt, as_theory(["bird"]), as_formula("fly")) is True
    assert default_entails(dt, as_theory(["bird", "penguin"]), as_formula("fly")) is False
    assert default_entails(dt, as_theory(["bird", "penguin"]), as_formula("!fly")) is True


def test_criterion_6_classical_core():
    pool = as_theory(["p", "!q", "p & q", "q | r", "p -> r", "q <-> !r", "T", "F", "!(p & r)", "r"])
    family = as_theory(["p", "!p", "q", "p -> q", "q | r", "!r & p"])
    for names in (["p"], ["p", "q"], ["p", "q", "r"]):
        alphabet = Alphabet(names)
        fam = [f for f in family if f.atoms() <= set(names)]
        qs = [f for f in pool if f.atoms() <= set(names)]
        contradiction = [Atom("p"), Not(Atom("p"))]
        for f in qs:
            assert classical_entails(contradiction, f, alphabet)
        for k in range(len(fam) + 1):
            for small in itertools.combinations(fam, k):
                for extra in fam:
                    for a in qs:
                        lhs = classical_entails(list(small), a, alphabet)
                        # truth-table oracle on the same question
                        oracle = all(
                            truth_table_eval(a, v)
                            for v in valuations(names)
                            if all(truth_table_eval(g, v) for g in small)
                        )
                        assert lhs == oracle
                        if lhs:
                            assert classical_entails(list(small) + [extra], a, alphabet)
    rng = random.Random(SEED)
    atoms = ["a", "b", "c", "d"]
    ab = Alphabet(atoms)
    mismatches = 0
    for _ in range(1000):
        f = random_formula(rng, atoms, rng.randint(0, 6))
        m = rng.randrange(ab.n_models)
        mismatches += evaluate(m, f, ab) != truth_table_eval(f, {a: bool(m >> i & 1) for i, a in enumerate(ab.atoms)})
    assert mismatches == 0


def _dnf(bits, alphabet):
    """A formula whose models are exactly ``bits`` (syntactically unrelated to the source theory)."""
    terms = []
    for m in members(bits):
        lits = [Atom(a) if m >> i & 1 else Not(Atom(a)) for i, a in enumerate(alphabet.atoms)]
        term = lits[0]
        for lit in lits[1:]:
            term = And(term, lit)
        terms.append(term)
    if not terms:
        return as_formula("F")
    out = terms[0]
    for t in terms[1:]:
        out = Or(out, t)
    return out


def test_criterion_7_lle():
    rng = random.Random(SEED)
    alphabet = Alphabet("pqr")
    queries = [random_formula(rng, ["p", "q", "r"], 3) for _ in range(20)]
    for _ in range(500):
        t = [random_formula(rng, ["p", "q", "r"], 3) for _ in range(rng.randint(1, 3))]
        tautology = random_formula(rng, ["p", "q", "r"], 2)
        t2 = [_dnf(models_of(t, alphabet), alphabet), Or(tautology, Not(tautology))]
        assert models_of(t, alphabet) == models_of(t2, alphabet)
        s = random_structure(rng, alphabet.universe)
        for f in queries:
            assert pref_entails(s, t, f, alphabet) == pref_entails(s, t2, f, alphabet)


def _brute_ideal(facts, obs, atoms, mode):
    alphabet = Alphabet(atoms)

    def viol(v):
        return {k for k, o in enumerate(obs) if not truth_table_eval(o, v)}

    worlds = [v for v in valuations(atoms) if all(truth_table_eval(f, v) for f in facts)]
    if mode == "subset":
        beaten = lambda v: any(viol(w) < viol(v) for w in worlds)  # noqa: E731
    else:
        beaten = lambda v: any(len(viol(w)) < len(viol(v)) for w in worlds)  # noqa: E731
    return {alphabet.model(a for a in atoms if v[a]) for v in worlds if not beaten(v)}


@pytest.mark.parametrize("mode", ["subset", "count"])
def test_criterion_8_deontic(mode):
    atoms = ["murder", "steal"]
    alphabet = Alphabet(atoms)
    obs = as_theory(["!murder", "!steal"])
    o = ObligationSet(tuple(obs))
    # obs = {!murder, !steal}, no facts
    assert set(members(ideal_worlds([], o, mode, alphabet))) == _brute_ideal([], obs, atoms, mode) == {0}
    # no obligations: ideal worlds are the fact models
    facts = as_theory(["murder | steal"])
    assert ideal_worlds(facts, ObligationSet(), mode, alphabet) == models_of(facts, alphabet)
    assert set(members(models_of(facts, alphabet))) == _brute_ideal(facts, [], atoms, mode)
    # contrary-to-duty: murder is a fact
    facts = as_theory(["murder"])
    ideal = set(members(ideal_worlds(facts, o, mode, alphabet)))
    assert ideal == _brute_ideal(facts, obs, atoms, mode) == {alphabet.model(["murder"])}
    assert ought(facts, o, as_formula("!steal"), mode, alphabet) is True
    assert ought(facts, o, as_formula("!murder"), mode, alphabet) is False
    assert ought([], ObligationSet((as_formula("!murder"),)), as_formula("!murder"), mode) is True


def test_criterion_9_cli_golden(monkeypatch):
    monkeypatch.chdir(DATA)
    subcommands = {}
    for name, cmd, code in CASES:
        first, got = transcript(cmd)
        second, _ = transcript(cmd)
        assert got == code, name
        assert first == second == (GOLDEN / f"{name}.txt").read_text(encoding="utf-8"), name
        subcommands.setdefault(cmd.split()[0], set()).add(code)
    for sub in ["models", "entail", "nml-entail", "defaults", "deontic", "check-mu", "synthesize"]:
        assert subcommands[sub] == {0, 1, 2}, sub
