import itertools
import random

import pytest

from prefmodels.logic import And, Atom, Bot, Formula, Iff, Implies, Not, Or, Top


def truth_table_eval(f: Formula, valuation: dict[str, bool]) -> bool:
    """Reference evaluator over a name -> bool valuation (no bit encoding)."""
    match f:
        case Atom(name):
            return valuation[name]
        case Top():
            return True
        case Bot():
            return False
        case Not(child):
            return not truth_table_eval(child, valuation)
    a = truth_table_eval(f.left, valuation)
    b = truth_table_eval(f.right, valuation)
    return {And: a and b, Or: a or b, Implies: (not a) or b, Iff: a == b}[type(f)]


def valuations(atoms):
    """All valuations over ``atoms`` as dicts, in no particular order."""
    for values in itertools.product([False, True], repeat=len(atoms)):
        yield dict(zip(atoms, values))


def random_formula(rng: random.Random, atoms, depth: int) -> Formula:
    if depth == 0 or rng.random() < 0.2:
        r = rng.random()
        if r < 0.05:
            return Top()
        if r < 0.1:
            return Bot()
        return Atom(rng.choice(atoms))
    kind = rng.randrange(6)
    if kind == 0:
        return Not(random_formula(rng, atoms, depth - 1))
    cls = [And, Or, Implies, Iff, And][kind - 1]
    return cls(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1))


@pytest.fixture
def rng():
    return random.Random(20261019)


def pytest_terminal_summary(terminalreporter):
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            name = getattr(rep, "nodeid", "").split("::")[-1].split("[")[0]
            if not name.startswith("test_criterion_") or (status == "passed" and rep.when != "call"):
                continue
            if outcomes.get(name) != "FAIL":
                outcomes[name] = "PASS" if status == "passed" else "FAIL"
    if outcomes:
        terminalreporter.section("acceptance criteria")
        for name in sorted(outcomes, key=lambda k: int(k.split("_")[2])):
            terminalreporter.write_line(f"{outcomes[name]}  {name.removeprefix('test_')}")
