import random

import pytest
from hypothesis import strategies as st

from cautious import fixture, parse_text_program
from cautious.generators import random_program
from cautious.program import Literal, Program


@pytest.fixture
def run_program() -> Program:
    return parse_text_program(fixture("running_example.lp").decode())


def ids(program: Program, *names: str) -> frozenset[int]:
    return frozenset(program.atoms.id(n) for n in names)


def lit(program: Program, text: str) -> Literal:
    """``"a"`` or ``"not a"`` as a literal of ``program``."""
    if text.startswith("not "):
        return Literal(program.atoms.id(text[4:]), True)
    return Literal(program.atoms.id(text), False)


def lits(program: Program, *texts: str) -> frozenset[Literal]:
    return frozenset(lit(program, t) for t in texts)


def show(program: Program, literals) -> set[str]:
    return {("not " if l.negated else "") + program.atoms.name(l.atom) for l in literals}


def corpus(seed: int, count: int) -> list[Program]:
    rng = random.Random(seed)
    return [random_program(rng) for _ in range(count)]


programs = st.integers(0, 2**32 - 1).map(lambda s: random_program(random.Random(s)))


def random_assumptions(rng: random.Random, program: Program) -> list[Literal]:
    atoms = list(program.atoms.atoms())
    picked = rng.sample(atoms, rng.randint(0, min(4, len(atoms))))
    return [Literal(a, rng.random() < 0.6) for a in picked]


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS, key=lambda l: l.split(":")[0].split()[-1].zfill(2)):
        terminalreporter.write_line(line)
