"""Program generators: random small programs, graph 3-colouring, argumentation frameworks."""

from __future__ import annotations

import random
from typing import Iterable

from .program import (
    AtomTable,
    ChoiceRule,
    DisjunctiveRule,
    Literal,
    Program,
    parse_text_program,
)
from .solver import check_head_cycle_free


def random_program(rng: random.Random, max_atoms: int = 12, max_rules: int = 25,
                   constraint_rate: float = 0.08, choice_rate: float = 0.2,
                   negation_rate: float = 0.3) -> Program:
    """A random head-cycle-free program mixing disjunction, choice and negation.

    Query is every atom.  The defaults give roughly one incoherent program in five.
    """
    while True:
        n = rng.randint(2, max_atoms)
        table = AtomTable(f"p{i}" for i in range(1, n + 1))
        atoms = list(table.atoms())
        disjunctive: list[DisjunctiveRule] = []
        choice: list[ChoiceRule] = []

        def lit() -> Literal:
            return Literal(rng.choice(atoms), rng.random() < negation_rate)

        for _ in range(rng.randint(1, max_rules)):
            roll = rng.random()
            if roll < choice_rate:
                lits = frozenset(lit() for _ in range(rng.randint(1, 3)))
                choice.append(ChoiceRule(lits, rng.choice((0, 0, 0, 1, 1, 2))))
                continue
            if roll < choice_rate + constraint_rate:
                head: frozenset[int] = frozenset()
                body = frozenset(lit() for _ in range(rng.randint(1, 3)))
            else:
                head = frozenset(rng.sample(atoms, min(len(atoms), rng.choice((1, 1, 1, 2, 2, 3)))))
                body = frozenset(lit() for _ in range(rng.choice((0, 1, 1, 2, 2, 3))))
            disjunctive.append(DisjunctiveRule(head, body))
        program = Program(table, tuple(disjunctive), tuple(choice), frozenset(atoms))
        if check_head_cycle_free(program):
            return program


def random_graph(nodes: int, edges: int, seed: int) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(1, nodes + 1) for v in range(u + 1, nodes + 1)]
    return sorted(rng.sample(pairs, edges))


COLOURS = ("r", "g", "b")


def three_colouring_text(nodes: int, edges: Iterable[tuple[int, int]], fixed: dict[int, str] | None = None,
                         query: Iterable[str] | None = None) -> str:
    """Ground 3-colouring: one ``col(v,c)`` atom per node and colour."""
    lines = [f"% 3-colouring of a {nodes}-node graph"]
    for v in range(1, nodes + 1):
        lines.append(" | ".join(f'"col({v},{c})"' for c in COLOURS) + ".")
    for u, v in edges:
        for c in COLOURS:
            lines.append(f':- "col({u},{c})", "col({v},{c})".')
    for v, c in sorted((fixed or {}).items()):
        lines.append(f'"col({v},{c})".')
    names = list(query) if query is not None else [f"col({v},{c})" for v in range(1, nodes + 1) for c in COLOURS]
    lines.append("#query " + ", ".join(f'"{n}"' for n in names) + ".")
    return "\n".join(lines) + "\n"


def three_colouring(nodes: int = 40, edges: int = 60, seed: int = 0, fix_first: bool = True) -> Program:
    """Random-graph 3-colouring, optionally with node 1 fixed to red to break symmetry."""
    graph = random_graph(nodes, edges, seed)
    return parse_text_program(three_colouring_text(nodes, graph, {1: "r"} if fix_first else None))


def argumentation_text(arguments: Iterable[str], attacks: Iterable[tuple[str, str]]) -> str:
    """Complete extensions of an argumentation framework, ground by hand.

    Query: the ``in(x)`` atoms, whose cautious consequences are the
    sceptically accepted arguments.
    """
    args = sorted(set(arguments))
    att = sorted(set(attacks))
    attackers = {x: sorted(y for y, z in att if z == x) for x in args}
    lines = [f"% complete extensions of a framework with {len(args)} arguments"]
    for x in args:
        lines.append(f'{{ "in({x})" }}.')
    for x, y in att:
        lines.append(f':- "in({x})", "in({y})".')
        lines.append(f'"attacked({y})" :- "in({x})".')
    for y, x in att:
        lines.append(f':- "in({x})", not "attacked({y})".')
    for x in args:
        body = [f'"attacked({y})"' for y in attackers[x]] + [f'not "in({x})"']
        lines.append(":- " + ", ".join(body) + ".")
    lines.append("#query " + ", ".join(f'"in({x})"' for x in args) + ".")
    return "\n".join(lines) + "\n"


def pigeonhole_text(pigeons: int, holes: int) -> str:
    """Pigeons into holes, at most one per hole; incoherent and hard for resolution when pigeons > holes."""
    lines = [f"% {pigeons} pigeons, {holes} holes"]
    for p in range(1, pigeons + 1):
        lines.append(" | ".join(f'"in({p},{h})"' for h in range(1, holes + 1)) + ".")
    for h in range(1, holes + 1):
        for p in range(1, pigeons + 1):
            for q in range(p + 1, pigeons + 1):
                lines.append(f':- "in({p},{h})", "in({q},{h})".')
    return "\n".join(lines) + "\n"
