import random

from cautious.generators import (
    argumentation_text,
    pigeonhole_text,
    random_graph,
    random_program,
    three_colouring,
    three_colouring_text,
)
from cautious.oracle import cautious_consequences_bruteforce, is_coherent
from cautious.program import INCOHERENT, parse_text_program
from cautious.solver import check_head_cycle_free


def test_random_programs_fit_the_corpus_shape():
    rng = random.Random(1)
    programs = [random_program(rng) for _ in range(300)]
    assert all(check_head_cycle_free(p) for p in programs)
    assert all(len(p.atoms) - 1 <= 12 and len(p.disjunctive) + len(p.choice) <= 25 for p in programs)
    assert all(p.query == frozenset(p.atoms.atoms()) for p in programs)
    incoherent = sum(not is_coherent(p) for p in programs) / len(programs)
    assert 0.1 < incoherent < 0.35
    assert any(p.choice for p in programs) and any(len(r.head) > 1 for p in programs for r in p.disjunctive)


def test_random_program_is_reproducible():
    a = random_program(random.Random(9))
    b = random_program(random.Random(9))
    assert a.canonical() == b.canonical()


def test_random_graph():
    g = random_graph(10, 12, seed=4)
    assert len(g) == len(set(g)) == 12
    assert all(1 <= u < v <= 10 for u, v in g)
    assert g == random_graph(10, 12, seed=4)


def test_three_colouring_size():
    p = three_colouring(40, 60, seed=0)
    assert len(p.atoms) - 1 == 120
    assert len(p.query) == 120


def test_triangle_colouring():
    p = parse_text_program(three_colouring_text(3, [(1, 2), (2, 3), (1, 3)], {1: "r"}))
    answer = cautious_consequences_bruteforce(p)
    assert p.names(answer) == ["col(1,r)"]


def test_argumentation_grounded_chain():
    p = parse_text_program(argumentation_text("abc", [("a", "b"), ("b", "c")]))
    assert sorted(p.names(cautious_consequences_bruteforce(p))) == ["in(a)", "in(c)"]


def test_argumentation_odd_cycle_has_empty_extension():
    p = parse_text_program(argumentation_text("abc", [("a", "b"), ("b", "c"), ("c", "a")]))
    assert cautious_consequences_bruteforce(p) == frozenset()


def test_pigeonhole_is_incoherent():
    assert cautious_consequences_bruteforce(parse_text_program(pigeonhole_text(3, 2))) is INCOHERENT
    assert cautious_consequences_bruteforce(parse_text_program(pigeonhole_text(2, 2))) is not INCOHERENT
