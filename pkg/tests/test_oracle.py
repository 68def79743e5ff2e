import pytest
from hypothesis import given, settings

from cautious.oracle import (
    EnumerationCapExceeded,
    cautious_consequences_bruteforce,
    enumerate_stable_models,
    is_coherent,
    is_minimal_wrt,
    is_model,
    is_stable_model,
    is_unsat_core_oracle,
    reduct,
)
from cautious.program import INCOHERENT, Literal, parse_text_program

from conftest import ids, lits, programs

I1 = ("a", "d", "q1", "q3", "q4")
I2 = ("a", "c", "q1", "q2", "q3")
I3 = ("b", "d", "q1", "q3", "q4")
I4 = ("b", "c", "q1", "q2", "q3")


def test_is_model_examples():
    p = parse_text_program("a | b.")
    assert is_model(ids(p, "a"), p)
    p = parse_text_program(":- not a.")
    assert not is_model(frozenset(), p)
    p = parse_text_program("2 { a, not b }.")
    assert is_model(ids(p, "a"), p)
    assert not is_model(ids(p, "a", "b"), p)


def test_reduct_of_running_example(run_program):
    p = run_program
    red = reduct(p, ids(p, *I2))
    rules = set(red.rules)
    assert (ids(p, "q3"), frozenset()) in rules  # q3 :- not d.
    assert len(red.rules) == 7  # q3 :- not c. is gone
    assert (ids(p, "a", "b"), frozenset()) in rules
    assert (ids(p, "q1"), ids(p, "a")) in rules and (ids(p, "q4"), ids(p, "d")) in rules


def test_reduct_of_choice_and_positive_programs():
    p = parse_text_program("1 { a }.")
    assert reduct(p, ids(p, "a")).rules == ((ids(p, "a"), frozenset()),)
    p = parse_text_program("a :- b.\nb | c.")
    red = reduct(p, ids(p, "b"))
    assert set(red.rules) == {(r.head, r.positive_body) for r in p.disjunctive}


def test_stable_models_of_running_example(run_program):
    p = run_program
    assert is_stable_model(p, ids(p, *I1))
    assert not is_stable_model(p, ids(p, "a", "b", "d", "q1", "q3", "q4"))
    assert enumerate_stable_models(p) == {ids(p, *m) for m in (I1, I2, I3, I4)}


def test_trivial_stable_models():
    empty = parse_text_program("")
    assert is_stable_model(empty, frozenset())
    assert enumerate_stable_models(parse_text_program("a. :- a.")) == set()
    p = parse_text_program("a.")
    assert enumerate_stable_models(p) == {ids(p, "a")}


def test_choice_bounds_strict_and_lax():
    p = parse_text_program("1 { a }.")
    assert enumerate_stable_models(p) == {ids(p, "a")}
    assert enumerate_stable_models(p, strict=False) == {frozenset(), ids(p, "a")}


def test_cap():
    p = parse_text_program(" ".join(f"{{ a{i} }}." for i in range(5)))
    with pytest.raises(EnumerationCapExceeded, match="cap is 4"):
        enumerate_stable_models(p, cap=4)


def test_cautious_bruteforce(run_program):
    p = run_program
    assert cautious_consequences_bruteforce(p) == ids(p, "q1", "q3")
    assert cautious_consequences_bruteforce(parse_text_program("a. :- a.")) is INCOHERENT
    empty = parse_text_program("a :- a.")
    assert cautious_consequences_bruteforce(empty) == frozenset()


def test_is_minimal_wrt(run_program):
    p = run_program
    objective = ids(p, "q1", "q3", "q4")
    assert is_minimal_wrt(p, ids(p, *I2), objective)
    assert not is_minimal_wrt(p, ids(p, *I1), objective)
    assert is_minimal_wrt(p, ids(p, *I1), frozenset())
    with pytest.raises(ValueError, match="not a stable model"):
        is_minimal_wrt(p, ids(p, "a"), objective)


def test_core_oracle(run_program):
    p = run_program
    assert is_unsat_core_oracle(p, lits(p, "not q1"))
    assert not is_unsat_core_oracle(p, lits(p, "not q4"))
    assert not is_unsat_core_oracle(p, frozenset())
    assert is_unsat_core_oracle(parse_text_program("a. :- a."), frozenset())


@settings(max_examples=60, deadline=None)
@given(programs)
def test_enumerated_models_are_models_of_their_reduct(program):
    for m in enumerate_stable_models(program):
        assert is_model(m, program)
        assert reduct(program, m).is_model(m)


@settings(max_examples=60, deadline=None)
@given(programs)
def test_stable_models_form_an_antichain(program):
    models = enumerate_stable_models(program)
    for m in models:
        red = reduct(program, m)
        assert not any(other < m and red.is_model(other) for other in models)


@settings(max_examples=40, deadline=None)
@given(programs)
def test_cores_are_monotone(program):
    atoms = sorted(program.atoms.atoms())[:3]
    core = frozenset(Literal(a, True) for a in atoms[:1])
    if is_unsat_core_oracle(program, core):
        bigger = core | {Literal(a, i % 2 == 0) for i, a in enumerate(atoms[1:])}
        assert is_unsat_core_oracle(program, bigger)


@settings(max_examples=60, deadline=None)
@given(programs)
def test_singleton_core_iff_cautious_on_oracle(program):
    if not is_coherent(program):
        return
    cautious = cautious_consequences_bruteforce(program)
    for p in program.query:
        assert (p in cautious) == is_unsat_core_oracle(program, {Literal(p, True)})
