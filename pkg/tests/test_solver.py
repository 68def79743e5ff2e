import random

import pytest
from hypothesis import given, settings

from cautious.oracle import enumerate_stable_models, is_stable_model, is_unsat_core_oracle
from cautious.program import ChoiceRule, Literal, constraint, parse_text_program, pos
from cautious.solver import (
    HeadCycleError,
    check_head_cycle_free,
    compute_stable_model,
    find_head_cycle,
    translate,
)

from conftest import ids, lit, lits, programs, random_assumptions, show
from test_oracle import I1, I2, I3, I4


def all_models(state, limit=10_000):
    """Stable models of a state by blocking each found model with a clause."""
    found = set()
    atoms = list(range(1, state.base_atoms))
    while len(found) < limit:
        r = state.solve()
        if not r.satisfiable:
            return found
        m = r.model & set(atoms)
        found.add(frozenset(m))
        state.add_constraint(constraint(*(Literal(a, a not in m) for a in atoms)))
    raise AssertionError("too many models")


def test_translate_fact_is_propagated():
    p = parse_text_program("a.")
    s = translate(p)
    assert s.propagate() is None
    assert s.value(lit(p, "a")) is True


def test_translate_running_example_models(run_program):
    p = run_program
    assert all_models(translate(p)) == {ids(p, *m) for m in (I1, I2, I3, I4)}


def test_translate_shifted_disjunction():
    p = parse_text_program("a | b :- c.\nc :- a.\nc :- d.\n{ d }.")
    assert check_head_cycle_free(p)
    assert all_models(translate(p)) == enumerate_stable_models(p)
    assert len(enumerate_stable_models(p)) == 3


def test_co_headed_atoms_on_one_cycle_are_rejected():
    # a and b both reach c and back, so shifting would be unsound
    p = parse_text_program("a | b :- c.\nc :- a.\nc :- b.")
    assert not check_head_cycle_free(p)
    with pytest.raises(HeadCycleError):
        translate(p)


def test_head_cycle_check(run_program):
    assert check_head_cycle_free(run_program)
    cyclic = parse_text_program("a | b.\na :- b.\nb :- a.")
    assert not check_head_cycle_free(cyclic)
    assert set(find_head_cycle(cyclic)) == {"a", "b"}
    with pytest.raises(HeadCycleError, match="a"):
        translate(cyclic)
    assert check_head_cycle_free(parse_text_program("a :- b.\nb :- a.\n{ c }."))


def test_model_under_assumptions(run_program):
    p = run_program
    r = compute_stable_model(translate(p), sorted(lits(p, "b", "not q2")))
    assert r.model == ids(p, *I3)


def test_core_under_assumptions(run_program):
    p = run_program
    s = translate(p)
    r = compute_stable_model(s, sorted(lits(p, "not q1", "not q2")))
    assert not r.satisfiable
    assert show(p, r.core) in ({"not q1"}, {"not q1", "not q2"})
    assert s.extract_core() == r.core


def test_core_of_three_assumptions(run_program):
    p = run_program
    assumptions = lits(p, "not q1", "not q3", "not q4")
    r = translate(p).solve(sorted(assumptions))
    assert r.core <= assumptions
    assert is_unsat_core_oracle(p, r.core)


def test_incoherent_program_gives_empty_core():
    s = translate(parse_text_program("a. :- a."))
    r = s.solve()
    assert r.core == frozenset()
    assert s.extract_core() == frozenset()


def test_extract_core_requires_unsat(run_program):
    s = translate(run_program)
    s.solve()
    with pytest.raises(ValueError):
        s.extract_core()


def test_propagate_not_q1_conflicts(run_program):
    p = run_program
    s = translate(p)
    assert s.assume(lit(p, "not q1"))
    conflict = s.propagate()
    assert conflict is not None
    assert {"not a", "not b"} <= show(p, s.trail_literals())
    assert show(p, conflict.clause) == {"a", "b"}  # a | b. is falsified


def test_propagate_not_q4(run_program):
    p = run_program
    s = translate(p)
    s.assume(lit(p, "not q4"))
    assert s.propagate() is None
    trail = [t for t in show(p, s.trail_literals()) if t != "not #false"]
    assert set(trail) == {"not q4", "not d", "c", "q3", "q2"}
    order = [x for x in map(lambda l: show(p, [l]).pop(), s.trail_literals())]
    assert order.index("not d") < order.index("c") < order.index("q3")


def test_propagate_empty_program():
    s = translate(parse_text_program(""))
    before = s.trail_literals()
    assert s.propagate() is None
    assert s.trail_literals() == before


def test_analyze_conflict_learns_q1(run_program):
    p = run_program
    s = translate(p)
    s.assume(lit(p, "not q1"))
    learned = s.analyze_conflict(s.propagate())
    assert show(p, learned.clause) == {"q1"}
    assert learned.level == 0
    assert s.value(lit(p, "q1")) is True


def test_analyze_conflict_at_root_signals_incoherence():
    p = parse_text_program("a | b.\n:- a.\n:- b.")
    s = translate(p)
    conflict = s.propagate()
    assert conflict is not None
    assert s.analyze_conflict(conflict).level == -1


def test_core_over_two_assumptions():
    p = parse_text_program("{ a, b }.\n:- a, b.")
    r = translate(p).solve(sorted(lits(p, "a", "b")))
    assert r.core and r.core <= lits(p, "a", "b")
    assert is_unsat_core_oracle(p, r.core)


def test_add_constraints_incrementally(run_program):
    p = run_program
    s = translate(p)
    s.add_constraint(constraint(*sorted(lits(p, "q1", "q3", "q4"))))
    r = s.solve()
    assert r.model in (ids(p, *I2), ids(p, *I4))
    s.add_constraint(constraint(*sorted(lits(p, "q1", "q3"))))
    assert s.solve().core == frozenset()


def test_add_free_choice_atom(run_program):
    s = translate(run_program)
    p_atom = s.new_atom("p")
    s.add_constraint(ChoiceRule(frozenset({pos(p_atom)}), 0))
    models = all_models(s)
    assert len(models) == 4
    plain = {frozenset(m) for m in enumerate_stable_models(run_program)}
    s = translate(run_program)
    p_atom = s.new_atom("p")
    s.add_constraint(ChoiceRule(frozenset({pos(p_atom)}), 0))
    seen = set()
    for assumption in (Literal(p_atom, False), Literal(p_atom, True)):
        r = s.solve([assumption])
        assert r.satisfiable
        seen.add(r.model - {p_atom} in plain)
    assert seen == {True}


def test_fresh_atoms_stay_false_without_definition(run_program):
    s = translate(run_program)
    q = s.new_atom()
    assert s.atoms.name(q).startswith("_relax_")
    assert q not in s.solve().model
    assert s.solve([Literal(q, False)]).core == {Literal(q, False)}


def test_add_constraint_rejects_rules_and_defined_atoms(run_program):
    p = run_program
    s = translate(p)
    with pytest.raises(ValueError):
        s.add_constraint(parse_text_program("a.").disjunctive[0])
    with pytest.raises(ValueError, match="definition"):
        s.add_constraint(ChoiceRule(lits(p, "q1"), 0))


def test_preference_first_decision(run_program):
    p = run_program
    s = translate(p)
    s.set_branching_preference(sorted(lits(p, "not q1", "not q3", "not q4"), key=lambda l: p.atoms.name(l.atom)))
    s.solve()
    assert show(p, s.last_decisions[:1]) == {"not q1"}


def test_empty_preference_is_default(run_program):
    runs = []
    for prefer in (None, []):
        s = translate(run_program, seed=3)
        s.set_branching_preference(prefer)
        r = s.solve()
        runs.append((r.model, s.last_decisions))
    assert runs[0] == runs[1]


def test_preference_already_assigned():
    p = parse_text_program("a.\n{ b }.")
    s = translate(p)
    s.set_branching_preference([lit(p, "a")])
    s.solve()
    assert lit(p, "a") not in s.last_decisions


def test_determinism(run_program):
    def trace(seed):
        s = translate(run_program, seed=seed)
        out = []
        rng = random.Random(1)
        for _ in range(10):
            r = s.solve(random_assumptions(rng, run_program))
            out.append((r.model, r.core, tuple(s.last_decisions)))
        return out, s.stats.decisions

    assert trace(5) == trace(5)


def supported(program, model):
    """Every true non-choice atom has a rule with a true body and no other true head atom."""
    free = {a for r in program.choice for a in r.positive_atoms}
    for a in model:
        if a in free:
            continue
        ok = False
        for r in program.disjunctive:
            if a in r.head and not (r.head - {a}) & model:
                if r.positive_body <= model and not r.negative_body & model:
                    ok = True
        if not ok:
            return False
    return True


@settings(max_examples=150, deadline=None)
@given(programs)
def test_oracle_equivalence_with_assumptions(program):
    state = translate(program)
    rng = random.Random(len(program.disjunctive))
    for _ in range(5):
        assumptions = random_assumptions(rng, program)
        r = state.solve(assumptions)
        if r.satisfiable:
            assert is_stable_model(program, r.model)
            assert supported(program, r.model)
            assert all((l.atom in r.model) != l.negated for l in assumptions)
        else:
            assert r.core <= set(assumptions)
            assert is_unsat_core_oracle(program, r.core)


@settings(max_examples=80, deadline=None)
@given(programs)
def test_learned_clauses_are_entailed(program):
    state = translate(program)
    rng = random.Random(0)
    for _ in range(6):
        state.solve(random_assumptions(rng, program))
    models = enumerate_stable_models(program)
    for clause in state.learnts:
        atoms = [(state.var_atom[l >> 1], l & 1) for l in clause.lits]
        if any(a < 0 for a, _ in atoms):
            continue  # mentions a body variable
        for m in models:
            assert any((a in m) != bool(negated) for a, negated in atoms)


@settings(max_examples=80, deadline=None)
@given(programs)
def test_translation_is_exact(program):
    assert all_models(translate(program)) == enumerate_stable_models(program)
