"""Reference semantics by exhaustive enumeration.

Everything here follows the textbook definitions directly (models, reduct,
subset-minimality) and exists to check the search engine on small programs.
Interpretations are frozensets of atom identifiers.

By default choice-rule bounds are enforced on stable models (``strict=True``):
a stable model must be a model of the program itself, not only of its reduct.
With ``strict=False`` only the reduct is checked, so ``{a} >= 1`` admits the
empty stable model.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .program import (
    FALSE,
    INCOHERENT,
    ChoiceRule,
    DisjunctiveRule,
    Literal,
    Program,
    constraint,
)

DEFAULT_CAP = 22


class EnumerationCapExceeded(ValueError):
    def __init__(self, atoms: int, cap: int):
        super().__init__(f"program has {atoms} atoms, enumeration cap is {cap}")
        self.atoms = atoms
        self.cap = cap


@dataclass(frozen=True)
class ReductProgram:
    """Negation-free rules ``(head, positive body)``."""

    rules: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def is_model(self, interp: frozenset[int]) -> bool:
        return all(not body <= interp or head & interp for head, body in self.rules)


def _rule_holds(rule: DisjunctiveRule, interp: frozenset[int]) -> bool:
    for l in rule.body:
        if (l.atom in interp) == l.negated:
            return True
    return bool(rule.head & interp)


def _choice_holds(rule: ChoiceRule, interp: frozenset[int]) -> bool:
    true = sum(1 for l in rule.literals if (l.atom in interp) != l.negated)
    return true >= rule.bound


def is_model(interp: Iterable[int], program: Program, strict: bool = True) -> bool:
    interp = frozenset(interp)
    if FALSE in interp:
        return False
    if not all(_rule_holds(r, interp) for r in program.disjunctive):
        return False
    return not strict or all(_choice_holds(r, interp) for r in program.choice)


def reduct(program: Program, interp: Iterable[int]) -> ReductProgram:
    interp = frozenset(interp)
    rules = []
    for r in program.disjunctive:
        if not r.negative_body & interp:
            rules.append((r.head - {FALSE}, r.positive_body))
    for r in program.choice:
        for p in sorted(r.positive_atoms & interp):
            rules.append((frozenset({p}), frozenset()))
    return ReductProgram(tuple(rules))


def _is_minimal_model(red: ReductProgram, interp: frozenset[int]) -> bool:
    # atoms every model J of the reduct with J <= interp must contain
    forced: set[int] = set()
    changed = True
    while changed:
        changed = False
        for head, body in red.rules:
            if body <= forced:
                inside = head & interp
                if len(inside) == 1 and not inside <= forced:
                    forced |= inside
                    changed = True
    free = sorted(interp - forced)
    if not free:
        return True
    base = frozenset(forced)
    for size in range(len(free)):
        for extra in combinations(free, size):
            if red.is_model(base | frozenset(extra)):
                return False
    return True


def is_stable_model(program: Program, interp: Iterable[int], strict: bool = True) -> bool:
    interp = frozenset(interp)
    if FALSE in interp:
        return False
    if strict and not is_model(interp, program, strict=True):
        return False
    red = reduct(program, interp)
    return red.is_model(interp) and _is_minimal_model(red, interp)


def _candidate_models(program: Program, cap: int, strict: bool) -> Iterator[frozenset[int]]:
    n = len(program.atoms) - 1
    if n > cap:
        raise EnumerationCapExceeded(n, cap)
    masks = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)

    def bits(atoms) -> int:
        return sum(1 << (a - 1) for a in atoms if a != FALSE)

    for r in program.disjunctive:
        if FALSE in r.positive_body:
            continue
        p, q, h = bits(r.positive_body), bits(r.negative_body), bits(r.head)
        fires = ((masks & p) == p) & ((masks & q) == 0)
        ok &= ~fires | ((masks & h) != 0)
    if strict:
        for r in program.choice:
            if r.bound == 0:
                continue
            p = bits(l.atom for l in r.literals if not l.negated)
            q = bits(l.atom for l in r.literals if l.negated)
            # "not #false" is always true
            const = sum(1 for l in r.literals if l.negated and l.atom == FALSE)
            count = np.bitwise_count(masks & p) + np.bitwise_count(~masks & q) + const
            ok &= count >= r.bound
    for m in np.flatnonzero(ok):
        m = int(m)
        yield frozenset(i + 1 for i in range(n) if m >> i & 1)


def iter_stable_models(program: Program, cap: int = DEFAULT_CAP, strict: bool = True) -> Iterator[frozenset[int]]:
    for interp in _candidate_models(program, cap, strict):
        red = reduct(program, interp)
        if red.is_model(interp) and _is_minimal_model(red, interp):
            yield interp


def enumerate_stable_models(program: Program, cap: int = DEFAULT_CAP, strict: bool = True) -> set[frozenset[int]]:
    """All stable models; refuses programs with more than ``cap`` atoms."""
    return set(iter_stable_models(program, cap, strict))


def is_coherent(program: Program, cap: int = DEFAULT_CAP, strict: bool = True) -> bool:
    return next(iter_stable_models(program, cap, strict), None) is not None


def cautious_consequences_bruteforce(program: Program, query: Iterable[int] | None = None,
                                     cap: int = DEFAULT_CAP, strict: bool = True):
    """``query`` intersected with every stable model, or ``INCOHERENT``."""
    result = frozenset(program.query if query is None else query)
    coherent = False
    for model in iter_stable_models(program, cap, strict):
        coherent = True
        result &= model
    return result if coherent else INCOHERENT


def is_minimal_wrt(program: Program, interp: Iterable[int], objective: Iterable[int],
                   cap: int = DEFAULT_CAP, strict: bool = True) -> bool:
    """No stable model has a strictly smaller projection onto ``objective``."""
    interp, objective = frozenset(interp), frozenset(objective)
    if not is_stable_model(program, interp, strict):
        raise ValueError("not a stable model")
    proj = interp & objective
    return not any(m & objective < proj for m in iter_stable_models(program, cap, strict))


def min_projection_size(program: Program, objective: Iterable[int], cap: int = DEFAULT_CAP,
                        strict: bool = True) -> int | None:
    objective = frozenset(objective)
    sizes = [len(m & objective) for m in iter_stable_models(program, cap, strict)]
    return min(sizes) if sizes else None


def core_constraints(core: Iterable[Literal]) -> list[DisjunctiveRule]:
    """Constraints forcing every literal of ``core`` to hold."""
    return [constraint(l.complement()) for l in core]


def is_unsat_core_oracle(program: Program, core: Iterable[Literal], cap: int = DEFAULT_CAP,
                         strict: bool = True) -> bool:
    return not is_coherent(program.extended(core_constraints(core)), cap, strict)
