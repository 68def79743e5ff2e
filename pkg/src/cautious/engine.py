"""Cautious consequences by iterative refinement of an under- and an overestimate.

The common loop starts from ``U = {}`` and ``O = Q``, checks coherence,
intersects ``O`` with the first stable model, and refines until ``U == O``:

``or``
    Search a model falsifying some atom of ``O`` (constraint ``:- O``).
``ict``
    Test one candidate at a time under the assumption ``not a``.
``opt`` / ``one``
    Search a stable model minimal on ``O``; it either drops candidates or
    contains all of ``O``.  ``opt`` branches on ``not a`` for ``a`` in ``O``
    first; ``one`` relaxes unsatisfiable cores of soft literals.
``cm``
    Shrink an unsatisfiable core of ``{not a | a in O \\ U}`` one literal at a
    time; models drop candidates, a singleton core proves one.
``enum``
    Enumerate all stable models and intersect them (small programs only).
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import oracle
from .program import (
    INCOHERENT,
    ChoiceRule,
    Literal,
    Program,
    constraint,
    neg,
    pos,
)
from .solver import SolverState, SolverTimeout, SolveResult, translate


class Strategy(str, enum.Enum):
    OR = "or"
    ICT = "ict"
    OPT = "opt"
    ONE = "one"
    CM = "cm"
    ENUM = "enum"


class OneOf(str, enum.Enum):
    ACTIVITY = "activity"
    INDEX = "index"


@dataclass(frozen=True)
class ProgressEvent:
    elapsed: float
    under: frozenset[int]
    over: frozenset[int]
    strategy: Strategy
    kind: str  # model, core, done, INCOHERENT


Sink = Callable[[ProgressEvent], None]


def one_of(candidates: Iterable, state: SolverState | None = None, policy: OneOf = OneOf.ACTIVITY):
    """Pick a candidate atom (or literal, keyed by its atom).

    ``activity``: highest solver activity, ties by lowest atom id.  ``index``: lowest atom id.
    """
    items = list(candidates)
    if not items:
        raise ValueError("one_of needs at least one candidate")
    return rank(items, state, policy)[0]


def rank(items: Iterable, state: SolverState | None, policy: OneOf = OneOf.ACTIVITY) -> list:
    def atom(x):
        return x.atom if isinstance(x, Literal) else x

    if policy == OneOf.ACTIVITY and state is not None:
        return sorted(items, key=lambda x: (-state.atom_activity(atom(x)), atom(x), x))
    return sorted(items, key=lambda x: (atom(x), x))


@dataclass
class Context:
    """Mutable state of one cautious-reasoning run."""

    program: Program
    state: SolverState | None
    strategy: Strategy
    policy: OneOf = OneOf.ACTIVITY
    sink: Sink | None = None
    under: set[int] = field(default_factory=set)
    over: set[int] = field(default_factory=set)
    start: float = field(default_factory=time.monotonic)
    events: list[ProgressEvent] = field(default_factory=list)
    cm_calls: list[tuple[int, int]] = field(default_factory=list)  # (|O| - |U| + 1, calls made)

    def solve(self, assumptions: Iterable[Literal] = ()) -> SolveResult:
        return self.state.solve(sorted(assumptions))

    def emit(self, kind: str):
        event = ProgressEvent(time.monotonic() - self.start, frozenset(self.under), frozenset(self.over),
                              self.strategy, kind)
        self.events.append(event)
        if self.sink is not None:
            self.sink(event)

    def shrink(self, model: Iterable[int]):
        over = self.over & set(model)
        if over != self.over:
            self.over = over
            self.emit("model")

    def grow(self, atoms: Iterable[int]):
        under = self.under | set(atoms)
        if under != self.under:
            self.under = under
            self.emit("core")

    def one_of(self, candidates: Iterable):
        return one_of(candidates, self.state, self.policy)


def _project(state: SolverState, model: frozenset[int]) -> frozenset[int]:
    return frozenset(a for a in model if a < state.base_atoms)


# -- refinement procedures ---------------------------------------------------

def refine_or(ctx: Context):
    ctx.state.add_constraint(constraint(*(pos(a) for a in sorted(ctx.over))))
    result = ctx.solve()
    if result.satisfiable:
        ctx.shrink(result.model)
    else:
        ctx.grow(ctx.over)


def refine_ict(ctx: Context):
    a = ctx.one_of(ctx.over - ctx.under)
    result = ctx.solve([neg(a)])
    if result.satisfiable:
        ctx.shrink(result.model)
    else:
        ctx.grow({a})


def min_opt(state: SolverState, objective: Iterable[int], policy: OneOf = OneOf.ACTIVITY) -> frozenset[int]:
    """A stable model whose projection on ``objective`` is subset-minimal.

    Search decides ``not a`` for every objective atom before anything else; a
    conflict flips objective assignments through the learned clause.
    """
    prefer = [neg(a) for a in rank(objective, state, policy)]
    state.set_branching_preference(prefer)
    try:
        result = state.solve()
    finally:
        state.set_branching_preference(None)
    if not result.satisfiable:
        raise ValueError("program is incoherent")
    return _project(state, result.model)


def min_one(state: SolverState, objective: Iterable[int], policy: OneOf = OneOf.ACTIVITY) -> frozenset[int]:
    """A stable model whose projection on ``objective`` has minimum cardinality.

    Soft literals start as ``not a`` for each objective atom.  Each core
    ``{l0, ..., ln}`` is relaxed with fresh atoms ``p1..pn``: the soft set
    trades the core for ``not p1..not pn`` and the program gains
    ``{l0, ..., ln, p1, ..., pn} >= n`` plus ``:- p_i, not p_(i-1)``.
    """
    soft = {neg(a) for a in objective}
    while True:
        result = state.solve(sorted(soft))
        if result.satisfiable:
            return _project(state, result.model)
        core = result.core
        if not core:
            raise ValueError("program is incoherent")
        lits = sorted(core)
        n = len(lits) - 1
        fresh = [state.new_atom() for _ in range(n)]
        soft = (soft - core) | {neg(p) for p in fresh}
        if n:
            state.add_constraint(ChoiceRule(frozenset(lits) | {pos(p) for p in fresh}, n))
            for i in range(1, n):
                state.add_constraint(constraint(pos(fresh[i]), neg(fresh[i - 1])))


def refine_min(ctx: Context, minimizer: Callable[..., frozenset[int]]):
    model = minimizer(ctx.state, ctx.over, ctx.policy)
    if ctx.over <= model:
        ctx.grow(ctx.over)
    else:
        ctx.shrink(model)


def refine_cm(ctx: Context):
    candidate = {neg(a) for a in ctx.over - ctx.under}
    singled: set[Literal] = set()
    budget = len(ctx.over) - len(ctx.under) + 1
    calls = 0
    while candidate:
        result = ctx.solve(candidate)
        calls += 1
        if result.satisfiable:
            ctx.shrink(result.model)
            candidate, singled = singled, set()
        else:
            core = set(result.core)
            if not core:
                raise RuntimeError("empty core on a coherent program")
            singled = {ctx.one_of(core)}
            candidate = core - singled
    if singled:
        ctx.grow(l.atom for l in singled)
    ctx.cm_calls.append((budget, calls))


_REFINE = {
    Strategy.OR: refine_or,
    Strategy.ICT: refine_ict,
    Strategy.OPT: lambda ctx: refine_min(ctx, min_opt),
    Strategy.ONE: lambda ctx: refine_min(ctx, min_one),
    Strategy.CM: refine_cm,
}


class Reasoner:
    """One run of cautious reasoning; keeps the context for inspection afterwards."""

    def __init__(self, program: Program, strategy: Strategy | str = Strategy.CM, query: Iterable[int] | None = None,
                 *, one_of: OneOf | str = OneOf.ACTIVITY, seed: int = 0, strict: bool = True,
                 sink: Sink | None = None, deadline: float | None = None, state: SolverState | None = None,
                 cap: int = oracle.DEFAULT_CAP):
        self.program = program
        self.strategy = Strategy(strategy)
        self.query = frozenset(program.query if query is None else query)
        self.strict = strict
        self.cap = cap
        self.deadline = deadline
        if state is None and self.strategy != Strategy.ENUM:
            state = translate(program, strict=strict, seed=seed, deadline=deadline)
        elif state is not None and deadline is not None:
            state.deadline = deadline
        self.ctx = Context(program, state, self.strategy, OneOf(one_of), sink)

    @property
    def state(self) -> SolverState | None:
        return self.ctx.state

    @property
    def solver_calls(self) -> int:
        return self.state.stats.calls if self.state is not None else 0

    def run(self):
        ctx = self.ctx
        ctx.start = time.monotonic()
        ctx.under, ctx.over = set(), set(self.query)
        if self.strategy == Strategy.ENUM:
            return self._enumerate()
        result = ctx.solve()
        if not result.satisfiable:
            ctx.emit("INCOHERENT")
            return INCOHERENT
        ctx.shrink(result.model)
        refine = _REFINE[self.strategy]
        while ctx.under != ctx.over:
            refine(ctx)
        ctx.emit("done")
        return frozenset(ctx.under)

    def _enumerate(self):
        ctx = self.ctx
        coherent = False
        for model in oracle.iter_stable_models(self.program, self.cap, self.strict):
            if self.deadline is not None and time.monotonic() >= self.deadline:
                raise SolverTimeout()
            coherent = True
            ctx.shrink(model)
        if not coherent:
            ctx.emit("INCOHERENT")
            return INCOHERENT
        ctx.under = set(ctx.over)
        ctx.emit("done")
        return frozenset(ctx.under)


def cautious_reasoning(strategy: Strategy | str, program: Program, query: Iterable[int] | None = None, **options):
    """Cautious consequences of ``program`` among ``query`` (default: its query set), or ``INCOHERENT``."""
    return Reasoner(program, strategy, query, **options).run()
