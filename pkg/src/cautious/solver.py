"""Incremental stable-model search under assumptions.

A program is translated into clauses (completion of the shifted normal
program), counting constraints (one per choice rule with a positive bound) and
positive dependency information used for unfounded-set propagation.  Search is
conflict-driven clause learning with first-UIP learning, phase saving,
geometric restarts and assumption literals.  An unsatisfiable call returns the
subset of assumptions reached by final conflict analysis.

Internal literals are integers ``2 * var + sign`` where ``sign == 1`` means
negated; variable 0 is the false atom.  Public methods take and return
:class:`~cautious.program.Literal` values over the state's atom table.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import networkx as nx

from .program import (
    FALSE,
    AtomTable,
    ChoiceRule,
    DisjunctiveRule,
    Literal,
    Program,
)

TRUE_LIT = 1  # "not #false"
RELAX_PREFIX = "_relax_"


class HeadCycleError(ValueError):
    """The program has two head atoms of one rule on a common positive cycle."""

    def __init__(self, atoms: Sequence[str]):
        super().__init__("program is not head-cycle-free: head atoms " + ", ".join(atoms) + " share a positive cycle")
        self.atoms = tuple(atoms)


class SolverTimeout(Exception):
    pass


@dataclass(frozen=True)
class SolveResult:
    model: frozenset[int] | None = None
    core: frozenset[Literal] | None = None

    @property
    def satisfiable(self) -> bool:
        return self.model is not None


class Conflict(NamedTuple):
    clause: tuple[Literal, ...]


@dataclass(frozen=True)
class LearnedClause:
    """A learned clause and the level search resumed at; empty clause: incoherent."""

    clause: tuple[Literal, ...]
    level: int


@dataclass
class SolverStats:
    calls: int = 0
    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0
    learned: int = 0
    restarts: int = 0
    peak_trail: int = 0


class _Clause:
    __slots__ = ("lits", "learnt", "activity", "deleted")

    def __init__(self, lits: list[int], learnt: bool = False):
        self.lits = lits
        self.learnt = learnt
        self.activity = 0.0
        self.deleted = False


class _Card:
    __slots__ = ("lits", "bound")

    def __init__(self, lits: list[int], bound: int):
        self.lits = lits
        self.bound = bound


def _positive_graph(program: Program) -> nx.DiGraph:
    graph = nx.DiGraph()
    for rule in program.disjunctive:
        body = rule.positive_body - {FALSE}
        for p in rule.head - {FALSE}:
            graph.add_node(p)
            for q in body:
                graph.add_edge(p, q)
    return graph


def find_head_cycle(program: Program) -> tuple[str, ...] | None:
    """Names of two co-headed atoms on a common positive cycle, if any."""
    graph = _positive_graph(program)
    component = {}
    for k, scc in enumerate(nx.strongly_connected_components(graph)):
        for a in scc:
            component[a] = k
    for rule in program.disjunctive:
        head = sorted(rule.head - {FALSE})
        for i, p in enumerate(head):
            for q in head[i + 1:]:
                if component[p] == component[q]:
                    return (program.atoms.name(p), program.atoms.name(q))
    return None


def check_head_cycle_free(program: Program) -> bool:
    return find_head_cycle(program) is None


class SolverState:
    """Search state for one program; reusable across calls (learned clauses persist).

    Not thread-safe.  Use :func:`translate` to build one from a program.
    """

    def __init__(self, atoms: AtomTable, *, seed: int = 0, random_freq: float = 0.01,
                 deadline: float | None = None):
        self.atoms = atoms.copy()
        self.base_atoms = len(self.atoms)  # atoms of the translated program; later ones are fresh
        self.rng = random.Random(seed)
        self.random_freq = random_freq
        self.deadline = deadline
        self.stats = SolverStats()
        self.ok = True

        self.val: list[int] = []  # per literal: 1 true, -1 false, 0 open
        self.level: list[int] = []
        self.reason: list[_Clause | None] = []
        self.activity: list[float] = []
        self.phase: list[bool] = []
        self.seen: list[bool] = []
        self.watches: list[list[_Clause]] = []
        self.card_occ: list[list[_Card]] = []
        self.var_atom: list[int] = []
        self.atom_var: list[int] = []

        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.learnts: list[_Clause] = []
        self.var_inc = 1.0
        self.cla_inc = 1.0
        self.max_learnts = 2000
        self.restart_first = 100
        self.restart_factor = 1.5

        self.choice_vars: set[int] = set()
        self.pending_vars: set[int] = set()  # fresh atoms not yet given a definition
        self.bodies: dict[frozenset[int], int] = {}
        self.cyclic: list[list[int]] = []
        self.scc_rules: dict[int, list[tuple[int, tuple[int, ...]]]] = {}

        self.preference: list[int] = []
        self.last_decisions: list[Literal] = []
        self.last_core: frozenset[Literal] | None = None
        self._assumptions: list[int] = []
        self._relax_count = 0

        for a in range(len(self.atoms)):
            self._new_var(atom=a)
        self._enqueue(TRUE_LIT, None)

    # -- variables and literals ------------------------------------------------

    def _new_var(self, atom: int = -1) -> int:
        v = len(self.level)
        self.val += [0, 0]
        self.level.append(0)
        self.reason.append(None)
        self.activity.append(0.0)
        self.phase.append(False)
        self.seen.append(False)
        self.watches += [[], []]
        self.card_occ += [[], []]
        self.var_atom.append(atom)
        if atom >= 0:
            assert atom == len(self.atom_var)
            self.atom_var.append(v)
        return v

    def new_atom(self, name: str | None = None) -> int:
        """Register a fresh atom; it stays false unless a later choice rule frees it."""
        if name is None:
            self._relax_count += 1
            name = f"{RELAX_PREFIX}{self._relax_count}"
            while name in self.atoms:
                self._relax_count += 1
                name = f"{RELAX_PREFIX}{self._relax_count}"
        if name in self.atoms:
            raise ValueError(f"atom {name!r} already exists")
        atom = self.atoms.intern(name)
        v = self._new_var(atom)
        self.pending_vars.add(v)
        return atom

    def _lit(self, lit: Literal) -> int:
        if not 0 <= lit.atom < len(self.atom_var):
            raise ValueError(f"unknown atom {lit.atom}")
        return 2 * self.atom_var[lit.atom] + (1 if lit.negated else 0)

    def _ext(self, lit: int) -> Literal:
        atom = self.var_atom[lit >> 1]
        if atom < 0:
            raise ValueError("auxiliary literal has no atom")
        return Literal(atom, bool(lit & 1))

    def _ext_clause(self, lits) -> tuple[Literal, ...]:
        # body variables are reported through their defining literals where possible
        return tuple(self._ext(l) for l in lits if self.var_atom[l >> 1] >= 0)

    def value(self, lit: Literal) -> bool | None:
        v = self.val[self._lit(lit)]
        return None if v == 0 else v == 1

    # -- trail -----------------------------------------------------------------

    def _enqueue(self, lit: int, reason: _Clause | None):
        self.val[lit] = 1
        self.val[lit ^ 1] = -1
        v = lit >> 1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)

    def _backtrack(self, lvl: int):
        if len(self.trail_lim) <= lvl:
            return
        stop = self.trail_lim[lvl]
        val, reason, phase = self.val, self.reason, self.phase
        for lit in self.trail[stop:]:
            v = lit >> 1
            val[lit] = val[lit ^ 1] = 0
            reason[v] = None
            phase[v] = not lit & 1
        del self.trail[stop:]
        del self.trail_lim[lvl:]
        self.qhead = stop

    def reset(self):
        """Undo every assignment above the root level."""
        self._backtrack(0)

    def trail_literals(self) -> list[Literal]:
        return [self._ext(l) for l in self.trail if self.var_atom[l >> 1] >= 0]

    # -- loading -----------------------------------------------------------------

    def _add_clause(self, lits, learnt: bool = False) -> _Clause | None:
        """Add a clause at the root level, simplified against root assignments."""
        assert not self.trail_lim
        val = self.val
        out = []
        for l in dict.fromkeys(lits):
            if l ^ 1 in out or val[l] == 1:
                return None
            if val[l] == 0:
                out.append(l)
        if not out:
            self.ok = False
            return None
        if len(out) == 1:
            self._enqueue(out[0], None)
            return None
        c = _Clause(out, learnt)
        self.watches[out[0]].append(c)
        self.watches[out[1]].append(c)
        if learnt:
            self.learnts.append(c)
        return c

    def _body_literal(self, body: frozenset[int]) -> int:
        if not body:
            return TRUE_LIT
        if len(body) == 1:
            return next(iter(body))
        b = self.bodies.get(body)
        if b is None:
            b = 2 * self._new_var()
            self.bodies[body] = b
            for l in sorted(body):
                self._add_clause([b ^ 1, l])
            self._add_clause([b] + sorted(l ^ 1 for l in body))
        return b

    def _add_card(self, lits: Sequence[int], bound: int):
        lits = list(dict.fromkeys(lits))
        if bound <= 0:
            return
        card = _Card(lits, bound)
        for l in lits:
            self.card_occ[l].append(card)
        confl = self._card_propagate(card)
        if confl is not None:
            self.ok = False

    def _load(self, program: Program, strict: bool):
        enc = self._lit
        choice_atoms = set()
        for rule in program.choice:
            choice_atoms |= rule.positive_atoms - {FALSE}
        self.choice_vars = {self.atom_var[a] for a in choice_atoms}

        normal: list[tuple[int, frozenset[int]]] = []
        for rule in program.disjunctive:
            if FALSE in rule.positive_body:
                continue
            body = frozenset(enc(l) for l in rule.body) - {TRUE_LIT}
            if any(l ^ 1 in body for l in body):
                continue
            head = sorted(rule.head - {FALSE})
            if not head:
                self._add_clause(sorted(l ^ 1 for l in body))
                continue
            for p in head:
                shifted = body | {2 * self.atom_var[q] + 1 for q in head if q != p}
                if any(l ^ 1 in shifted for l in shifted):
                    continue
                normal.append((self.atom_var[p], shifted))

        supports: dict[int, list[tuple[int, frozenset[int]]]] = {}
        for v, body in normal:
            beta = self._body_literal(body)
            self._add_clause([beta ^ 1, 2 * v])
            supports.setdefault(v, []).append((beta, body))
        for a in program.atoms.atoms():
            v = self.atom_var[a]
            if v in self.choice_vars:
                continue
            betas = sorted({beta for beta, _ in supports.get(v, ())})
            if TRUE_LIT not in betas:
                self._add_clause([2 * v + 1] + betas)
        self._add_clause([TRUE_LIT])  # keeps the root queue primed

        if strict:
            for rule in program.choice:
                self._add_card([enc(l) for l in rule.literals], rule.bound)

        graph = nx.DiGraph()
        for v, body in normal:
            graph.add_node(v)
            for l in body:
                if not l & 1:
                    graph.add_edge(v, l >> 1)
        for scc in nx.strongly_connected_components(graph):
            members = sorted(scc)
            if len(members) == 1 and not graph.has_edge(members[0], members[0]):
                continue
            inside = set(members)
            self.cyclic.append(members)
            for v in members:
                self.scc_rules[v] = [
                    (beta, tuple(sorted(l >> 1 for l in body if not l & 1 and l >> 1 in inside)))
                    for beta, body in supports.get(v, ())
                ]

    def add_constraint(self, rule: DisjunctiveRule | ChoiceRule):
        """Extend the program with a constraint or a choice rule; learned clauses are kept.

        Positive atoms of a choice rule must be fresh (from :meth:`new_atom`) or
        already occur positively in some choice rule.
        """
        self._backtrack(0)
        if isinstance(rule, DisjunctiveRule):
            if not rule.is_constraint:
                raise ValueError("only constraints can be added incrementally")
            if FALSE in rule.positive_body:
                return
            body = {self._lit(l) for l in rule.body} - {TRUE_LIT}
            self._add_clause(sorted(l ^ 1 for l in body))
            return
        for a in rule.positive_atoms - {FALSE}:
            v = self.atom_var[a]
            if v in self.pending_vars:
                self.pending_vars.discard(v)
                self.choice_vars.add(v)
            elif v not in self.choice_vars:
                raise ValueError(f"atom {self.atoms.name(a)!r} already has a definition")
        self._add_card([self._lit(l) for l in rule.literals], rule.bound)

    def _settle_pending(self):
        for v in sorted(self.pending_vars):
            self._add_clause([2 * v + 1])
        self.pending_vars.clear()

    # -- propagation -----------------------------------------------------------

    def _card_propagate(self, card: _Card) -> list[int] | None:
        val = self.val
        falses = [l for l in card.lits if val[l] == -1]
        slack = len(card.lits) - len(falses) - card.bound
        if slack < 0:
            return falses
        if slack == 0:
            for l in card.lits:
                if val[l] == 0:
                    self._enqueue(l, _Clause([l] + falses))
        return None

    def _unit_propagate(self) -> list[int] | None:
        val, watches, trail = self.val, self.watches, self.trail
        card_occ = self.card_occ
        while self.qhead < len(trail):
            p = trail[self.qhead]
            self.qhead += 1
            self.stats.propagations += 1
            false_lit = p ^ 1
            ws = watches[false_lit]
            keep = []
            for idx, c in enumerate(ws):
                if c.deleted:
                    continue
                lits = c.lits
                if lits[0] == false_lit:
                    lits[0], lits[1] = lits[1], false_lit
                first = lits[0]
                if val[first] == 1:
                    keep.append(c)
                    continue
                for k in range(2, len(lits)):
                    if val[lits[k]] != -1:
                        lits[1], lits[k] = lits[k], false_lit
                        watches[lits[1]].append(c)
                        break
                else:
                    keep.append(c)
                    if val[first] == -1:
                        keep.extend(ws[idx + 1:])
                        watches[false_lit] = keep
                        self.qhead = len(trail)
                        return lits
                    self._enqueue(first, c)
            watches[false_lit] = keep
            for card in card_occ[false_lit]:
                confl = self._card_propagate(card)
                if confl is not None:
                    self.qhead = len(trail)
                    return confl
        return None

    def _unfounded(self) -> tuple[list[int] | None, bool]:
        """Falsify one unfounded set; returns (conflict, whether anything was assigned)."""
        val, choice = self.val, self.choice_vars
        for scc in self.cyclic:
            open_atoms = [v for v in scc if val[2 * v] != -1]
            if not open_atoms:
                continue
            supported: set[int] = set()
            changed = True
            while changed:
                changed = False
                for v in open_atoms:
                    if v in supported:
                        continue
                    if v in choice or any(
                        val[beta] != -1 and all(q in supported for q in inner)
                        for beta, inner in self.scc_rules[v]
                    ):
                        supported.add(v)
                        changed = True
            unfounded = [v for v in open_atoms if v not in supported]
            if not unfounded:
                continue
            members = set(unfounded)
            external = sorted({
                beta
                for v in unfounded
                for beta, inner in self.scc_rules[v]
                if not members.intersection(inner)
            })
            for v in unfounded:
                if val[2 * v] == 1:
                    return [2 * v + 1] + external, False
            for v in unfounded:
                self._enqueue(2 * v + 1, _Clause([2 * v + 1] + external))
            return None, True
        return None, False

    def _propagate(self) -> list[int] | None:
        while True:
            confl = self._unit_propagate()
            if confl is not None or not self.cyclic:
                return confl
            confl, progressed = self._unfounded()
            if confl is not None or not progressed:
                return confl

    # -- conflict analysis -------------------------------------------------------

    def _bump_var(self, v: int):
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            self.activity = [a * 1e-100 for a in self.activity]
            self.var_inc *= 1e-100

    def _bump_clause(self, c: _Clause):
        c.activity += self.cla_inc
        if c.activity > 1e20:
            for d in self.learnts:
                d.activity *= 1e-20
            self.cla_inc *= 1e-20

    def _analyze(self, confl: list[int]) -> tuple[list[int], int]:
        level, reason, seen, trail = self.level, self.reason, self.seen, self.trail
        current = len(self.trail_lim)
        learnt = [0]
        path = 0
        idx = len(trail) - 1
        lits = confl
        p = None
        while True:
            for q in (lits if p is None else lits[1:]):
                v = q >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = True
                    self._bump_var(v)
                    if level[v] >= current:
                        path += 1
                    else:
                        learnt.append(q)
            while not seen[trail[idx] >> 1]:
                idx -= 1
            p = trail[idx]
            idx -= 1
            v = p >> 1
            seen[v] = False
            path -= 1
            if path == 0:
                break
            r = reason[v]
            if r.learnt:
                self._bump_clause(r)
            lits = r.lits
        learnt[0] = p ^ 1
        # drop literals implied by the rest of the clause (local minimization)
        for q in learnt[1:]:
            seen[q >> 1] = True
        kept = [learnt[0]]
        for q in learnt[1:]:
            r = reason[q >> 1]
            if r is None or not all(seen[x >> 1] or level[x >> 1] == 0 for x in r.lits[1:]):
                kept.append(q)
        for q in learnt[1:]:
            seen[q >> 1] = False
        learnt = kept
        if len(learnt) == 1:
            return learnt, 0
        best = max(range(1, len(learnt)), key=lambda i: level[learnt[i] >> 1])
        learnt[1], learnt[best] = learnt[best], learnt[1]
        return learnt, level[learnt[1] >> 1]

    def _learn(self, confl: list[int]) -> list[int] | None:
        """Analyze, backjump and assert; ``None`` if the conflict holds at the root."""
        top = max((self.level[l >> 1] for l in confl), default=0)
        if top == 0:
            self.ok = False
            self._backtrack(0)
            return None
        if top < len(self.trail_lim):
            self._backtrack(top)
        learnt, bt = self._analyze(confl)
        self._backtrack(bt)
        self.stats.learned += 1
        if len(learnt) == 1:
            self._enqueue(learnt[0], None)
        else:
            c = _Clause(learnt, learnt=True)
            self.watches[learnt[0]].append(c)
            self.watches[learnt[1]].append(c)
            self.learnts.append(c)
            self._bump_clause(c)
            self._enqueue(learnt[0], c)
        self.var_inc /= 0.95
        self.cla_inc /= 0.999
        return learnt

    def _analyze_final(self, p: int) -> frozenset[int]:
        """Assumptions responsible for assumption ``p`` being false."""
        core = {p}
        v = p >> 1
        if self.level[v] == 0:
            return frozenset(core)
        seen, reason, level = self.seen, self.reason, self.level
        seen[v] = True
        for i in range(len(self.trail) - 1, self.trail_lim[0] - 1, -1):
            x = self.trail[i] >> 1
            if seen[x]:
                r = reason[x]
                if r is None:
                    core.add(self.trail[i])
                else:
                    for q in r.lits[1:]:
                        if level[q >> 1] > 0:
                            seen[q >> 1] = True
                seen[x] = False
        return frozenset(core)

    def _reduce_db(self):
        locked = set()
        for lit in self.trail:
            r = self.reason[lit >> 1]
            if r is not None and r.learnt:
                locked.add(id(r))
        candidates = [c for c in self.learnts if len(c.lits) > 2 and id(c) not in locked]
        candidates.sort(key=lambda c: c.activity)
        for c in candidates[: len(candidates) // 2]:
            c.deleted = True
        self.learnts = [c for c in self.learnts if not c.deleted]
        self.max_learnts = int(self.max_learnts * 1.1)

    # -- search ----------------------------------------------------------------

    def _pick_branch(self) -> int | None:
        val = self.val
        for l in self.preference:
            if val[l] == 0:
                return l
        open_vars = None
        if self.random_freq and self.rng.random() < self.random_freq:
            open_vars = [v for v in self.atom_var if val[2 * v] == 0]
            if open_vars:
                v = open_vars[self.rng.randrange(len(open_vars))]
                return 2 * v + (0 if self.phase[v] else 1)
        best, best_act = -1, -1.0
        activity = self.activity
        for v in self.atom_var:
            if val[2 * v] == 0 and activity[v] > best_act:
                best, best_act = v, activity[v]
        if best < 0:
            return None
        return 2 * best + (0 if self.phase[best] else 1)

    def _preference_pending(self) -> bool:
        val = self.val
        return any(val[l] == 0 for l in self.preference)

    def _check_deadline(self):
        if self.deadline is not None and time.monotonic() >= self.deadline:
            self._backtrack(0)
            raise SolverTimeout()

    def set_branching_preference(self, prefer: Sequence[Literal] | None):
        """Decide these literals first, in order, while any of them is unassigned."""
        self.preference = [self._lit(l) for l in prefer] if prefer else []

    def solve(self, assumptions: Sequence[Literal] = ()) -> SolveResult:
        self.stats.calls += 1
        self._backtrack(0)
        self._settle_pending()
        self.last_decisions = []
        assume = [self._lit(l) for l in assumptions]
        self._assumptions = assume
        if not self.ok:
            return self._unsat(frozenset())
        trail, val = self.trail, self.val
        budget = self.restart_first
        since_restart = 0
        ticks = 0
        while True:
            ticks += 1
            if ticks & 63 == 0:
                self._check_deadline()
            confl = self._propagate()
            if confl is not None:
                self.stats.conflicts += 1
                since_restart += 1
                if self._learn(confl) is None:
                    return self._unsat(frozenset())
                continue
            if since_restart >= budget and not self._preference_pending():
                since_restart = 0
                budget = int(budget * self.restart_factor)
                self.stats.restarts += 1
                self._backtrack(0)
                continue
            if len(self.learnts) - len(self.trail) >= self.max_learnts:
                self._reduce_db()
            lvl = len(self.trail_lim)
            if lvl < len(assume):
                p = assume[lvl]
                if val[p] == 1:
                    self.trail_lim.append(len(trail))
                elif val[p] == -1:
                    core = self._analyze_final(p)
                    self._backtrack(0)
                    return self._unsat(frozenset(self._ext(l) for l in core))
                else:
                    self.trail_lim.append(len(trail))
                    self._enqueue(p, None)
                continue
            d = self._pick_branch()
            if d is None:
                model = frozenset(
                    a for a in range(1, len(self.atom_var)) if val[2 * self.atom_var[a]] == 1
                )
                self.stats.peak_trail = max(self.stats.peak_trail, len(trail))
                self._backtrack(0)
                self.last_core = None
                return SolveResult(model=model)
            self.stats.decisions += 1
            if len(self.last_decisions) < 1000:
                self.last_decisions.append(self._ext(d))
            self.trail_lim.append(len(trail))
            self._enqueue(d, None)
            if len(trail) > self.stats.peak_trail:
                self.stats.peak_trail = len(trail)

    def _unsat(self, core: frozenset[Literal]) -> SolveResult:
        self.last_core = core
        return SolveResult(core=core)

    # -- step-wise interface (inspection and tests) ----------------------------

    def assume(self, lit: Literal) -> bool:
        """Open a decision level asserting ``lit``; False if it is already false."""
        if not self.trail_lim:
            self._settle_pending()
        l = self._lit(lit)
        if self.val[l] == -1:
            return False
        self.trail_lim.append(len(self.trail))
        if self.val[l] == 0:
            self._enqueue(l, None)
        return True

    def propagate(self) -> Conflict | None:
        if not self.trail_lim:
            self._settle_pending()
        # an inconsistency found while adding clauses is a root-level conflict
        confl = [] if not self.ok else self._propagate()
        if confl is None:
            return None
        self._pending_conflict = confl
        return Conflict(self._ext_clause(confl))

    def analyze_conflict(self, conflict: Conflict | None = None) -> LearnedClause:
        """Learn from the last conflict returned by :meth:`propagate` and backjump."""
        confl = self._pending_conflict
        self._pending_conflict = None
        learnt = self._learn(confl)
        if learnt is None:
            return LearnedClause((), -1)
        return LearnedClause(self._ext_clause(learnt), len(self.trail_lim))

    _pending_conflict: list[int] | None = None

    def extract_core(self) -> frozenset[Literal]:
        if self.last_core is None:
            raise ValueError("the last call did not end unsatisfiable")
        return self.last_core

    def atom_activity(self, atom: int) -> float:
        return self.activity[self.atom_var[atom]]


def translate(program: Program, *, strict: bool = True, seed: int = 0, random_freq: float = 0.01,
              deadline: float | None = None) -> SolverState:
    """Build a search state for ``program``; raises :class:`HeadCycleError` if not head-cycle-free."""
    cycle = find_head_cycle(program)
    if cycle is not None:
        raise HeadCycleError(cycle)
    state = SolverState(program.atoms, seed=seed, random_freq=random_freq, deadline=deadline)
    state._load(program, strict)
    return state


def compute_stable_model(state: SolverState, assumptions: Sequence[Literal] = ()) -> SolveResult:
    return state.solve(assumptions)
