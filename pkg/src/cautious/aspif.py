"""Reader for the subset of ASPIF version 1 that maps onto disjunctive and choice rules.

Supported statements: rules with disjunctive or choice heads over normal bodies
(type 1), output/show (type 4) and comments (type 10).  Everything else is
rejected with :class:`AspifError` naming the statement kind.

Choice heads with an empty body become ``{a1, ..., an} >= 0``.  A choice head
``{a} :- B`` with a non-empty body is rewritten as ``a :- B, not _aspif_nc_a`` and
``_aspif_nc_a :- not a``, which keeps the positive dependencies of ``a`` intact.
"""

from __future__ import annotations

from typing import BinaryIO, TextIO

from .program import (
    AtomTable,
    ChoiceRule,
    DisjunctiveRule,
    Literal,
    Program,
    neg,
    pos,
)

_KINDS = {
    2: "minimize",
    3: "projection",
    5: "external",
    6: "assumption",
    7: "heuristic",
    8: "edge",
    9: "theory",
}

HIDDEN_PREFIX = "_aspif_"


class AspifError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _ints(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise AspifError("malformed statement", lineno) from None


def parse_aspif(data: bytes | str | BinaryIO | TextIO, query: frozenset[str] | None = None) -> Program:
    """Read an ASPIF v1 program.  ``query`` (atom names) overrides the shown atoms."""
    if hasattr(data, "read"):
        data = data.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    lines = data.splitlines()
    if not lines or lines[0].split()[:2] != ["asp", "1"]:
        raise AspifError("expected header 'asp 1 <minor> <revision>'", 1)
    header = lines[0].split()
    if len(header) < 4:
        raise AspifError("expected header 'asp 1 <minor> <revision>'", 1)
    if "incremental" in header[4:]:
        raise AspifError("unsupported statement: incremental program", 1)

    rules: list[tuple[str, list[int], list[int]]] = []
    shows: list[tuple[str, list[int], int]] = []
    ended = False

    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        if ended:
            raise AspifError("statement after end marker", lineno)
        kind, _, rest = line.strip().partition(" ")
        kind = _ints([kind], lineno)[0]
        if kind == 0:
            ended = True
        elif kind == 1:
            f = _ints(rest.split(), lineno)
            if len(f) < 2:
                raise AspifError("malformed rule", lineno)
            htype, h = f[0], f[1]
            head = f[2:2 + h]
            b = f[2 + h:]
            if htype not in (0, 1) or len(head) != h or not b:
                raise AspifError("malformed rule", lineno)
            if b[0] == 1:
                raise AspifError("unsupported statement: weight rule", lineno)
            if b[0] != 0 or len(b) < 2 or len(b) != 2 + b[1]:
                raise AspifError("malformed rule body", lineno)
            body = b[2:]
            if any(a <= 0 for a in head) or 0 in body:
                raise AspifError("malformed literal", lineno)
            rules.append(("choice" if htype == 1 else "rule", head, body))
        elif kind == 4:
            m_text, _, rest = rest.partition(" ")
            m = _ints([m_text], lineno)[0]
            name, rest = rest[:m], rest[m:]
            if len(name) != m:
                raise AspifError("malformed output statement", lineno)
            f = _ints(rest.split(), lineno)
            if not f or len(f) != 1 + f[0]:
                raise AspifError("malformed output statement", lineno)
            shows.append((name, f[1:], lineno))
        elif kind == 10:
            continue
        elif kind in _KINDS:
            raise AspifError(f"unsupported statement: {_KINDS[kind]}", lineno)
        else:
            raise AspifError(f"unknown statement type {kind}", lineno)
    if not ended:
        raise AspifError("missing end marker '0'", len(lines))

    # names: an output over a single positive literal names that atom directly
    table = AtomTable()
    named: dict[int, int] = {}
    extra: list[DisjunctiveRule] = []
    shown: set[int] = set()
    for name, cond, _ in shows:
        if len(cond) == 1 and cond[0] > 0 and cond[0] not in named and name not in table:
            named[cond[0]] = table.intern(name)
            shown.add(named[cond[0]])
    used = {abs(l) for _, head, body in rules for l in head + body}
    used.update(abs(l) for _, cond, _ in shows for l in cond)
    for a in sorted(used):
        if a not in named:
            named[a] = table.intern(f"{HIDDEN_PREFIX}{a}")

    def lit(l: int) -> Literal:
        return pos(named[l]) if l > 0 else neg(named[-l])

    for name, cond, _ in shows:
        if len(cond) == 1 and cond[0] > 0 and named[cond[0]] == table.get(name):
            continue
        # general output: name holds whenever the condition holds
        atom = table.intern(name)
        shown.add(atom)
        extra.append(DisjunctiveRule(frozenset({atom}), frozenset(lit(l) for l in cond)))

    disjunctive: list[DisjunctiveRule] = []
    choice: list[ChoiceRule] = []
    for kind, head, body in rules:
        body_lits = frozenset(lit(l) for l in body)
        if kind == "rule":
            disjunctive.append(DisjunctiveRule(frozenset(named[a] for a in head), body_lits))
        elif not body:
            choice.append(ChoiceRule(frozenset(pos(named[a]) for a in head), 0))
        else:
            for a in head:
                other = table.intern(f"{HIDDEN_PREFIX}nc_{a}_{len(table)}")
                disjunctive.append(DisjunctiveRule(frozenset({named[a]}), body_lits | {neg(other)}))
                disjunctive.append(DisjunctiveRule(frozenset({other}), frozenset({neg(named[a])})))
    disjunctive.extend(extra)

    if query is not None:
        missing = [n for n in query if n not in table]
        if missing:
            raise AspifError(f"query atom {sorted(missing)[0]!r} does not occur in the program", 1)
        q = frozenset(table.id(n) for n in query)
    else:
        q = frozenset(shown)
    return Program(table, tuple(disjunctive), tuple(choice), q)
