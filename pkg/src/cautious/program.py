"""Ground programs: atoms, literals, disjunctive and choice rules, text syntax.

The text syntax accepted by :func:`parse_text_program`::

    a | b.                 % disjunctive fact
    q1 :- a, not c.        % rule
    :- a, b.               % constraint
    1 { a, not b }.        % choice rule: at least 1 of the listed literals
    #query q1, q2.         % query atoms (directive may repeat; union)

Atom names are ``[a-z][A-Za-z0-9_]*`` or double-quoted strings.  Names starting
with ``_`` are reserved for solver-generated atoms and rejected.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

FALSE = 0
FALSE_NAME = "#false"
RESERVED_PREFIX = "_"

_IDENT = re.compile(r"[a-z][A-Za-z0-9_]*")
_INT = re.compile(r"-?[0-9]+")


class _Incoherent(enum.Enum):
    INCOHERENT = "INCOHERENT"

    def __repr__(self) -> str:
        return "INCOHERENT"


#: Result value of cautious reasoning on a program without stable models.
INCOHERENT = _Incoherent.INCOHERENT


class AtomTable:
    """Dense mapping between atom names and identifiers; id 0 is the false atom."""

    def __init__(self, names: Iterable[str] = ()):
        self._names: list[str] = [FALSE_NAME]
        self._ids: dict[str, int] = {FALSE_NAME: FALSE}
        for name in names:
            self.intern(name)

    def intern(self, name: str) -> int:
        ident = self._ids.get(name)
        if ident is None:
            ident = len(self._names)
            self._names.append(name)
            self._ids[name] = ident
        return ident

    def id(self, name: str) -> int:
        return self._ids[name]

    def get(self, name: str) -> int | None:
        return self._ids.get(name)

    def name(self, ident: int) -> str:
        return self._names[ident]

    def atoms(self) -> range:
        """Identifiers of all registered atoms except the false atom."""
        return range(1, len(self._names))

    def copy(self) -> "AtomTable":
        return AtomTable(self._names[1:])

    def __len__(self) -> int:
        return len(self._names)

    def __contains__(self, name: object) -> bool:
        return name in self._ids

    def __repr__(self) -> str:
        return f"AtomTable({self._names[1:]!r})"


class Literal(NamedTuple):
    atom: int
    negated: bool = False

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.negated)


def complement(lit: Literal) -> Literal:
    return lit.complement()


def pos(atom: int) -> Literal:
    return Literal(atom, False)


def neg(atom: int) -> Literal:
    return Literal(atom, True)


@dataclass(frozen=True)
class DisjunctiveRule:
    head: frozenset[int]
    body: frozenset[Literal] = frozenset()

    @property
    def positive_body(self) -> frozenset[int]:
        return frozenset(l.atom for l in self.body if not l.negated)

    @property
    def negative_body(self) -> frozenset[int]:
        return frozenset(l.atom for l in self.body if l.negated)

    @property
    def is_constraint(self) -> bool:
        return self.head <= {FALSE}


@dataclass(frozen=True)
class ChoiceRule:
    literals: frozenset[Literal]
    bound: int = 0

    @property
    def positive_atoms(self) -> frozenset[int]:
        return frozenset(l.atom for l in self.literals if not l.negated)


def constraint(*body: Literal) -> DisjunctiveRule:
    return DisjunctiveRule(frozenset(), frozenset(body))


@dataclass(frozen=True)
class Program:
    atoms: AtomTable
    disjunctive: tuple[DisjunctiveRule, ...] = ()
    choice: tuple[ChoiceRule, ...] = ()
    query: frozenset[int] = field(default=frozenset())

    def __post_init__(self):
        n = len(self.atoms)
        for rule in self.disjunctive:
            if any(not 0 <= a < n for a in rule.head) or any(not 0 <= l.atom < n for l in rule.body):
                raise ValueError("rule references an unregistered atom")
        for rule in self.choice:
            if rule.bound < 0:
                raise ValueError("choice rule bound must be non-negative")
            if any(not 0 <= l.atom < n for l in rule.literals):
                raise ValueError("choice rule references an unregistered atom")
        if FALSE in self.query or any(not 0 < a < n for a in self.query):
            raise ValueError("query must contain registered atoms other than the false atom")

    @property
    def rules(self) -> Iterator[DisjunctiveRule | ChoiceRule]:
        yield from self.disjunctive
        yield from self.choice

    def names(self, atoms: Iterable[int]) -> list[str]:
        """Sorted names of ``atoms``."""
        return sorted(self.atoms.name(a) for a in atoms)

    def extended(self, rules: Iterable[DisjunctiveRule | ChoiceRule], atoms: AtomTable | None = None) -> "Program":
        """A copy with ``rules`` appended; ``atoms`` replaces the table (it must extend it)."""
        table = atoms if atoms is not None else self.atoms
        extra = list(rules)
        return Program(
            table,
            self.disjunctive + tuple(r for r in extra if isinstance(r, DisjunctiveRule)),
            self.choice + tuple(r for r in extra if isinstance(r, ChoiceRule)),
            self.query,
        )

    def with_query(self, query: Iterable[int]) -> "Program":
        return Program(self.atoms, self.disjunctive, self.choice, frozenset(query))

    def canonical(self) -> tuple:
        """Name-level structure, for comparing programs across atom numberings."""
        name = self.atoms.name

        def lits(ls):
            return frozenset((name(l.atom), l.negated) for l in ls)

        return (
            tuple((frozenset(name(a) for a in r.head), lits(r.body)) for r in self.disjunctive),
            tuple((lits(r.literals), r.bound) for r in self.choice),
            frozenset(name(a) for a in self.query),
        )


# ---------------------------------------------------------------------------
# text syntax

class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class _Token(NamedTuple):
    kind: str  # ident, string, int, punct, directive, eof
    value: str
    line: int
    column: int


_PUNCT = (":-", ".", ",", "|", "{", "}")


def _tokenize(text: str) -> Iterator[_Token]:
    line, col, i, n = 1, 1, 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
            continue
        if ch in " \t\r":
            i, col = i + 1, col + 1
            continue
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start = col
        if ch == '"':
            j, buf = i + 1, []
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    raise ParseError("unterminated string", line, start)
                if text[j] == "\\" and j + 1 < n:
                    j += 1
                buf.append(text[j])
                j += 1
            if j >= n:
                raise ParseError("unterminated string", line, start)
            yield _Token("string", "".join(buf), line, start)
            col += j + 1 - i
            i = j + 1
            continue
        m = _IDENT.match(text, i)
        if m:
            yield _Token("ident", m.group(), line, start)
            col += m.end() - i
            i = m.end()
            continue
        m = _INT.match(text, i)
        if m:
            yield _Token("int", m.group(), line, start)
            col += m.end() - i
            i = m.end()
            continue
        if text.startswith("#query", i):
            yield _Token("directive", "#query", line, start)
            i, col = i + 6, col + 6
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                yield _Token("punct", p, line, start)
                i, col = i + len(p), col + len(p)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", line, start)
    yield _Token("eof", "", line, col)


class _TextParser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.pos = 0
        self.atoms = AtomTable()
        self.disjunctive: list[DisjunctiveRule] = []
        self.choice: list[ChoiceRule] = []
        self.query: set[int] = set()
        self.has_query = False

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: _Token | None = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.value)
        raise ParseError(f"{message}, found {found}", tok.line, tok.column)

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def accept(self, value: str) -> bool:
        if self.tok.kind in ("punct", "directive") and self.tok.value == value:
            self.pos += 1
            return True
        return False

    def expect(self, value: str):
        if not self.accept(value):
            prev = self.tokens[self.pos - 1] if self.pos else None
            # a missing period is reported at the end of the preceding token
            if value == "." and prev is not None and self.tok.line != prev.line:
                end = _Token("eof", "", prev.line, prev.column + len(prev.value))
                raise ParseError("expected '.' at end of line", end.line, end.column)
            self.error(f"expected {value!r}")

    def atom(self) -> int:
        tok = self.tok
        if tok.kind == "ident" and tok.value != "not" or tok.kind == "string":
            self.pos += 1
            if tok.value.startswith(RESERVED_PREFIX) or tok.value == FALSE_NAME:
                raise ParseError(f"reserved atom name {tok.value!r}", tok.line, tok.column)
            return self.atoms.intern(tok.value)
        self.error("expected atom")

    def literal(self) -> Literal:
        if self.tok.kind == "ident" and self.tok.value == "not":
            self.pos += 1
            return neg(self.atom())
        return pos(self.atom())

    def literals(self) -> list[Literal]:
        out = [self.literal()]
        while self.accept(","):
            out.append(self.literal())
        return out

    def parse(self) -> Program:
        while self.tok.kind != "eof":
            self.statement()
        query = self.query if self.has_query else set(self.atoms.atoms())
        return Program(self.atoms, tuple(self.disjunctive), tuple(self.choice), frozenset(query))

    def statement(self):
        tok = self.tok
        if tok.kind == "directive":
            self.advance()
            self.has_query = True
            if not self.accept("."):
                self.query.add(self.atom())
                while self.accept(","):
                    self.query.add(self.atom())
                self.expect(".")
            return
        if tok.kind == "int" or (tok.kind == "punct" and tok.value == "{"):
            bound = 0
            if tok.kind == "int":
                if tok.value.startswith("-"):
                    raise ParseError("negative bound", tok.line, tok.column)
                bound = int(self.advance().value)
            self.expect("{")
            lits: list[Literal] = []
            if not self.accept("}"):
                lits = self.literals()
                self.expect("}")
            if self.tok.kind == "punct" and self.tok.value == ":-":
                self.error("choice rules take no body")
            self.expect(".")
            self.choice.append(ChoiceRule(frozenset(lits), bound))
            return
        head: list[int] = []
        if not (tok.kind == "punct" and tok.value == ":-"):
            head.append(self.atom())
            while self.accept("|"):
                head.append(self.atom())
        body: list[Literal] = []
        if self.accept(":-"):
            body = self.literals()
        elif not head:
            self.error("expected rule")
        self.expect(".")
        self.disjunctive.append(DisjunctiveRule(frozenset(head), frozenset(body)))


def parse_text_program(text: str) -> Program:
    """Parse the text syntax; duplicate head atoms or body literals are merged."""
    return _TextParser(text).parse()


def _quote(name: str) -> str:
    if _IDENT.fullmatch(name) and name != "not":
        return name
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def format_literal(lit: Literal, atoms: AtomTable) -> str:
    text = _quote(atoms.name(lit.atom))
    return "not " + text if lit.negated else text


def format_program(program: Program) -> str:
    """Render ``program`` in the text syntax accepted by :func:`parse_text_program`."""
    atoms = program.atoms

    def lits(ls):
        return ", ".join(format_literal(l, atoms) for l in sorted(ls, key=lambda l: (atoms.name(l.atom), l.negated)))

    lines = []
    for rule in program.disjunctive:
        head = " | ".join(_quote(atoms.name(a)) for a in sorted(rule.head, key=atoms.name) if a != FALSE)
        if rule.body:
            lines.append(f"{head} :- {lits(rule.body)}." if head else f":- {lits(rule.body)}.")
        elif head:
            lines.append(f"{head}.")
        else:
            # empty constraint has no text form; encode it as a self-contradiction
            raise ValueError("the empty constraint cannot be written in the text syntax")
    for rule in program.choice:
        lines.append(f"{rule.bound} {{ {lits(rule.literals)} }}." if rule.literals else f"{rule.bound} {{ }}.")
    query = ", ".join(_quote(n) for n in program.names(program.query))
    lines.append(f"#query {query}." if query else "#query.")
    return "\n".join(lines) + "\n"
