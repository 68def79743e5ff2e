"""Command-line front end: ``cautious [run] [options] [FILE]`` and ``cautious bench DIR``.

Exit status of ``run``: 0 answer, 10 incoherent, 1 input error, 20 timeout.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TextIO

from .aspif import AspifError, parse_aspif
from .engine import OneOf, ProgressEvent, Reasoner, Strategy
from .oracle import EnumerationCapExceeded
from .program import INCOHERENT, ParseError, Program, parse_text_program
from .solver import HeadCycleError, SolverTimeout

EXIT_ANSWER = 0
EXIT_INPUT = 1
EXIT_INCOHERENT = 10
EXIT_TIMEOUT = 20

BENCH_HEADER = ("instance", "strategy", "outcome", "time_s", "solver_calls")
INSTANCE_SUFFIXES = (".lp", ".aspif")


class InputError(Exception):
    """Bad input: reported on one line, exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise InputError(message)


def _common_options(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=("text", "aspif", "auto"), default="auto")
    parser.add_argument("--query", help="comma-separated atom names, replacing any query directive")
    parser.add_argument("--timeout", type=float, default=0.0, help="seconds, 0 for none")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--oneof", choices=[p.value for p in OneOf], default=OneOf.ACTIVITY.value)
    parser.add_argument("--strict-choice-bounds", choices=("on", "off"), default="on")


def _run_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cautious", description="Cautious consequences of a ground program.")
    parser.add_argument("input", nargs="?", default="-", help="program file, '-' or omitted for stdin")
    parser.add_argument("--algorithm", choices=[s.value for s in Strategy], default=Strategy.CM.value)
    parser.add_argument("--progress", action="store_true", help="report estimations on stderr")
    _common_options(parser)
    return parser


def _bench_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cautious bench", description="Run strategies over a directory of instances; CSV on stdout.")
    parser.add_argument("directory")
    parser.add_argument("--algorithms", default="or,ict,opt,one,cm", help="comma-separated strategies")
    parser.add_argument("--jobs", type=int, default=1)
    _common_options(parser)
    return parser


# -- input -----------------------------------------------------------------

def _split_names(text: str | None) -> frozenset[str] | None:
    if text is None:
        return None
    return frozenset(n.strip() for n in text.split(",") if n.strip())


def load_program(data: bytes, fmt: str = "auto", query: frozenset[str] | None = None) -> Program:
    """Parse ``data`` as text or ASPIF (``auto`` looks for the ``asp`` header)."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"input is not UTF-8: {exc}") from None
    if fmt == "auto":
        fmt = "aspif" if text.lstrip().split(" ", 1)[0] == "asp" else "text"
    try:
        if fmt == "aspif":
            return parse_aspif(text, query)
        program = parse_text_program(text)
    except (ParseError, AspifError) as exc:
        raise InputError(f"parse error: {exc}") from None
    if query is None:
        return program
    missing = sorted(n for n in query if n not in program.atoms)
    if missing:
        raise InputError(f"query atom {missing[0]!r} does not occur in the program")
    return program.with_query(program.atoms.id(n) for n in query)


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _deadline(timeout: float) -> float | None:
    if timeout < 0:
        raise InputError("--timeout must be non-negative")
    return time.monotonic() + timeout if timeout > 0 else None


def _reasoner(program: Program, strategy: str, args, sink=None) -> Reasoner:
    try:
        return Reasoner(program, strategy, one_of=args.oneof, seed=args.seed,
                        strict=args.strict_choice_bounds == "on", sink=sink, deadline=_deadline(args.timeout))
    except HeadCycleError as exc:
        raise InputError(f"unsupported program: {exc}") from None


def format_answer(program: Program, answer) -> str:
    if answer is INCOHERENT:
        return "INCOHERENT\n"
    return "".join(f"{n}\n" for n in sorted(program.names(answer)))


def format_progress(event: ProgressEvent) -> str:
    return f"PROGRESS {event.elapsed:.3f} {len(event.under)} {len(event.over)} {event.kind}\n"


# -- run -------------------------------------------------------------------

def run(argv: Sequence[str], stdout: TextIO, stderr: TextIO) -> int:
    args = _run_parser().parse_args(argv)
    program = load_program(_read_input(args.input), args.format, _split_names(args.query))

    def sink(event: ProgressEvent):
        stderr.write(format_progress(event))
        stderr.flush()

    reasoner = _reasoner(program, args.algorithm, args, sink if args.progress else None)
    try:
        answer = reasoner.run()
    except SolverTimeout:
        stderr.write("cautious: timeout\n")
        return EXIT_TIMEOUT
    except EnumerationCapExceeded as exc:
        raise InputError(f"unsupported program: {exc}") from None
    stdout.write(format_answer(program, answer))
    return EXIT_INCOHERENT if answer is INCOHERENT else EXIT_ANSWER


# -- bench -----------------------------------------------------------------

@dataclass(frozen=True)
class RunRecord:
    instance: str
    strategy: str
    outcome: str  # answer size, INCOHERENT or timeout
    time_s: float
    solver_calls: int
    learned: int
    peak_trail: int

    @property
    def solved(self) -> bool:
        return self.outcome != "timeout"

    def row(self) -> tuple[str, str, str, str, str]:
        return self.instance, self.strategy, self.outcome, f"{self.time_s:.3f}", str(self.solver_calls)


def _bench_one(job: tuple[str, bytes, str, argparse.Namespace]) -> RunRecord:
    name, data, strategy, args = job
    program = load_program(data, args.format, _split_names(args.query))
    reasoner = _reasoner(program, strategy, args)
    start = time.monotonic()
    try:
        answer = reasoner.run()
        outcome = "INCOHERENT" if answer is INCOHERENT else str(len(answer))
    except SolverTimeout:
        outcome = "timeout"
    except EnumerationCapExceeded:
        outcome = "timeout"  # refusal counts as unsolved
    elapsed = time.monotonic() - start
    if outcome == "timeout":
        elapsed = max(elapsed, args.timeout)
    stats = reasoner.state.stats if reasoner.state is not None else None
    return RunRecord(name, strategy, outcome, elapsed, reasoner.solver_calls,
                     stats.learned if stats else 0, stats.peak_trail if stats else 0)


def bench_records(args: argparse.Namespace) -> list[RunRecord]:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise InputError(f"not a directory: {directory}")
    files = sorted(p for p in directory.iterdir() if p.is_file() and p.suffix in INSTANCE_SUFFIXES)
    if not files:
        raise InputError(f"no instances ({', '.join(INSTANCE_SUFFIXES)}) in {directory}")
    strategies = [s.strip() for s in args.algorithms.split(",") if s.strip()]
    for s in strategies:
        if s not in {x.value for x in Strategy}:
            raise InputError(f"unknown strategy {s!r}")
    if not strategies:
        raise InputError("empty strategy list")
    jobs = []
    for path in files:
        data = path.read_bytes()
        load_program(data, args.format, _split_names(args.query))  # fail early on bad input
        jobs.extend((path.name, data, s, args) for s in strategies)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(_bench_one, jobs))
    return [_bench_one(job) for job in jobs]


def write_csv(records: Sequence[RunRecord], strategies: Sequence[str], out: TextIO):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    for r in records:
        writer.writerow(r.row())
    for s in strategies:
        mine = [r for r in records if r.strategy == s]
        solved = sum(r.solved for r in mine)
        total = sum(r.time_s for r in mine)
        calls = sum(r.solver_calls for r in mine)
        writer.writerow(("TOTAL", s, f"solved={solved}", f"{total:.3f}", str(calls)))


def bench(argv: Sequence[str], stdout: TextIO, stderr: TextIO) -> int:
    args = _bench_parser().parse_args(argv)
    if args.jobs < 1:
        raise InputError("--jobs must be at least 1")
    _deadline(args.timeout)
    records = bench_records(args)
    strategies = list(dict.fromkeys(r.strategy for r in records))
    write_csv(records, strategies, stdout)
    return EXIT_ANSWER


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        if argv[:1] == ["bench"]:
            return bench(argv[1:], stdout, stderr)
        if argv[:1] == ["run"]:
            argv = argv[1:]
        return run(argv, stdout, stderr)
    except InputError as exc:
        stderr.write(f"cautious: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
