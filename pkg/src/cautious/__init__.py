"""Cautious consequences of ground answer set programs."""

from importlib import resources

from .engine import OneOf, ProgressEvent, Reasoner, Strategy, cautious_reasoning
from .oracle import cautious_consequences_bruteforce, enumerate_stable_models, is_stable_model
from .program import (
    FALSE,
    INCOHERENT,
    AtomTable,
    ChoiceRule,
    DisjunctiveRule,
    Literal,
    ParseError,
    Program,
    complement,
    format_program,
    parse_text_program,
)
from .aspif import AspifError, parse_aspif
from .solver import HeadCycleError, SolverState, SolverTimeout, SolveResult, compute_stable_model, translate

__all__ = [
    "FALSE", "INCOHERENT", "AtomTable", "AspifError", "ChoiceRule", "DisjunctiveRule", "HeadCycleError",
    "Literal", "OneOf", "ParseError", "Program", "ProgressEvent", "Reasoner", "SolveResult", "SolverState",
    "SolverTimeout", "Strategy", "cautious_consequences_bruteforce", "cautious_reasoning", "complement",
    "compute_stable_model", "enumerate_stable_models", "fixture", "fixture_names", "format_program",
    "is_stable_model", "parse_aspif", "parse_text_program", "translate",
]


def fixture_names() -> list[str]:
    """Names of the programs shipped in ``cautious/data``."""
    return sorted(p.name for p in resources.files(__package__).joinpath("data").iterdir()
                  if p.name.endswith((".lp", ".aspif")))


def fixture(name: str) -> bytes:
    return resources.files(__package__).joinpath("data", name).read_bytes()
