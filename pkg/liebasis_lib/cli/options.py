# liebasis_lib/cli/options.py
"""
Option types and helpers shared by the command modules.
"""

import contextlib
import json
from typing import List, Optional, Sequence

import typer
from rich.console import Console
from rich.markup import escape
from typing_extensions import Annotated

from ..config import get_thread_count
from ..errors import BudgetExceededError, LieBasisError, NotBirationalError
from ..lie.rootdata import RootSystemData, build_root_system, check_weight

EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_NOT_BIRATIONAL = 3

FORMATS = ("text", "json")

err_console = Console(stderr=True)

FamilyArg = Annotated[str, typer.Argument(help="Cartan type letter, A-G.")]
RankArg = Annotated[int, typer.Argument(help="Rank of the Lie algebra.")]
WeightOpt = Annotated[str, typer.Option("--weight", "-w", help="Highest weight in fundamental weights, e.g. '1,0,2'.")]
OrderOpt = Annotated[
    Optional[str],
    typer.Option("--order", help="lex, invlex, neglex, deglex, degrevlex or wdegrevlex:w1,w2,..."),
]
WordOpt = Annotated[
    Optional[str],
    typer.Option("--word", help="Reduced word as '1,2,1', or 'gt' for Gelfand-Tsetlin (type A). Default: canonical w0."),
]
FormatOpt = Annotated[str, typer.Option("--format", "-f", help="Output format: 'text' or 'json'.")]
BudgetOpt = Annotated[
    Optional[int],
    typer.Option("--budget", help="Cap on candidate exponents per weight space (overrides ESSENTIAL_BUDGET)."),
]
EarlyExitOpt = Annotated[
    bool, typer.Option("--early-exit", help="Stop unioning Minkowski sums once the dimension is reached."),
]
ThreadsOpt = Annotated[
    Optional[int], typer.Option("--threads", "-t", help="Worker threads (overrides LIEBASIS_THREADS)."),
]


def fail(message: str, code: int = EXIT_USAGE) -> None:
    err_console.print(f"[bold red]Error:[/bold red] {escape(message)}")
    raise typer.Exit(code=code)


@contextlib.contextmanager
def reported_errors():
    """Turns library errors into a red message and the matching exit code."""
    try:
        yield
    except BudgetExceededError as e:
        fail(str(e), EXIT_BUDGET)
    except NotBirationalError as e:
        fail(str(e), EXIT_NOT_BIRATIONAL)
    except LieBasisError as e:
        fail(str(e), EXIT_USAGE)


def worker_threads(threads: Optional[int]) -> int:
    """The --threads value, or LIEBASIS_THREADS when it is not given."""
    if threads is None:
        with reported_errors():
            return get_thread_count()
    if threads < 1:
        fail(f"--threads must be at least 1, got {threads}.")
    return threads


def check_format(output_format: str) -> str:
    output_format = output_format.strip().lower()
    if output_format not in FORMATS:
        fail(f"Unknown format '{output_format}'. Choose from {', '.join(FORMATS)}.")
    return output_format


def root_system(family: str, rank: int) -> RootSystemData:
    with reported_errors():
        return build_root_system(family, rank)


def parse_weight(rs: RootSystemData, text: str) -> tuple:
    """
    Parses a comma-separated weight; exits with a usage error when malformed.
    """
    try:
        coords: List[int] = [int(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError:
        fail(f"Invalid weight '{text}'. Use comma-separated integers, e.g. '1,0,2'.")
    with reported_errors():
        return check_weight(rs, coords)


def format_weight(weight: Sequence[int]) -> str:
    """'2ϖ1 + ϖ3'; the zero weight prints as '0'."""
    terms = [f"{'' if c == 1 else c}ϖ{i + 1}" for i, c in enumerate(weight) if c]
    return " + ".join(terms) if terms else "0"


def format_generators(generators) -> str:
    return ", ".join(f"{format_weight(mu)}: {a}" for mu, a in generators) or "-"


def echo_json(document: dict) -> None:
    typer.echo(json.dumps(document))
