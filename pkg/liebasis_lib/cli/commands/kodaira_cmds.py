from typing import Optional

import typer
from rich.console import Console
from rich.table import Table
from typing_extensions import Annotated

from ...bases.monoid import kodaira
from ...bases.orders import MonomialOrderSpec, format_order, parse_order
from ...bases.sequences import PRESETS, build_preset, parse_sequence, parse_word
from ..options import (
    BudgetOpt,
    FamilyArg,
    FormatOpt,
    OrderOpt,
    RankArg,
    ThreadsOpt,
    WeightOpt,
    WordOpt,
    check_format,
    echo_json,
    fail,
    format_weight,
    parse_weight,
    reported_errors,
    root_system,
    worker_threads,
)

console = Console()


def kodaira_cmd(
    family: FamilyArg,
    rank: RankArg,
    weight: WeightOpt,
    degree: Annotated[int, typer.Option("--degree", "-d", help="Truncation degree d >= 1.")],
    sequence: Annotated[
        Optional[str], typer.Option("--sequence", "-s", help="Operator indices or coefficient vectors.")
    ] = None,
    preset: Annotated[
        Optional[str], typer.Option("--preset", help=f"Use a named preset instead: {', '.join(PRESETS)}.")
    ] = None,
    word: WordOpt = None,
    order: OrderOpt = None,
    budget: BudgetOpt = None,
    threads: ThreadsOpt = None,
    output_format: FormatOpt = "text",
):
    """
    Generators of the truncated monoid of es(S, >, k lambda), k = 1..d.
    """
    output_format = check_format(output_format)
    if degree < 1:
        fail(f"--degree must be at least 1, got {degree}.")
    if (sequence is None) == (preset is None):
        fail("Give exactly one of --sequence and --preset.")
    rs = root_system(family, rank)
    highest_weight = parse_weight(rs, weight)
    threads = worker_threads(threads)
    with reported_errors():
        if preset is not None:
            parsed, default_order = build_preset(rs, preset, parse_word(rs, word))
        else:
            parsed, default_order = parse_sequence(rs, sequence), MonomialOrderSpec()
        order_spec = parse_order(order) if order is not None else default_order
        result = kodaira(rs, parsed, order_spec, highest_weight, degree, budget=budget, threads=threads)

    if output_format == "json":
        echo_json(result.to_dict())
        if not result.complete:
            raise typer.Exit(code=2)
        return

    table = Table(show_header=False, box=None)
    table.add_column(style="dim")
    table.add_column()
    table.add_row("Type:", rs.name)
    table.add_row("Highest Weight:", f"{format_weight(highest_weight)} {highest_weight}")
    table.add_row("Sequence:", f"{list(parsed.one_based)} ({parsed.origin})")
    table.add_row("Order:", format_order(order_spec))
    table.add_row("Degree:", str(degree))
    console.print(table)

    degrees = Table(title="Monoid generators by degree")
    degrees.add_column("k", justify="right")
    degrees.add_column("dim V(kλ)", justify="right")
    degrees.add_column("new", justify="right")
    for entry in result.degrees:
        degrees.add_row(str(entry.k), str(entry.dimension), str(len(entry.new)))
    console.print(degrees)
    console.print("counts: " + " ".join(str(n) for n in result.counts), highlight=False)
    if not result.complete:
        console.print(f"[bold yellow]Stopped after degree {len(result.degrees)}:[/bold yellow] {result.message}")
        raise typer.Exit(code=2)
