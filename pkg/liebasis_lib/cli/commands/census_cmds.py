from typing import Optional

import typer
from rich.console import Console
from rich.table import Table
from typing_extensions import Annotated

from ...bases.monoid import generator_census
from ...bases.orders import parse_order
from ..options import (
    BudgetOpt,
    FamilyArg,
    FormatOpt,
    OrderOpt,
    RankArg,
    ThreadsOpt,
    check_format,
    echo_json,
    format_generators,
    format_weight,
    parse_weight,
    reported_errors,
    root_system,
    worker_threads,
)

console = Console()


def census_cmd(
    family: FamilyArg,
    rank: RankArg,
    weight: Annotated[
        Optional[str], typer.Option("--weight", "-w", help="Highest weight; defaults to 2 rho.")
    ] = None,
    order: OrderOpt = None,
    threads: ThreadsOpt = None,
    long_run: Annotated[
        bool, typer.Option("--long-run", help="Lift the rank and reduced-word caps.")
    ] = False,
    budget: BudgetOpt = None,
    output_format: FormatOpt = "text",
):
    """
    Minkowski generators of es(S, neglex, lambda) for every commutation class of reduced words of w0.
    """
    output_format = check_format(output_format)
    rs = root_system(family, rank)
    highest_weight = parse_weight(rs, weight) if weight is not None else None
    threads = worker_threads(threads)
    with reported_errors():
        order_spec = parse_order(order) if order is not None else None
        result = generator_census(
            rs, highest_weight, order=order_spec, threads=threads, long_run=long_run, budget=budget,
        )

    if output_format == "json":
        echo_json(result.to_dict())
        return

    console.print(
        f"{rs.name}, λ = {format_weight(result.weight)}: {result.classes} commutation classes "
        f"({result.reduced_words} reduced words)",
        highlight=False,
    )
    words = Table(title="Generators per class")
    words.add_column("Word")
    words.add_column("Minkowski decomposition")
    words.add_column("Needed weights")
    for entry in result.entries:
        words.add_row(
            ",".join(str(letter) for letter in entry.word),
            format_generators(entry.generators),
            ", ".join(format_weight(mu) for mu in entry.new_weights),
        )
    console.print(words)

    table = Table(title="Frequency table")
    table.add_column("Generators")
    table.add_column("Frequency", justify="right")
    for labels, frequency in result.table:
        table.add_row(", ".join(labels), str(frequency))
    console.print(table)
