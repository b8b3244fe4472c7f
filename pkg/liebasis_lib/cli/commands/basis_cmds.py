from typing import Optional

import typer
from rich.console import Console
from rich.table import Table
from typing_extensions import Annotated

from ...bases.essential import EssentialEngine, EssentialSet
from ...bases.orders import MonomialOrderSpec, format_order, parse_order
from ...bases.sequences import BirationalSequence, build_preset, parse_sequence, parse_word
from ...lie.rootdata import RootSystemData
from ..options import (
    BudgetOpt,
    EarlyExitOpt,
    FamilyArg,
    FormatOpt,
    OrderOpt,
    RankArg,
    ThreadsOpt,
    WeightOpt,
    WordOpt,
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

SequenceOpt = Annotated[
    str,
    typer.Option("--sequence", "-s", help="Operator indices '1,2,1' or coefficient vectors '[[1,0],[0,1]]'."),
]


def print_summary(rs: RootSystemData, es: EssentialSet) -> None:
    table = Table(show_header=False, box=None)
    table.add_column(style="dim")
    table.add_column()
    table.add_row("Type:", rs.name)
    table.add_row("Highest Weight:", f"{format_weight(es.weight)} {es.weight}")
    table.add_row("Sequence:", f"{list(es.sequence.one_based)} ({es.sequence.origin})")
    if es.sequence.word:
        table.add_row("Word:", str(list(es.sequence.word)))
    for note in es.sequence.notes:
        table.add_row("Note:", note)
    table.add_row("Order:", format_order(es.order))
    table.add_row("Dimension:", str(es.dimension))
    console.print(table)


def print_monomials(es: EssentialSet) -> None:
    console.print("\n[bold green]--- Monomials by degree ---[/bold green]")
    for degree, exponents in es.by_degree().items():
        console.print(f"degree {degree} ({len(exponents)}):", highlight=False)
        for k in exponents:
            console.print(f"  {list(k)}", highlight=False)


def print_generators(es: EssentialSet) -> None:
    console.print("\n[bold green]--- Minkowski generators ---[/bold green]")
    console.print(format_generators(es.generators), highlight=False)
    if not es.fully_decomposed:
        console.print("[yellow]not a Minkowski sum of smaller weights[/yellow]")


def run_basis(rs: RootSystemData, sequence: BirationalSequence, order: MonomialOrderSpec, weight: str,
              budget: Optional[int], early_exit: bool, threads: Optional[int], output_format: str) -> None:
    output_format = check_format(output_format)
    highest_weight = parse_weight(rs, weight)
    threads = worker_threads(threads)
    with reported_errors():
        engine = EssentialEngine(rs, sequence, order, budget=budget, early_exit=early_exit, threads=threads)
        es = engine.compute_basis(highest_weight)
    if output_format == "json":
        echo_json(es.to_dict(rs))
        return
    print_summary(rs, es)
    print_monomials(es)
    print_generators(es)


def _order_or(default: MonomialOrderSpec, order: Optional[str]) -> MonomialOrderSpec:
    if order is None:
        return default
    with reported_errors():
        return parse_order(order)


def _preset(rs: RootSystemData, name: str, word: Optional[str], order: Optional[str]):
    with reported_errors():
        sequence, default = build_preset(rs, name, parse_word(rs, word))
    return sequence, _order_or(default, order)


def basis_cmd(
    family: FamilyArg,
    rank: RankArg,
    weight: WeightOpt,
    sequence: SequenceOpt,
    order: OrderOpt = "degrevlex",
    budget: BudgetOpt = None,
    early_exit: EarlyExitOpt = False,
    threads: ThreadsOpt = None,
    output_format: FormatOpt = "text",
):
    """
    Computes es(S, >, lambda) for an explicit sequence S.
    """
    rs = root_system(family, rank)
    with reported_errors():
        parsed = parse_sequence(rs, sequence)
    run_basis(rs, parsed, _order_or(MonomialOrderSpec(), order), weight, budget, early_exit, threads, output_format)


def basis_fflv_cmd(
    family: FamilyArg,
    rank: RankArg,
    weight: WeightOpt,
    order: OrderOpt = None,
    budget: BudgetOpt = None,
    early_exit: EarlyExitOpt = False,
    threads: ThreadsOpt = None,
    output_format: FormatOpt = "text",
):
    """
    FFLV preset: positive roots by descending height, degrevlex.
    """
    rs = root_system(family, rank)
    run_basis(rs, *_preset(rs, "fflv", None, order), weight, budget, early_exit, threads, output_format)


def basis_string_cmd(
    family: FamilyArg,
    rank: RankArg,
    weight: WeightOpt,
    word: WordOpt = None,
    order: OrderOpt = None,
    budget: BudgetOpt = None,
    early_exit: EarlyExitOpt = False,
    threads: ThreadsOpt = None,
    output_format: FormatOpt = "text",
):
    """
    String (Littelmann-Berenstein-Zelevinsky) preset: simple roots along a reduced word, neglex.
    """
    rs = root_system(family, rank)
    run_basis(rs, *_preset(rs, "string", word, order), weight, budget, early_exit, threads, output_format)


def basis_lusztig_cmd(
    family: FamilyArg,
    rank: RankArg,
    weight: WeightOpt,
    word: WordOpt = None,
    order: OrderOpt = None,
    budget: BudgetOpt = None,
    early_exit: EarlyExitOpt = False,
    threads: ThreadsOpt = None,
    output_format: FormatOpt = "text",
):
    """
    Lusztig preset: the roots along a reduced word, wdegrevlex weighted by height.
    """
    rs = root_system(family, rank)
    run_basis(rs, *_preset(rs, "lusztig", word, order), weight, budget, early_exit, threads, output_format)


def basis_nz_cmd(
    family: FamilyArg,
    rank: RankArg,
    weight: WeightOpt,
    word: WordOpt = None,
    order: OrderOpt = None,
    budget: BudgetOpt = None,
    early_exit: EarlyExitOpt = False,
    threads: ThreadsOpt = None,
    output_format: FormatOpt = "text",
):
    """
    Nakashima-Zelevinsky preset: simple roots along a reduced word, degrevlex.
    """
    rs = root_system(family, rank)
    run_basis(rs, *_preset(rs, "nz", word, order), weight, budget, early_exit, threads, output_format)


def basis_pbw_cmd(
    family: FamilyArg,
    rank: RankArg,
    weight: WeightOpt,
    order: OrderOpt = None,
    budget: BudgetOpt = None,
    early_exit: EarlyExitOpt = False,
    threads: ThreadsOpt = None,
    output_format: FormatOpt = "text",
):
    """
    PBW preset: positive roots from simple to highest, deglex.
    """
    rs = root_system(family, rank)
    run_basis(rs, *_preset(rs, "pbw", None, order), weight, budget, early_exit, threads, output_format)
