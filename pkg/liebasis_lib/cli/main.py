import logging

import click
import typer
from rich.console import Console
from rich.logging import RichHandler
from typer.core import TyperGroup
from typing_extensions import Annotated

from .. import __version__ as lib_version
from .commands import basis_cmds, census_cmds, kodaira_cmds, operators_cmds
from .options import EXIT_USAGE

try:  # typer>=0.26 vendors its own click; catch the UsageError it actually raises
    from typer._click.exceptions import UsageError
except ImportError:
    UsageError = click.UsageError


class LieBasisGroup(TyperGroup):
    """Command-line usage errors exit with 1; exit code 2 is reserved for budget refusals."""

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except UsageError as e:
            e.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except UsageError as e:
            e.exit_code = EXIT_USAGE
            raise


app = typer.Typer(
    cls=LieBasisGroup,
    name="liebasis",
    help="Essential monomial bases of simple Lie algebra modules, computed exactly.",
    add_completion=False,
    no_args_is_help=True,
)


def version_callback(value: bool):
    if value:
        print(f"liebasis version: {lib_version}")
        raise typer.Exit()


@app.callback()
def main_callback(
    ctx: typer.Context,
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log progress to stderr.")] = False,
    version: Annotated[
        bool, typer.Option("--version", callback=version_callback, is_eager=True, help="Show the version and exit.")
    ] = False,
):
    """
    liebasis: essential monomial bases, Minkowski generators and Kodaira truncations.
    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


app.command("operators")(operators_cmds.operators_cmd)
app.command("basis")(basis_cmds.basis_cmd)
app.command("basis-fflv")(basis_cmds.basis_fflv_cmd)
app.command("basis-string")(basis_cmds.basis_string_cmd)
app.command("basis-lusztig")(basis_cmds.basis_lusztig_cmd)
app.command("basis-nz")(basis_cmds.basis_nz_cmd)
app.command("basis-pbw")(basis_cmds.basis_pbw_cmd)
app.command("kodaira")(kodaira_cmds.kodaira_cmd)
app.command("census")(census_cmds.census_cmd)


if __name__ == "__main__":
    # python -m liebasis_lib.cli.main --help
    app()
