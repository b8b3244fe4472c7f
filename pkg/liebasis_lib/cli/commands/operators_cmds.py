from rich.console import Console

from ...bases.sequences import format_root, operators_listing
from ..options import FamilyArg, FormatOpt, RankArg, check_format, echo_json, root_system

console = Console()


def operators_cmd(family: FamilyArg, rank: RankArg, output_format: FormatOpt = "text"):
    """
    Lists the positive roots with the operator indices used by --sequence.
    """
    output_format = check_format(output_format)
    rs = root_system(family, rank)
    listing = operators_listing(rs)
    if output_format == "json":
        echo_json({
            "family": rs.family,
            "rank": rs.rank,
            "operators": [{"index": index, "root": list(root)} for index, root in listing],
        })
        return
    for index, root in listing:
        console.print(f"{index}: {format_root(root)}", highlight=False)
