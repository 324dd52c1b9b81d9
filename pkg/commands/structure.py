import click

from commands.params import SYSTEM, emit, reports_errors
from services.codec import constants_table, root_table
from services.constants import compute_constants


@click.command("roots")
@click.option("--type", "system", type=SYSTEM, required=True, help="Root system, e.g. B3.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the table here instead of stdout.")
@reports_errors
def roots(system, out):
    """Dump the root table in canonical order."""
    emit(root_table(system), out)


@click.command("constants")
@click.option("--type", "system", type=SYSTEM, required=True, help="Root system, e.g. F4.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the table here instead of stdout.")
@reports_errors
def constants(system, out):
    """Dump the Chevalley commutator formula coefficients."""
    emit(constants_table(compute_constants(system)), out)
