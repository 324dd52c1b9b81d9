import logging
import sys

import click

from config import get_settings
from commands import campaign, factor, structure

settings = get_settings()


@click.group()
@click.version_option(settings.app_version, prog_name=settings.app_name)
@click.option("--verbose", is_flag=True, help="Debug logging on stderr.")
def cli(verbose):
    """Gauss decompositions of elementary Chevalley groups over rings of stable rank 1."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


# Register commands
cli.add_command(structure.roots)
cli.add_command(structure.constants)
cli.add_command(factor.eval_word)
cli.add_command(factor.decompose)
cli.add_command(factor.conjugate)
cli.add_command(factor.unitri5)
cli.add_command(campaign.random_test)
cli.add_command(campaign.check_sr)


if __name__ == "__main__":
    cli()
