import click

from commands.params import RING, SYSTEM, emit, reports_errors, witness_bound
from config import get_settings
from models import StableRankReport
from services.campaign import run_campaign
from services.rings import check_sr1


@click.command("random-test")
@click.option("--type", "system", type=SYSTEM, required=True, help="Root system, e.g. G2.")
@click.option("--ring", type=RING, required=True, help="Ring descriptor, e.g. gf:5.")
@click.option("--trials", type=click.IntRange(min=0), default=lambda: get_settings().default_trials)
@click.option("--maxlen", type=click.IntRange(min=0), default=lambda: get_settings().default_maxlen)
@click.option("--seed", type=click.IntRange(min=0, max=2 ** 64 - 1), default=lambda: get_settings().default_seed)
@click.option("--witness-bound", "bound", type=click.IntRange(min=0), default=None,
              help="Witness search bound over Z (env CHV_WITNESS_BOUND).")
@click.option("--full", is_flag=True, help="Also check conjugation and the unitriangular form.")
@click.option("--timing", is_flag=True, help="Include elapsed_ms in the report.")
@reports_errors
def random_test(system, ring, trials, maxlen, seed, bound, full, timing):
    """Decompose seeded random words and verify every result."""
    timing = timing or get_settings().report_timing
    report = run_campaign(system, ring, trials, maxlen, seed, witness_bound(bound), full, timing)
    emit(report)
    if report.failures:
        click.get_current_context().exit(1)


@click.command("check-sr")
@click.option("--ring", type=RING, required=True, help="Finite ring descriptor.")
@reports_errors
def check_sr(ring):
    """Exhaustively check the stable rank 1 condition."""
    emit(StableRankReport(ring=ring.descriptor, sr1=check_sr1(ring)))
