import click

from commands.params import RING, SYSTEM, emit, fail, oracle_for, read_word, reports_errors, witness_bound
from models import OracleChoice
from services.codec import conjugation_to_doc, form_to_doc, matrix_to_doc, unitri_to_doc
from services.gauss import conjugate_to_uhv, gauss_decompose, unitriangular5, verify_conjugation, verify_form
from services.representation import RepKind, default_rep, evaluate

VERIFY = click.Choice([c.value for c in OracleChoice])


def word_options(fn):
    fn = click.option("--witness-bound", "bound", type=click.IntRange(min=0), default=None,
                      help="Witness search bound over Z (env CHV_WITNESS_BOUND).")(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None,
                      help="Write the result here instead of stdout.")(fn)
    fn = click.option("--ring", type=RING, default=None, help="Expected ring of the word.")(fn)
    fn = click.option("--type", "system", type=SYSTEM, default=None, help="Expected root system of the word.")(fn)
    fn = click.option("--word", "word_path", type=click.Path(exists=True, dir_okay=False), required=True,
                      help="Word JSON document.")(fn)
    return fn


@click.command("eval")
@click.option("--word", "word_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="Word JSON document.")
@click.option("--rep", type=click.Choice([r.value for r in RepKind]), default=None,
              help="Representation; defaults to natural for A and C, minuscule for B, D, E6, E7, adjoint otherwise.")
@reports_errors
def eval_word(word_path, rep):
    """Evaluate a word in a matrix representation."""
    word = read_word(word_path)
    kind = RepKind(rep) if rep else default_rep(word.system)
    emit(matrix_to_doc(evaluate(kind, word), kind.value))


@click.command("decompose")
@word_options
@click.option("--verify", type=VERIFY, default=None, help="Check the form against a representation oracle.")
@reports_errors
def decompose(word_path, system, ring, out, bound, verify):
    """Gauss decomposition h u1 v u2 of a word."""
    word = read_word(word_path, system, ring)
    form = gauss_decompose(word, witness_bound(bound))
    if verify and not verify_form(word, form, oracle_for(word.system, verify)):
        fail("Gauss form does not reproduce the word", "oracle_mismatch")
    emit(form_to_doc(form), out)


@click.command("conjugate")
@word_options
@click.option("--verify", type=VERIFY, default=None, help="Check the conjugacy against a representation oracle.")
@reports_errors
def conjugate(word_path, system, ring, out, bound, verify):
    """Conjugate a word into U H U^-."""
    word = read_word(word_path, system, ring)
    result = conjugate_to_uhv(word, witness_bound(bound))
    if verify and not verify_conjugation(word, *result, rep=oracle_for(word.system, verify)):
        fail("conjugated word does not equal u h v", "oracle_mismatch")
    emit(conjugation_to_doc(*result), out)


@click.command("unitri5")
@word_options
@click.option("--verify", type=VERIFY, default=None, help="Check the blocks against a representation oracle.")
@reports_errors
def unitri5(word_path, system, ring, out, bound, verify):
    """Five alternating unipotent blocks equal to a word."""
    word = read_word(word_path, system, ring)
    form = unitriangular5(word, witness_bound(bound))
    if verify and not verify_form(word, form, oracle_for(word.system, verify)):
        fail("unitriangular blocks do not reproduce the word", "oracle_mismatch")
    emit(unitri_to_doc(form), out)
