"""Parameter types and error reporting shared by the command groups."""

import functools
from pathlib import Path
from typing import Optional

import click
from pydantic import BaseModel, ValidationError

from config import get_settings
from errors import ChevalleyError, DescriptorError, IncompatibleRep, InvalidType
from models import ErrorReport, OracleChoice, WordDocument
from services.codec import word_from_doc
from services.representation import RepKind, minuscule_nodes
from services.rings import parse_ring
from services.rootsystem import RootSystem, parse_system
from services.words import Word


class RingType(click.ParamType):
    name = "ring"

    def convert(self, value, param, ctx):
        try:
            return parse_ring(value)
        except DescriptorError as exc:
            self.fail(exc.message, param, ctx)


class SystemType(click.ParamType):
    name = "system"

    def convert(self, value, param, ctx):
        if isinstance(value, RootSystem):
            return value
        try:
            return parse_system(value)
        except (DescriptorError, InvalidType) as exc:
            self.fail(exc.message, param, ctx)


RING = RingType()
SYSTEM = SystemType()


def emit(doc: BaseModel, out: Optional[str] = None):
    text = doc.model_dump_json(indent=2, exclude_none=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        click.echo(text)


def fail(error: str, kind: str):
    emit(ErrorReport(error=error, kind=kind))
    click.get_current_context().exit(1)


def read_word(path: str, system: Optional[RootSystem] = None, ring=None) -> Word:
    try:
        doc = WordDocument.model_validate_json(Path(path).read_text())
        word = word_from_doc(doc)
    except (ValidationError, ChevalleyError) as exc:
        raise click.BadParameter(str(getattr(exc, "message", exc)), param_hint="--word")
    if system is not None and word.system != system:
        raise click.BadParameter(f"word is over {word.system.name}, not {system.name}", param_hint="--type")
    if ring is not None and word.ring != ring:
        raise click.BadParameter(f"word is over {word.ring.descriptor}, not {ring.descriptor}", param_hint="--ring")
    return word


def witness_bound(value: Optional[int]) -> Optional[int]:
    return value if value is not None else get_settings().witness_bound


def oracle_for(rs: RootSystem, choice: Optional[str]) -> Optional[RepKind]:
    """Map ``--verify`` to a representation; ``None`` picks the default for the type."""
    if choice is None:
        return None
    if choice == OracleChoice.ADJOINT.value:
        return RepKind.ADJOINT
    if choice == OracleChoice.MINUSCULE.value:
        if not minuscule_nodes(rs):
            raise click.BadParameter(f"no minuscule representation for {rs.name}", param_hint="--verify")
        return RepKind.MINUSCULE
    if rs.label == "A":
        return RepKind.NATURAL_A
    if rs.label == "C":
        return RepKind.NATURAL_C
    raise click.BadParameter(f"no natural representation for {rs.name}", param_hint="--verify")


def reports_errors(fn):
    """Turn service errors into exit codes: 2 for bad input, 1 with a JSON report otherwise."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (DescriptorError, InvalidType, IncompatibleRep) as exc:
            raise click.UsageError(exc.message)
        except ChevalleyError as exc:
            fail(exc.message, exc.kind)

    return wrapper
