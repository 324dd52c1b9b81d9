"""Conversion between the JSON documents in ``models`` and domain values."""

from __future__ import annotations

from typing import Iterable

from errors import DescriptorError
from models import (
    CommutatorRowDoc,
    ConjugationDocument,
    ConstantsTable,
    GaussFormDocument,
    GeneratorDoc,
    MatrixDocument,
    RootEntry,
    RootTable,
    SystemSpec,
    Unitri5Document,
    WordDocument,
)
from services.constants import StructureConstants
from services.gauss import GaussForm, Unitri5Form
from services.representation import MatrixOverRing
from services.rings import Ring, parse_ring
from services.rootsystem import RootId, RootSystem, build
from services.words import Generator, TorusParams, UnipotentParams, Word


def system_spec(rs: RootSystem) -> SystemSpec:
    return SystemSpec(type=rs.label, rank=rs.rank)


def system_from_spec(spec: SystemSpec) -> RootSystem:
    return build(spec.type.upper(), spec.rank)


def decode_root(rs: RootSystem, coeffs) -> RootId:
    root = rs.lookup(coeffs)
    if root is None:
        raise DescriptorError(f"{list(coeffs)} is not a root of {rs.name}")
    return root


def encode_root(rs: RootSystem, root: RootId) -> list[int]:
    return list(rs.roots[root])


# -- words ---------------------------------------------------------------------


def word_to_doc(word: Word) -> WordDocument:
    rs = word.system
    return WordDocument(
        system=system_spec(rs),
        ring=word.ring.descriptor,
        word=[GeneratorDoc(gen=g.kind, root=encode_root(rs, g.root), param=g.param.to_json()) for g in word],
    )


def word_from_doc(doc: WordDocument) -> Word:
    rs = system_from_spec(doc.system)
    ring = parse_ring(doc.ring)
    return Word(rs, ring, tuple(_generators(rs, ring, doc.word)))


def _generators(rs: RootSystem, ring: Ring, docs: Iterable[GeneratorDoc]) -> list[Generator]:
    gens = []
    for g in docs:
        param = ring.from_json(g.param)
        if g.gen.value in ("h", "w") and not param.is_unit():
            raise DescriptorError(f"{g.gen.value}-generator parameter {g.param!r} is not a unit")
        gens.append(Generator(g.gen, decode_root(rs, g.root), param))
    return gens


# -- forms ---------------------------------------------------------------------


def _factors_to_doc(rs: RootSystem, block: UnipotentParams) -> list:
    return [(encode_root(rs, a), xi.to_json()) for a, xi in block]


def _factors_from_doc(rs: RootSystem, ring: Ring, factors) -> UnipotentParams:
    return UnipotentParams(ring, tuple((decode_root(rs, root), ring.from_json(p)) for root, p in factors))


def _torus_from_doc(rs: RootSystem, ring: Ring, h) -> TorusParams:
    if len(h) != rs.rank:
        raise DescriptorError(f"torus needs {rs.rank} entries, got {len(h)}")
    return TorusParams(ring, tuple(ring.from_json(e) for e in h))


def form_to_doc(form: GaussForm) -> GaussFormDocument:
    rs = form.system
    return GaussFormDocument(
        system=system_spec(rs),
        ring=form.ring.descriptor,
        h=[e.to_json() for e in form.h.eps],
        u1=_factors_to_doc(rs, form.u1),
        v=_factors_to_doc(rs, form.v),
        u2=_factors_to_doc(rs, form.u2),
    )


def form_from_doc(doc: GaussFormDocument) -> GaussForm:
    rs = system_from_spec(doc.system)
    ring = parse_ring(doc.ring)
    return GaussForm(
        rs,
        _torus_from_doc(rs, ring, doc.h),
        _factors_from_doc(rs, ring, doc.u1),
        _factors_from_doc(rs, ring, doc.v),
        _factors_from_doc(rs, ring, doc.u2),
    )


def unitri_to_doc(form: Unitri5Form) -> Unitri5Document:
    rs = form.system
    return Unitri5Document(
        system=system_spec(rs),
        ring=form.ring.descriptor,
        blocks=[_factors_to_doc(rs, b) for b in form.blocks],
    )


def unitri_from_doc(doc: Unitri5Document) -> Unitri5Form:
    rs = system_from_spec(doc.system)
    ring = parse_ring(doc.ring)
    return Unitri5Form(rs, ring, tuple(_factors_from_doc(rs, ring, b) for b in doc.blocks))


def conjugation_to_doc(conjugator: Word, u: UnipotentParams, h: TorusParams, v: UnipotentParams) -> ConjugationDocument:
    rs = conjugator.system
    return ConjugationDocument(
        system=system_spec(rs),
        ring=conjugator.ring.descriptor,
        conjugator=word_to_doc(conjugator).word,
        u=_factors_to_doc(rs, u),
        h=[e.to_json() for e in h.eps],
        v=_factors_to_doc(rs, v),
    )


def conjugation_from_doc(doc: ConjugationDocument):
    rs = system_from_spec(doc.system)
    ring = parse_ring(doc.ring)
    conjugator = Word(rs, ring, tuple(_generators(rs, ring, doc.conjugator)))
    return (
        conjugator,
        _factors_from_doc(rs, ring, doc.u),
        _torus_from_doc(rs, ring, doc.h),
        _factors_from_doc(rs, ring, doc.v),
    )


# -- tables --------------------------------------------------------------------


def matrix_to_doc(m: MatrixOverRing, rep: str) -> MatrixDocument:
    return MatrixDocument(ring=m.ring.descriptor, rep=rep, matrix=m.to_json())


def root_table(rs: RootSystem) -> RootTable:
    return RootTable(
        system=system_spec(rs),
        cartan=[list(row) for row in rs.cartan],
        num_positive=rs.num_positive,
        roots=[
            RootEntry(id=k, root=list(c), height=rs.height(k), norm2=rs.norm2(k))
            for k, c in enumerate(rs.roots)
        ],
    )


def constants_table(sc: StructureConstants) -> ConstantsTable:
    rs = sc.rs
    return ConstantsTable(
        system=system_spec(rs),
        rows=[
            CommutatorRowDoc(
                alpha=encode_root(rs, a), beta=encode_root(rs, b),
                i=row.i, j=row.j, gamma=encode_root(rs, row.gamma), coeff=row.coeff,
            )
            for a, b, row in sc.all_rows()
        ],
    )
