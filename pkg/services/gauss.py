"""Gauss decomposition E = H U U^- U and the unitriangular factorisation.

Both factorisations are triangular forms: an optional torus part followed by
unipotent blocks of alternating sign.  A word is folded into a form from the
right, one generator at a time, by ``absorb``: generators of the sign of the
first block are collected into it; any other generator is pushed into a
terminal Levi subsystem of rank one less, the unipotent radical parts of the
blocks are moved out of the way and redistributed afterwards.  In rank one
the form is recomputed from the 2x2 matrix using a stable rank witness.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from errors import InternalError, NoWitness
from services.constants import StructureConstants, compute_constants, embedding_signs
from services.representation import RepKind, default_rep, get_representation
from services.rings import Ring, RingElem, stable_rank_witness
from services.rootsystem import RootSystem, SubsystemEmbedding
from services.words import (
    Generator,
    TorusParams,
    UnipotentParams,
    Word,
    collect_signed,
    conj_levi,
    expand_generators,
    fundamental_factors,
    split_levi,
    torus_conjugate,
    torus_conjugate_params,
)

logger = logging.getLogger(__name__)

GAUSS_SIGNS = (1, -1, 1)
UNITRI_SIGNS = (1, -1, 1, -1, 1)


@dataclass(frozen=True)
class GaussForm:
    """h u1 v u2 with u1, u2 over Phi^+ and v over Phi^-."""

    system: RootSystem
    h: TorusParams
    u1: UnipotentParams
    v: UnipotentParams
    u2: UnipotentParams

    @classmethod
    def identity(cls, rs: RootSystem, ring: Ring) -> "GaussForm":
        empty = UnipotentParams(ring)
        return cls(rs, TorusParams.identity(ring, rs.rank), empty, empty, empty)

    @property
    def ring(self) -> Ring:
        return self.h.ring

    @property
    def blocks(self) -> tuple[UnipotentParams, ...]:
        return (self.u1, self.v, self.u2)

    def to_word(self) -> Word:
        gens = self.h.to_generators(self.system)
        for block in self.blocks:
            gens.extend(block.to_generators())
        return Word(self.system, self.ring, tuple(gens))


@dataclass(frozen=True)
class Unitri5Form:
    """Five unipotent blocks over Phi^+, Phi^-, Phi^+, Phi^-, Phi^+."""

    system: RootSystem
    ring: Ring
    blocks: tuple[UnipotentParams, ...]

    def to_word(self) -> Word:
        gens = []
        for block in self.blocks:
            gens.extend(block.to_generators())
        return Word(self.system, self.ring, tuple(gens))


@dataclass(frozen=True)
class Sl2Reduction:
    """u g u' = [[delta^-1, 0], [c, delta]] with u = x_a(left), u' = x_a(z)."""

    z: RingElem
    delta: RingElem
    left: RingElem
    middle: tuple[tuple[RingElem, RingElem], tuple[RingElem, RingElem]]


# -- rank one ------------------------------------------------------------------


def _sl2_matrix(rs: RootSystem, factors, ring: Ring):
    a, b, c, d = ring.one, ring.zero, ring.zero, ring.one
    for root, xi in factors:
        if rs.is_positive(root):
            b, d = a * xi + b, c * xi + d
        else:
            a, c = a + b * xi, c + d * xi
    return a, b, c, d


def reduce_sl2(g, bound: Optional[int] = None) -> Sl2Reduction:
    """Clear the top right corner of g = ((a, b), (c, d)) from both sides."""
    (a, b), (c, d) = g
    z = stable_rank_witness(c, d, bound)
    if z is None:
        raise NoWitness(f"no z makes {d.to_json()} + {c.to_json()}*z a unit", pair=(c, d))
    delta = d + c * z
    inv = delta.inv()
    logger.debug("sl2 witness z=%s for (c, d) = (%s, %s)", z.to_json(), c.to_json(), d.to_json())
    return Sl2Reduction(z=z, delta=delta, left=-(b + a * z) * inv, middle=((inv, c.ring.zero), (c, delta)))


def _rank1_blocks(rs: RootSystem, torus, signs, factors, ring, bound):
    alpha = rs.simple_ids[0]
    neg = rs.neg(alpha)
    a, b, c, d = _sl2_matrix(rs, factors, ring)
    red = reduce_sl2(((a, b), (c, d)), bound)
    inv = red.delta.inv()
    top = b + a * red.z
    if signs == GAUSS_SIGNS and torus is not None:
        # g = h_a(delta^-1) x_a(delta (b + a z)) x_-a(c delta^-1) x_a(-z)
        params = [(alpha, red.delta * top), (neg, c * inv), (alpha, -red.z)]
        torus = torus.multiply(TorusParams.from_root(rs, alpha, inv))
    elif signs == UNITRI_SIGNS and torus is None:
        # h_a(e) = x_a(e - 1) x_-a(1) x_a(e^-1 - 1) x_-a(-e), e = delta^-1
        one = ring.one
        params = [
            (alpha, top * inv + inv - one),
            (neg, one),
            (alpha, red.delta - one),
            (neg, -inv + c * inv),
            (alpha, -red.z),
        ]
    else:
        raise InternalError(f"no rank one base case for block signs {signs}")
    new_blocks = tuple(
        UnipotentParams(ring, () if xi.is_zero() else ((root, xi),)) for root, xi in params
    )
    return torus, new_blocks


# -- absorption ----------------------------------------------------------------


def _to_sub(emb: SubsystemEmbedding, signs, factors):
    inv = emb.inverse
    return [(inv[g], xi * signs[inv[g]]) for g, xi in factors]


def _from_sub(emb: SubsystemEmbedding, signs, factors):
    return [(emb.root_map[b], xi * signs[b]) for b, xi in factors]


def _torus_from_sub(emb: SubsystemEmbedding, sub_torus: TorusParams) -> TorusParams:
    eps = [sub_torus.ring.one] * emb.parent.rank
    for i, node in enumerate(emb.nodes):
        eps[node - 1] = sub_torus.eps[i]
    return TorusParams(sub_torus.ring, tuple(eps))


def absorb_into(sc: StructureConstants, x: Generator, torus: Optional[TorusParams],
                blocks: tuple[UnipotentParams, ...], signs: tuple[int, ...],
                bound: Optional[int] = None):
    """Return (torus, blocks) for the form of x * (torus * blocks)."""
    rs = sc.rs
    ring = x.param.ring
    if x.param.is_zero():
        return torus, blocks
    original = x
    if torus is not None:
        x = torus_conjugate(rs, torus.inverse(), x)
    if rs.sign(x.root) == signs[0]:
        first = collect_signed(sc, signs[0], [(x.root, x.param)] + list(blocks[0]), ring)
        return torus, (first,) + tuple(blocks[1:])

    if rs.rank == 1:
        factors = [(x.root, x.param)]
        for block in blocks:
            factors.extend(block)
        return _rank1_blocks(rs, torus, signs, factors, ring, bound)

    if rs.coeff(x.root, 1) == 0:
        r = 1
    elif rs.coeff(x.root, rs.rank) == 0:
        r = rs.rank
    else:
        for g in reversed(fundamental_factors(sc, original)):
            torus, blocks = absorb_into(sc, g, torus, blocks, signs, bound)
        return torus, blocks
    return _reduce_rank(sc, r, x, torus, blocks, signs, bound)


def _reduce_rank(sc, r, x, torus, blocks, signs, bound):
    rs = sc.rs
    ring = x.param.ring
    k = len(blocks)
    emb = rs.terminal_subsystem(r)
    esigns = embedding_signs(emb)
    logger.debug("absorb %s into %s through node %d (%s)", rs.roots[x.root], rs.name, r, emb.sub.name)

    split = [split_levi(sc, block, r, sign) for block, sign in zip(blocks, signs)]
    deltas = [d for d, _ in split]
    tails = []
    for j, (_, s) in enumerate(split):
        d_inv = []
        for m in range(k - 1, j, -1):
            d_inv.extend(deltas[m].inverse_factors())
        tails.append(conj_levi(sc, r, d_inv, s, signs[j]))

    sub = emb.sub
    sub_sc = compute_constants(sub)
    sub_x = _to_sub(emb, esigns, [(x.root, x.param)])[0]
    sub_blocks = tuple(
        collect_signed(sub_sc, sign, _to_sub(emb, esigns, d), ring)
        for d, sign in zip(deltas, signs)
    )
    sub_torus = None if torus is None else TorusParams.identity(ring, sub.rank)
    sub_torus, sub_blocks = absorb_into(
        sub_sc, Generator.x(*sub_x), sub_torus, sub_blocks, signs, bound
    )
    new_deltas = [_from_sub(emb, esigns, b) for b in sub_blocks]

    out = []
    for j in range(k):
        after = []
        for m in range(j + 1, k):
            after.extend(new_deltas[m])
        moved = conj_levi(sc, r, after, tails[j], signs[j])
        out.append(collect_signed(sc, signs[j], new_deltas[j] + list(moved), ring))
    if torus is not None:
        torus = torus.multiply(_torus_from_sub(emb, sub_torus))
    return torus, tuple(out)


def absorb(x: Generator, form: GaussForm, bound: Optional[int] = None) -> GaussForm:
    """The Gauss form of x * form."""
    sc = compute_constants(form.system)
    h, blocks = absorb_into(sc, x, form.h, form.blocks, GAUSS_SIGNS, bound)
    return GaussForm(form.system, h, *blocks)


# -- decompositions ------------------------------------------------------------


def decompose_rank1(word: Word, bound: Optional[int] = None) -> GaussForm:
    rs = word.system
    if rs.rank != 1:
        raise ValueError(f"decompose_rank1 needs a rank one system, got {rs.name}")
    factors = [(g.root, g.param) for g in expand_generators(word)]
    ring = word.ring
    h, blocks = _rank1_blocks(
        rs, TorusParams.identity(ring, 1), GAUSS_SIGNS, factors, ring, bound
    )
    return GaussForm(rs, h, *blocks)


def gauss_decompose(word: Word, bound: Optional[int] = None) -> GaussForm:
    """h u1 v u2 equal to the word, folding generators in from the right."""
    rs = word.system
    if rs.rank == 1:
        return decompose_rank1(word, bound)
    sc = compute_constants(rs)
    form = GaussForm.identity(rs, word.ring)
    h, blocks = form.h, form.blocks
    # roots outside +-Pi are rewritten through fundamental factors inside absorb_into
    for g in reversed(expand_generators(word).gens):
        h, blocks = absorb_into(sc, g, h, blocks, GAUSS_SIGNS, bound)
    logger.debug("gauss form of %d generators over %s", len(word), rs.name)
    return GaussForm(rs, h, *blocks)


def conjugate_to_uhv(word: Word, bound: Optional[int] = None):
    """(conjugator, u, h, v) with conjugator * word * conjugator^-1 = u h v."""
    form = gauss_decompose(word, bound)
    rs = form.system
    sc = compute_constants(rs)
    # u2 (h u1 v u2) u2^-1 = (u2 . h u1 h^-1) h v
    moved = torus_conjugate_params(rs, form.h, form.u1)
    u = collect_signed(sc, 1, list(form.u2) + list(moved), form.ring)
    conjugator = Word(rs, form.ring, tuple(form.u2.to_generators()))
    return conjugator, u, form.h, form.v


def unitriangular5(word: Word, bound: Optional[int] = None) -> Unitri5Form:
    """Five alternating unipotent blocks equal to the word."""
    form = gauss_decompose(word, bound)
    rs = form.system
    sc = compute_constants(rs)
    ring = form.ring
    empty = UnipotentParams(ring)
    blocks = (form.u1, form.v, form.u2, empty, empty)
    h_word = expand_generators(Word(rs, ring, tuple(form.h.to_generators(rs))))
    for g in reversed(h_word.gens):
        _, blocks = absorb_into(sc, g, None, blocks, UNITRI_SIGNS, bound)
    if len(blocks) != 5:
        raise InternalError(f"unitriangular form has {len(blocks)} blocks")
    return Unitri5Form(rs, ring, blocks)


# -- verification --------------------------------------------------------------


def _supports_ok(rs: RootSystem, blocks, signs) -> bool:
    return all(rs.sign(a) == sign for block, sign in zip(blocks, signs) for a in block.support)


def _oracles_agree(rs: RootSystem, rep: Optional[RepKind], lhs: Word, rhs: Word) -> bool:
    faithful = default_rep(rs)
    kinds = [rep or faithful]
    # the adjoint image cannot see a central torus factor
    if faithful not in kinds:
        kinds.append(faithful)
    for kind in kinds:
        oracle = get_representation(kind, rs)
        if oracle.eval(lhs) != oracle.eval(rhs):
            logger.debug("%s oracle rejects the form over %s", kind.value, rs.name)
            return False
    return True


def verify_form(word: Word, form, rep: Optional[RepKind] = None) -> bool:
    """Oracle equality plus the support and unit conditions of the form."""
    rs = word.system
    if isinstance(form, GaussForm):
        ok = _supports_ok(rs, form.blocks, GAUSS_SIGNS) and all(e.is_unit() for e in form.h.eps)
    else:
        ok = len(form.blocks) == 5 and _supports_ok(rs, form.blocks, UNITRI_SIGNS)
    if not ok:
        return False
    return _oracles_agree(rs, rep, word, form.to_word())


def verify_conjugation(word: Word, conjugator: Word, u: UnipotentParams,
                       h: TorusParams, v: UnipotentParams, rep: Optional[RepKind] = None) -> bool:
    rs = word.system
    lhs = conjugator + word + conjugator.inverse()
    rhs_gens = u.to_generators() + h.to_generators(rs) + v.to_generators()
    return _oracles_agree(rs, rep, lhs, Word(rs, word.ring, tuple(rhs_gens)))


def max_block_params(form) -> int:
    return max((len(b) for b in form.blocks), default=0)
