"""Chevalley basis structure constants and commutator coefficients.

One Chevalley basis is fixed per root system: N_{ab} = +(p + 1) on
extraspecial pairs, every other constant follows from the standard
identities.  The integral adjoint action built from these constants is the
source of the commutator coefficients, the Weyl signs and the adjoint oracle.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from errors import OppositeRoots
from services.rings import RingElem
from services.rootsystem import RootId, RootSystem, SubsystemEmbedding

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommutatorRow:
    i: int
    j: int
    gamma: RootId
    coeff: int


class StructureConstants:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.dim = len(rs.roots) + rs.rank
        self.extraspecial: dict[RootId, tuple[RootId, RootId]] = {}
        for g in rs.positive_ids():
            if rs.height(g) == 1:
                continue
            a = min(s for s in rs.simple_ids if rs.combination(1, g, -1, s) is not None)
            self.extraspecial[g] = (a, rs.combination(1, g, -1, a))
        self._n: dict[tuple[RootId, RootId], int] = {}
        for a in range(len(rs.roots)):
            for b in range(len(rs.roots)):
                if rs.add(a, b) is not None:
                    self._value(a, b)
        self._rows: dict[tuple[RootId, RootId], tuple[CommutatorRow, ...]] = {}
        self._ad: dict[RootId, np.ndarray] = {}
        self._weyl: dict[tuple[RootId, RootId], int] = {}

    # -- N_{ab} -----------------------------------------------------------

    def n(self, a: RootId, b: RootId) -> int:
        """N_{ab}; zero when a + b is not a root."""
        return self._n.get((a, b), 0)

    def _value(self, a: RootId, b: RootId) -> int:
        if (a, b) in self._n:
            return self._n[(a, b)]
        rs = self.rs
        g = rs.add(a, b)
        pa, pb = rs.is_positive(a), rs.is_positive(b)
        if pa and pb:
            value = -self._value(b, a) if a > b else self._special(a, b, g)
        elif not pa and not pb:
            value = -self._value(rs.neg(a), rs.neg(b))
        elif not pa:
            value = -self._value(b, a)
        elif rs.is_positive(g):
            # a + b + (-g) = 0:  N_ab / |g|^2 = N_{b,-g} / |a|^2
            value = Fraction(rs.norm2(g), rs.norm2(a)) * self._value(b, rs.neg(g))
        else:
            # N_ab / |g|^2 = N_{-g,a} / |b|^2
            value = Fraction(rs.norm2(g), rs.norm2(b)) * self._value(rs.neg(g), a)
        value = Fraction(value)
        if value.denominator != 1:
            raise AssertionError(f"non-integral N for {rs.roots[a]}, {rs.roots[b]}")
        self._n[(a, b)] = int(value)
        return int(value)

    def _special(self, a: RootId, b: RootId, g: RootId) -> int:
        rs = self.rs
        a1, b1 = self.extraspecial[g]
        if a == a1:
            return rs.string_bounds(a1, b1)[0] + 1
        # four-root identity for a + b - a1 - b1 = 0
        total = Fraction(0)
        x = rs.combination(1, b, -1, a1)
        if x is not None:
            total += Fraction(self._value(b, rs.neg(a1)) * self._value(a, rs.neg(b1)), rs.norm2(x))
        y = rs.combination(1, a, -1, a1)
        if y is not None:
            total += Fraction(self._value(rs.neg(a1), a) * self._value(b, rs.neg(b1)), rs.norm2(y))
        return -total * rs.norm2(g) / self._value(rs.neg(a1), rs.neg(b1))

    def pairs(self) -> Iterator[tuple[RootId, RootId, int]]:
        for (a, b), value in sorted(self._n.items()):
            yield a, b, value

    # -- integral adjoint action -------------------------------------------

    def ad(self, alpha: RootId) -> np.ndarray:
        """Matrix of ad e_alpha on the basis {e_b} then {h_1..h_l} (column = input)."""
        if alpha in self._ad:
            return self._ad[alpha]
        rs = self.rs
        nroots = len(rs.roots)
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        for b in range(nroots):
            if b == rs.neg(alpha):
                for i, c in enumerate(rs.coroot_coefficients(alpha)):
                    m[nroots + i, b] = c
            else:
                g = rs.add(alpha, b)
                if g is not None:
                    m[g, b] = self.n(alpha, b)
        for i, s in enumerate(rs.simple_ids):
            m[alpha, nroots + i] = -rs.pairing(alpha, s)
        self._ad[alpha] = m
        return m

    def exp_apply(self, alpha: RootId, t: int, vector: np.ndarray) -> np.ndarray:
        """exp(t ad e_alpha) applied to an integral vector."""
        ad = self.ad(alpha)
        total = vector.copy()
        raw = vector
        k = 0
        while True:
            k += 1
            raw = ad @ raw
            if not raw.any():
                return total
            step, rem = np.divmod(raw, math.factorial(k))
            if rem.any():
                raise AssertionError("divided power is not integral")
            total = total + (t ** k) * step

    def basis(self, index: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[index] = 1
        return v

    def weyl_sign(self, alpha: RootId, beta: RootId) -> int:
        """eta with w_alpha(1) x_beta(xi) w_alpha(1)^-1 = x_{w_alpha beta}(eta xi)."""
        key = (alpha, beta)
        if key not in self._weyl:
            rs = self.rs
            v = self.basis(beta)
            v = self.exp_apply(alpha, 1, v)
            v = self.exp_apply(rs.neg(alpha), -1, v)
            v = self.exp_apply(alpha, 1, v)
            target = rs.reflect(alpha, beta)
            eta = int(v[target])
            if eta not in (1, -1) or np.count_nonzero(v) != 1:
                raise AssertionError("w_alpha(1) does not permute root vectors")
            self._weyl[key] = eta
        return self._weyl[key]

    # -- commutator formula -------------------------------------------------

    def rows(self, alpha: RootId, beta: RootId) -> tuple[CommutatorRow, ...]:
        """[x_a(s), x_b(t)] = prod x_{ia+jb}(C s^i t^j), ordered by i + j."""
        rs = self.rs
        if beta == rs.neg(alpha):
            raise OppositeRoots(f"{rs.roots[alpha]} and {rs.roots[beta]} are opposite")
        key = (alpha, beta)
        if key in self._rows:
            return self._rows[key]
        if alpha == beta:
            self._rows[key] = ()
            return ()
        targets = []
        for i in range(1, 4):
            for j in range(1, 4):
                g = rs.combination(i, alpha, j, beta)
                if g is not None:
                    targets.append((i + j, g, i, j))
        targets.sort()
        if not targets:
            rows = ()
        elif len(targets) == 1:
            rows = (CommutatorRow(1, 1, targets[0][1], self.n(alpha, beta)),)
        else:
            rows = self._peel(alpha, beta, targets)
        self._rows[key] = rows
        return rows

    def _peel(self, alpha, beta, targets) -> tuple[CommutatorRow, ...]:
        """Read C_ij off the adjoint image of [x_a(1), x_b(1)] applied to the h_k."""
        rs = self.rs
        nroots = len(rs.roots)
        vectors = []
        for k in range(rs.rank):
            v = self.basis(nroots + k)
            v = self.exp_apply(beta, -1, v)
            v = self.exp_apply(alpha, -1, v)
            v = self.exp_apply(beta, 1, v)
            v = self.exp_apply(alpha, 1, v)
            vectors.append(v)
        rows = []
        for _, g, i, j in targets:
            k = next(k for k, s in enumerate(rs.simple_ids) if rs.pairing(g, s) != 0)
            pair = rs.pairing(g, rs.simple_ids[k])
            c, rem = divmod(-int(vectors[k][g]), pair)
            if rem:
                raise AssertionError("non-integral commutator coefficient")
            if c:
                rows.append(CommutatorRow(i, j, g, c))
                vectors = [self.exp_apply(g, -c, v) for v in vectors]
        return tuple(rows)

    def all_rows(self) -> Iterator[tuple[RootId, RootId, CommutatorRow]]:
        rs = self.rs
        for a in range(len(rs.roots)):
            for b in range(len(rs.roots)):
                if b == a or b == rs.neg(a):
                    continue
                for row in self.rows(a, b):
                    yield a, b, row


@lru_cache(maxsize=None)
def compute_constants(rs: RootSystem) -> StructureConstants:
    sc = StructureConstants(rs)
    logger.debug("structure constants for %s: %d nonzero N", rs.name, len(sc._n))
    return sc


def commutator_expansion(sc: StructureConstants, alpha: RootId, beta: RootId,
                         xi: RingElem, zeta: RingElem) -> list[tuple[RootId, RingElem]]:
    """[x_alpha(xi), x_beta(zeta)] as an ordered list of (root, parameter)."""
    out = []
    for row in sc.rows(alpha, beta):
        value = (xi ** row.i) * (zeta ** row.j) * row.coeff
        if not value.is_zero():
            out.append((row.gamma, value))
    return out


@lru_cache(maxsize=None)
def embedding_signs(embedding: SubsystemEmbedding) -> tuple[int, ...]:
    """s_b with x^sub_b(xi) -> x_{emb b}(s_b xi) a homomorphism; +1 on +-Pi."""
    sub = embedding.sub
    sub_sc = compute_constants(sub)
    parent_sc = compute_constants(embedding.parent)
    emb = embedding.root_map
    signs: list[Optional[int]] = [None] * len(sub.roots)
    for s in sub.simple_ids:
        signs[s] = signs[sub.neg(s)] = 1
    for g in sub.positive_ids():
        if signs[g] is not None:
            continue
        a, b = sub_sc.extraspecial[g]
        for x, y, target in ((a, b, g), (sub.neg(a), sub.neg(b), sub.neg(g))):
            value = Fraction(signs[x] * signs[y] * parent_sc.n(emb[x], emb[y]), sub_sc.n(x, y))
            if value not in (1, -1):
                raise AssertionError("subsystem embedding is not structure preserving")
            signs[target] = int(value)
    return tuple(signs)
