"""Matrix representations used as independent oracles.

A matrix over a ring is kept as one numpy array per atomic component of the
ring (each ``zmod``/``gf`` factor, or the integers), reduced modulo that
component.  Root unipotents are the finite exponentials sum xi^k e^k / k! of
the Chevalley basis nilpotents.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from errors import IncompatibleRep
from models import GenKind
from services.constants import compute_constants
from services.rings import Ring, RingElem
from services.rootsystem import RootId, RootSystem
from services.words import Generator, Word, expand_generators

logger = logging.getLogger(__name__)

_INT64_SAFE = 2 ** 62


class RepKind(str, Enum):
    ADJOINT = "adjoint"
    NATURAL_A = "natural-A"
    NATURAL_C = "natural-C"
    MINUSCULE = "minuscule"


# Minuscule nodes whose weight modules sum to a faithful module of the
# simply connected group.
MINUSCULE_NODES = {
    "B": lambda l: (l,),
    "D": lambda l: (l - 1, l),
    "E": lambda l: {6: (1,), 7: (7,)}.get(l, ()),
}


def minuscule_nodes(rs: RootSystem) -> tuple[int, ...]:
    pick = MINUSCULE_NODES.get(rs.label)
    return pick(rs.rank) if pick else ()


def default_rep(rs: RootSystem) -> RepKind:
    """A representation faithful on the simply connected group.

    The adjoint image forgets the centre, so it is only chosen for G2, F4
    and E8 where the centre is trivial.
    """
    if rs.label == "A":
        return RepKind.NATURAL_A
    if rs.label == "C":
        return RepKind.NATURAL_C
    if minuscule_nodes(rs):
        return RepKind.MINUSCULE
    return RepKind.ADJOINT


def _dtype(modulus: int, dim: int):
    if modulus and dim * (modulus - 1) ** 2 < _INT64_SAFE:
        return np.int64
    return object


@dataclass(frozen=True, eq=False)
class MatrixOverRing:
    ring: Ring
    parts: tuple[np.ndarray, ...]

    @property
    def n(self) -> int:
        return self.parts[0].shape[0]

    @classmethod
    def from_integers(cls, ring: Ring, m: np.ndarray) -> "MatrixOverRing":
        parts = []
        for atom in ring.atoms():
            part = m.astype(_dtype(atom.modulus, m.shape[0]))
            if atom.modulus:
                part = part % atom.modulus
            parts.append(part)
        return cls(ring, tuple(parts))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "MatrixOverRing":
        return cls.from_integers(ring, np.eye(n, dtype=np.int64))

    @classmethod
    def from_rows(cls, ring: Ring, rows: list[list[RingElem]]) -> "MatrixOverRing":
        n = len(rows)
        split = [[ring.split(ring.canonical(x)) for x in row] for row in rows]
        parts = []
        for k, atom in enumerate(ring.atoms()):
            part = np.array([[cell[k] for cell in row] for row in split], dtype=object)
            parts.append(part.astype(_dtype(atom.modulus, n)))
        return cls(ring, tuple(parts))

    def __matmul__(self, other: "MatrixOverRing") -> "MatrixOverRing":
        parts = []
        for atom, a, b in zip(self.ring.atoms(), self.parts, other.parts):
            c = a @ b
            parts.append(c % atom.modulus if atom.modulus else c)
        return MatrixOverRing(self.ring, tuple(parts))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixOverRing) or other.ring != self.ring:
            return NotImplemented
        return all(np.array_equal(a, b) for a, b in zip(self.parts, other.parts))

    def entry(self, i: int, j: int) -> RingElem:
        return RingElem(self.ring, self.ring.join(tuple(int(p[i, j]) for p in self.parts)))

    def rows(self) -> list[list[RingElem]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def to_json(self) -> list[list]:
        return [[x.to_json() for x in row] for row in self.rows()]


def _unit(n: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.int64)
    m[i, j] = 1
    return m


def _weight_orbit(rs: RootSystem, k: int) -> list[tuple[int, ...]]:
    """Weyl orbit of the fundamental weight k, in fundamental weight coordinates."""
    top = tuple(int(j == k - 1) for j in range(rs.rank))
    seen = {top: None}
    todo = deque([top])
    while todo:
        mu = todo.popleft()
        for i in range(rs.rank):
            if mu[i] == 0:
                continue
            nu = tuple(x - mu[i] * c for x, c in zip(mu, rs.cartan[i]))
            if nu not in seen:
                seen[nu] = None
                todo.append(nu)
    orbit = list(seen)
    if any(abs(x) > 1 for mu in orbit for x in mu):
        raise AssertionError(f"fundamental weight {k} of {rs.name} is not minuscule")
    return orbit


class Representation:
    """Integral images of the Chevalley basis root vectors."""

    def __init__(self, kind: RepKind, rs: RootSystem):
        if kind is RepKind.NATURAL_A and rs.label != "A":
            raise IncompatibleRep(f"natural-A needs type A, got {rs.name}")
        if kind is RepKind.NATURAL_C and rs.label != "C":
            raise IncompatibleRep(f"natural-C needs type C, got {rs.name}")
        if kind is RepKind.MINUSCULE and not minuscule_nodes(rs):
            raise IncompatibleRep(f"no minuscule module modelled for {rs.name}")
        self.kind = kind
        self.rs = rs
        sc = compute_constants(rs)
        if kind is RepKind.ADJOINT:
            self.dim = sc.dim
            self._e = {}
        elif kind is RepKind.MINUSCULE:
            self._e = self._close(sc, self._minuscule())
        else:
            self._e = self._close(sc, self._natural())
        self._sc = sc
        self._powers: dict[RootId, list[np.ndarray]] = {}

    def _natural(self) -> dict[RootId, np.ndarray]:
        rs = self.rs
        l = rs.rank
        e: dict[RootId, np.ndarray] = {}
        if self.kind is RepKind.NATURAL_A:
            self.dim = n = l + 1
            for i in range(l):
                s = rs.simple_ids[i]
                e[s] = _unit(n, i, i + 1)
                e[rs.neg(s)] = _unit(n, i + 1, i)
        else:
            self.dim = n = 2 * l
            for i in range(l - 1):
                s = rs.simple_ids[i]
                e[s] = _unit(n, i, i + 1) - _unit(n, l + i + 1, l + i)
                e[rs.neg(s)] = _unit(n, i + 1, i) - _unit(n, l + i, l + i + 1)
            s = rs.simple_ids[l - 1]
            e[s] = _unit(n, l - 1, 2 * l - 1)
            e[rs.neg(s)] = _unit(n, 2 * l - 1, l - 1)
        return e

    def _minuscule(self) -> dict[RootId, np.ndarray]:
        """Block sum of the minuscule modules, basis v_mu over the weight orbit.

        e_i v_mu = v_(mu + alpha_i) when <mu, alpha_i^v> = -1, f_i is the transpose.
        """
        rs = self.rs
        weights: list[tuple[int, ...]] = []
        for k in minuscule_nodes(rs):
            weights.extend(_weight_orbit(rs, k))
        self.dim = n = len(weights)
        where = {mu: i for i, mu in enumerate(weights)}
        e: dict[RootId, np.ndarray] = {}
        for i, s in enumerate(rs.simple_ids):
            m = np.zeros((n, n), dtype=np.int64)
            for mu, col in where.items():
                if mu[i] == -1:
                    up = tuple(x + c for x, c in zip(mu, rs.cartan[i]))
                    m[where[up], col] = 1
            e[s] = m
            e[rs.neg(s)] = m.T.copy()
        return e

    def _close(self, sc, e: dict[RootId, np.ndarray]) -> dict[RootId, np.ndarray]:
        rs = self.rs
        # e_g = [e_a, e_b] / N_ab over extraspecial pairs, heights increasing
        for g in rs.positive_ids():
            if g in e:
                continue
            a, b = sc.extraspecial[g]
            for x, y, target in ((a, b, g), (rs.neg(a), rs.neg(b), rs.neg(g))):
                bracket = e[x] @ e[y] - e[y] @ e[x]
                q, rem = np.divmod(bracket, sc.n(x, y))
                if rem.any():
                    raise AssertionError(f"{self.kind.value} root vector is not integral")
                e[target] = q
        return e

    def divided_powers(self, alpha: RootId) -> list[np.ndarray]:
        """[e^1/1!, e^2/2!, ...] up to the last nonzero power."""
        if alpha not in self._powers:
            e = self._e[alpha] if self._e else self._sc.ad(alpha)
            out = []
            raw = e
            k = 1
            while raw.any():
                q, rem = np.divmod(raw, math.factorial(k))
                if rem.any():
                    raise AssertionError("divided power is not integral")
                out.append(q)
                raw = raw @ e
                k += 1
            self._powers[alpha] = out
        return self._powers[alpha]

    def x_matrix(self, alpha: RootId, xi: RingElem) -> MatrixOverRing:
        ring = xi.ring
        powers = self.divided_powers(alpha)
        parts = []
        for atom, value in zip(ring.atoms(), ring.split(xi.value)):
            dtype = _dtype(atom.modulus, self.dim)
            m = np.eye(self.dim, dtype=np.int64).astype(dtype)
            for k, d in enumerate(powers, start=1):
                coeff = pow(value, k, atom.modulus) if atom.modulus else value ** k
                m = m + d.astype(dtype) * coeff
            parts.append(m % atom.modulus if atom.modulus else m)
        return MatrixOverRing(ring, tuple(parts))

    def gen_matrix(self, g: Generator) -> MatrixOverRing:
        ring = g.param.ring
        if g.kind is GenKind.X:
            return self.x_matrix(g.root, g.param)
        m = MatrixOverRing.identity(ring, self.dim)
        for x in expand_generators(Word(self.rs, ring, (g,))):
            m = m @ self.x_matrix(x.root, x.param)
        return m

    def eval(self, word: Word) -> MatrixOverRing:
        if word.system != self.rs:
            raise IncompatibleRep(f"word over {word.system.name}, representation of {self.rs.name}")
        m = MatrixOverRing.identity(word.ring, self.dim)
        for g in word:
            m = m @ self.gen_matrix(g)
        return m


@lru_cache(maxsize=None)
def get_representation(kind: RepKind, rs: RootSystem) -> Representation:
    rep = Representation(kind, rs)
    logger.debug("%s representation of %s, dimension %d", kind.value, rs.name, rep.dim)
    return rep


def gen_matrix(kind: RepKind, g: Generator, rs: RootSystem) -> MatrixOverRing:
    return get_representation(kind, rs).gen_matrix(g)


def evaluate(kind: RepKind, word: Word) -> MatrixOverRing:
    return get_representation(kind, word.system).eval(word)


def verify_equal(kind: RepKind, w1: Word, w2: Word) -> bool:
    rep = get_representation(kind, w1.system)
    return rep.eval(w1) == rep.eval(w2)
