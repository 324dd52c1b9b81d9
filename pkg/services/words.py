"""Generator words and the rewriting toolkit.

A word is a product of root unipotents x_a(xi), Weyl elements w_a(eps) and
semisimple elements h_a(eps).  Everything here rewrites products into other
products of the same group element: torus and Weyl conjugation, reduction to
fundamental roots, collection over special sets and the Levi splitting of a
parabolic unipotent radical.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from errors import CollectionBoundExceeded, NotSpecial
from models import GenKind
from services.constants import StructureConstants, commutator_expansion
from services.rings import Ring, RingElem
from services.rootsystem import RootId, RootSystem

logger = logging.getLogger(__name__)

Factor = tuple[RootId, RingElem]


@dataclass(frozen=True)
class Generator:
    kind: GenKind
    root: RootId
    param: RingElem

    @classmethod
    def x(cls, root: RootId, param: RingElem) -> "Generator":
        return cls(GenKind.X, root, param)

    @classmethod
    def h(cls, root: RootId, param: RingElem) -> "Generator":
        return cls(GenKind.H, root, param)

    @classmethod
    def w(cls, root: RootId, param: RingElem) -> "Generator":
        return cls(GenKind.W, root, param)

    def inverse(self) -> "Generator":
        if self.kind is GenKind.H:
            return Generator.h(self.root, self.param.inv())
        # x_a(xi)^-1 = x_a(-xi),  w_a(eps)^-1 = w_a(-eps)
        return Generator(self.kind, self.root, -self.param)


@dataclass(frozen=True)
class Word:
    system: RootSystem
    ring: Ring
    gens: tuple[Generator, ...] = ()

    def __len__(self):
        return len(self.gens)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.gens)

    def __add__(self, other: "Word") -> "Word":
        if other.system != self.system or other.ring != self.ring:
            raise ValueError("words over different systems or rings")
        return Word(self.system, self.ring, self.gens + other.gens)

    def inverse(self) -> "Word":
        return Word(self.system, self.ring, tuple(g.inverse() for g in reversed(self.gens)))

    def with_gens(self, gens: Iterable[Generator]) -> "Word":
        return Word(self.system, self.ring, tuple(gens))

    @classmethod
    def from_factors(cls, system: RootSystem, ring: Ring, factors: Iterable[Factor]) -> "Word":
        return cls(system, ring, tuple(Generator.x(a, xi) for a, xi in factors if not xi.is_zero()))


@dataclass(frozen=True)
class UnipotentParams:
    """Ordered product of x_a(xi) with nonzero parameters."""

    ring: Ring
    factors: tuple[Factor, ...] = ()

    def __len__(self):
        return len(self.factors)

    def __iter__(self) -> Iterator[Factor]:
        return iter(self.factors)

    @property
    def support(self) -> frozenset:
        return frozenset(a for a, _ in self.factors)

    def get(self, root: RootId) -> RingElem:
        for a, xi in self.factors:
            if a == root:
                return xi
        return self.ring.zero

    def inverse_factors(self) -> list[Factor]:
        return [(a, -xi) for a, xi in reversed(self.factors)]

    def to_generators(self) -> list[Generator]:
        return [Generator.x(a, xi) for a, xi in self.factors]


@dataclass(frozen=True)
class TorusParams:
    """prod_i h_{alpha_i}(eps_i) in simply connected coordinates."""

    ring: Ring
    eps: tuple[RingElem, ...] = field(default=())

    @classmethod
    def identity(cls, ring: Ring, rank: int) -> "TorusParams":
        return cls(ring, (ring.one,) * rank)

    @classmethod
    def from_root(cls, rs: RootSystem, alpha: RootId, eps: RingElem) -> "TorusParams":
        """h_alpha(eps) through the coroot expansion alpha^v = sum n_i alpha_i^v."""
        return cls(eps.ring, tuple(eps ** n for n in rs.coroot_coefficients(alpha)))

    def multiply(self, other: "TorusParams") -> "TorusParams":
        return TorusParams(self.ring, tuple(a * b for a, b in zip(self.eps, other.eps)))

    def inverse(self) -> "TorusParams":
        return TorusParams(self.ring, tuple(e.inv() for e in self.eps))

    def is_identity(self) -> bool:
        return all(e.is_one() for e in self.eps)

    def character(self, rs: RootSystem, beta: RootId) -> RingElem:
        value = self.ring.one
        for e, s in zip(self.eps, rs.simple_ids):
            value = value * e ** rs.pairing(beta, s)
        return value

    def to_generators(self, rs: RootSystem) -> list[Generator]:
        return [Generator.h(s, e) for s, e in zip(rs.simple_ids, self.eps) if not e.is_one()]


# -- conjugation ---------------------------------------------------------------


def torus_conjugate(rs: RootSystem, t: TorusParams, g: Generator) -> Generator:
    """t x_b(xi) t^-1."""
    return Generator.x(g.root, t.character(rs, g.root) * g.param)


def torus_conjugate_params(rs: RootSystem, t: TorusParams, u: UnipotentParams) -> UnipotentParams:
    return UnipotentParams(u.ring, tuple((a, t.character(rs, a) * xi) for a, xi in u.factors))


def weyl_conjugate(sc: StructureConstants, alpha: RootId, g: Generator) -> Generator:
    """w_alpha(1) x_b(xi) w_alpha(1)^-1."""
    rs = sc.rs
    return Generator.x(rs.reflect(alpha, g.root), g.param * sc.weyl_sign(alpha, g.root))


# -- expansion -----------------------------------------------------------------


def _weyl_factors(rs: RootSystem, alpha: RootId, eps: RingElem) -> list[Generator]:
    return [Generator.x(alpha, eps), Generator.x(rs.neg(alpha), -eps.inv()), Generator.x(alpha, eps)]


def _semisimple_factors(rs: RootSystem, alpha: RootId, eps: RingElem) -> list[Generator]:
    # h_a(e) = x_a(e - 1) x_-a(1) x_a(e^-1 - 1) x_-a(-e)
    one = eps.ring.one
    neg = rs.neg(alpha)
    return [
        Generator.x(alpha, eps - one),
        Generator.x(neg, one),
        Generator.x(alpha, eps.inv() - one),
        Generator.x(neg, -eps),
    ]


def expand_generators(word: Word) -> Word:
    """Rewrite H and W generators as X-words and drop x_a(0)."""
    rs = word.system
    out: list[Generator] = []
    for g in word:
        if g.kind is GenKind.X:
            parts = [g]
        elif g.kind is GenKind.W:
            parts = _weyl_factors(rs, g.root, g.param)
        else:
            parts = _semisimple_factors(rs, g.root, g.param)
        out.extend(p for p in parts if not p.param.is_zero())
    return word.with_gens(out)


def reflection_path(rs: RootSystem, beta: RootId) -> tuple[list[RootId], RootId]:
    """Simple roots a_1..a_k and b' in +-Pi with beta = s_1 ... s_k (b')."""
    path = []
    cur = beta
    sign = rs.sign(beta)
    while not rs.is_fundamental(cur):
        s = next(s for s in rs.simple_ids if sign * rs.pairing(cur, s) > 0)
        path.append(s)
        cur = rs.reflect(s, cur)
    return path, cur


def fundamental_factors(sc: StructureConstants, g: Generator) -> list[Generator]:
    """x_b(xi) as n x_{b'}(+-xi) n^-1 with b' in +-Pi and n a product of w_{a_i}(1)."""
    rs = sc.rs
    if rs.is_fundamental(g.root):
        return [g]
    one = g.param.ring.one
    path, base = reflection_path(rs, g.root)
    # sign picked up carrying x_{b'} back along the path
    eta = 1
    cur = base
    for s in reversed(path):
        eta *= sc.weyl_sign(s, cur)
        cur = rs.reflect(s, cur)
    out: list[Generator] = []
    for s in path:
        out.extend(_weyl_factors(rs, s, one))
    out.append(Generator.x(base, g.param * eta))
    for s in reversed(path):
        out.extend(_weyl_factors(rs, s, -one))
    return out


def expand_to_fundamental(sc: StructureConstants, word: Word) -> Word:
    """Rewrite each x_b(xi) with b outside +-Pi through fundamental generators."""
    out: list[Generator] = []
    for g in expand_generators(word):
        out.extend(fundamental_factors(sc, g))
    return word.with_gens(out)


# -- collection ----------------------------------------------------------------


def collect(sc: StructureConstants, roots: Iterable[RootId], factors: Iterable[Factor],
            order: Optional[Sequence[RootId]] = None, ring: Optional[Ring] = None) -> UnipotentParams:
    """Collect a product of x_a(xi) over a special closed set into a fixed order.

    ``order`` lists the set in product order and defaults to the canonical
    root order.  It must be a filtration: every commutator root of two roots
    comes after both.  Stage k moves every x_(order[k]) factor to the front of
    the unsettled tail and merges them; the commutators this creates lie
    strictly later in ``order``, so the settled prefix grows by one root per
    stage and there are at most ``len(order)`` stages.
    """
    rs = sc.rs
    allowed = frozenset(roots)
    if any(rs.neg(a) in allowed for a in allowed):
        raise NotSpecial("root set meets its negative")
    if order is None:
        order = sorted(allowed)
    position = {a: k for k, a in enumerate(order)}
    work = [(a, xi) for a, xi in factors if not xi.is_zero()]
    if ring is None:
        if not work:
            raise ValueError("ring needed to collect an empty product")
        ring = work[0][1].ring
    for a, _ in work:
        if a not in position:
            raise ValueError(f"root {rs.roots[a]} outside the collection set")

    settled: list[Factor] = []
    swaps = 0
    for stage, gamma in enumerate(order):
        if not work:
            break
        total = ring.zero
        while True:
            k = next((i for i, (a, _) in enumerate(work) if a == gamma), None)
            if k is None:
                break
            xi = work[k][1]
            while k > 0:
                b, zeta = work[k - 1]
                # x_b(zeta) x_g(xi) = x_g(xi) x_b(zeta) [x_b(-zeta), x_g(-xi)]
                extra = commutator_expansion(sc, b, gamma, -zeta, -xi)
                for c, _ in extra:
                    if c not in position:
                        raise NotSpecial(f"commutator root {rs.roots[c]} outside the collection set")
                    if position[c] <= stage:
                        raise CollectionBoundExceeded(
                            f"commutator root {rs.roots[c]} does not lie above {rs.roots[gamma]} in the order"
                        )
                work[k - 1:k + 1] = [(gamma, xi), (b, zeta)] + extra
                k -= 1
                swaps += 1
            total = total + xi
            del work[0]
        if not total.is_zero():
            settled.append((gamma, total))
    if work:
        raise CollectionBoundExceeded(f"{len(work)} factors left after {len(order)} stages")
    logger.debug("collected %d factors with %d swaps", len(settled), swaps)
    return UnipotentParams(ring, tuple(settled))


def collect_signed(sc: StructureConstants, sign: int, factors: Iterable[Factor], ring: Ring) -> UnipotentParams:
    """Collect over Phi^sign in canonical order."""
    return collect(sc, sc.rs.signed_ids(sign), factors, ring=ring)


def split_levi(sc: StructureConstants, u: UnipotentParams, r: int, sign: int) -> tuple[UnipotentParams, UnipotentParams]:
    """u = (Delta^sign part)(Sigma^sign part) for the r-th parabolic."""
    rs = sc.rs
    par = rs.parabolic(r)
    roots = rs.signed_ids(sign)
    delta = [a for a in roots if a in par.delta]
    sigma = [a for a in roots if a not in par.delta]
    collected = collect(sc, roots, u.factors, order=delta + sigma, ring=u.ring)
    d = tuple(f for f in collected if f[0] in par.delta)
    s = tuple(f for f in collected if f[0] not in par.delta)
    return UnipotentParams(u.ring, d), UnipotentParams(u.ring, s)


def conj_levi(sc: StructureConstants, r: int, d: Iterable[Factor], s: UnipotentParams, sign: int) -> UnipotentParams:
    """d s d^-1 for d a product over Delta and s over Sigma^sign."""
    rs = sc.rs
    sigma = rs.parabolic(r).sigma_part(sign)
    current = list(s.factors)
    for gamma, zeta in reversed(list(d)):
        if zeta.is_zero() or not current:
            continue
        moved: list[Factor] = []
        for beta, b in current:
            # x_g(z) x_b(b) x_g(-z) = [x_g(z), x_b(b)] x_b(b)
            moved.extend(commutator_expansion(sc, gamma, beta, zeta, b))
            moved.append((beta, b))
        current = list(collect(sc, sigma, moved, ring=s.ring).factors)
    return UnipotentParams(s.ring, tuple(current))
