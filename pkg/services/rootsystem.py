"""Reduced irreducible root systems in Bourbaki numbering.

Roots are integer coefficient vectors over the simple roots.  Root ids follow
the canonical order used by every ordered unipotent product: positive roots
by (height, coefficient vector with earlier simple roots first), then the
negative roots in the same order.  So ``id + P`` is the negative of ``id``
where ``P`` is the number of positive roots.
"""

from __future__ import annotations

import itertools
import logging
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional

from errors import DescriptorError, InvalidType, RankTooSmall

logger = logging.getLogger(__name__)

RootId = int

# Expected |Phi| per type, used as a self check after the closure.
ROOT_COUNTS = {
    "A": lambda l: l * (l + 1),
    "B": lambda l: 2 * l * l,
    "C": lambda l: 2 * l * l,
    "D": lambda l: 2 * l * (l - 1),
    "E": lambda l: {6: 72, 7: 126, 8: 240}[l],
    "F": lambda l: 48,
    "G": lambda l: 12,
}


def validate_type(label: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": 6 <= rank <= 8,
        "F": rank == 4,
        "G": rank == 2,
    }.get(label)
    if ok is None:
        raise InvalidType(f"unknown root system type {label!r}")
    if label == "D" and rank == 3:
        raise InvalidType("D3 is not supported, use A3 instead")
    if not ok:
        raise InvalidType(f"{label}{rank} is not a valid root system")


def _edges(label: str, l: int) -> list[tuple[int, int, int, int]]:
    """Bonds (i, j, a_ij, a_ji) with 1-based nodes, a_ij = <alpha_i, alpha_j^v>."""
    chain = [(i, i + 1, -1, -1) for i in range(1, l)]
    if label == "A":
        return chain
    if label == "B":
        return chain[:-1] + [(l - 1, l, -2, -1)]
    if label == "C":
        return chain[:-1] + [(l - 1, l, -1, -2)]
    if label == "D":
        return chain[:-1] + [(l - 2, l, -1, -1)]
    if label == "E":
        return [(1, 3, -1, -1), (2, 4, -1, -1)] + [(i, i + 1, -1, -1) for i in range(3, l)]
    if label == "F":
        return [(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)]
    if label == "G":
        return [(1, 2, -1, -3)]
    raise InvalidType(f"unknown root system type {label!r}")


@lru_cache(maxsize=None)
def cartan_matrix(label: str, rank: int) -> tuple[tuple[int, ...], ...]:
    validate_type(label, rank)
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, aij, aji in _edges(label, rank):
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji
    return tuple(tuple(row) for row in a)


def _root_lengths(cartan) -> tuple[int, ...]:
    """Squared lengths (alpha_i, alpha_i), scaled so the short roots have 2."""
    l = len(cartan)
    d: list[Optional[Fraction]] = [None] * l
    d[0] = Fraction(1)
    todo = deque([0])
    while todo:
        i = todo.popleft()
        for j in range(l):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                todo.append(j)
    scale = 2 / min(d)
    return tuple(int(x * scale) for x in d)


@dataclass(frozen=True)
class ParabolicData:
    """The r-th standard parabolic subset S_r and its pieces, as root-id sets."""

    node: int
    s: frozenset
    delta: frozenset
    sigma: frozenset
    s_minus: frozenset
    minus_sigma: frozenset

    def sigma_part(self, sign: int) -> frozenset:
        return self.sigma if sign > 0 else self.minus_sigma


class RootSystem:
    def __init__(self, label: str, rank: int):
        validate_type(label, rank)
        self.label = label
        self.rank = rank
        self.cartan = cartan_matrix(label, rank)
        self.lengths = _root_lengths(self.cartan)
        self.gram = tuple(
            tuple(self.cartan[i][j] * self.lengths[j] // 2 for j in range(rank))
            for i in range(rank)
        )
        positive = self._close_positive()
        positive.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
        self.roots: tuple[tuple[int, ...], ...] = tuple(positive) + tuple(
            tuple(-x for x in c) for c in positive
        )
        self.num_positive = len(positive)
        self.index = {c: k for k, c in enumerate(self.roots)}
        expected = ROOT_COUNTS[label](rank)
        if len(self.roots) != expected:
            raise AssertionError(f"{self.name}: built {len(self.roots)} roots, expected {expected}")
        logger.debug("built %s with %d roots", self.name, len(self.roots))

    def _close_positive(self) -> list[tuple[int, ...]]:
        l = self.rank
        unit = [tuple(int(i == k) for i in range(l)) for k in range(l)]
        found = set(unit)
        level = list(unit)
        while level:
            nxt = set()
            for beta in level:
                for i in range(l):
                    p = 0
                    while tuple(b - (p + 1) * e for b, e in zip(beta, unit[i])) in found:
                        p += 1
                    q = p - self._pair_vectors(beta, unit[i])
                    if q > 0:
                        nxt.add(tuple(b + e for b, e in zip(beta, unit[i])))
            found |= nxt
            level = sorted(nxt)
        return list(found)

    def _inner_vectors(self, a, b) -> int:
        return sum(a[i] * self.gram[i][j] * b[j]
                   for i in range(self.rank) if a[i]
                   for j in range(self.rank) if b[j])

    def _pair_vectors(self, beta, alpha) -> int:
        return 2 * self._inner_vectors(beta, alpha) // self._inner_vectors(alpha, alpha)

    @property
    def name(self) -> str:
        return f"{self.label}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.label, self.rank) == (other.label, other.rank)

    def __hash__(self):
        return hash((self.label, self.rank))

    def __len__(self):
        return len(self.roots)

    # -- single roots ---------------------------------------------------

    def coeff(self, alpha: RootId, k: int) -> int:
        """m_k(alpha), with k in 1..rank."""
        return self.roots[alpha][k - 1]

    def height(self, alpha: RootId) -> int:
        return sum(self.roots[alpha])

    def is_positive(self, alpha: RootId) -> bool:
        return alpha < self.num_positive

    def sign(self, alpha: RootId) -> int:
        return 1 if self.is_positive(alpha) else -1

    def neg(self, alpha: RootId) -> RootId:
        return (alpha + self.num_positive) % len(self.roots)

    def simple(self, k: int) -> RootId:
        """Id of alpha_k (1-based)."""
        return self.index[tuple(int(i == k - 1) for i in range(self.rank))]

    @cached_property
    def simple_ids(self) -> tuple[RootId, ...]:
        return tuple(self.simple(k) for k in range(1, self.rank + 1))

    def is_fundamental(self, alpha: RootId) -> bool:
        """alpha in +-Pi."""
        return abs(self.height(alpha)) == 1

    def simple_node(self, alpha: RootId) -> int:
        """1-based k with alpha = +-alpha_k."""
        if not self.is_fundamental(alpha):
            raise ValueError(f"{self.roots[alpha]} is not a fundamental root")
        return next(k for k, c in enumerate(self.roots[alpha], start=1) if c)

    def lookup(self, coeffs) -> Optional[RootId]:
        return self.index.get(tuple(coeffs))

    def add(self, alpha: RootId, beta: RootId) -> Optional[RootId]:
        return self.lookup(a + b for a, b in zip(self.roots[alpha], self.roots[beta]))

    def combination(self, i: int, alpha: RootId, j: int, beta: RootId) -> Optional[RootId]:
        return self.lookup(i * a + j * b for a, b in zip(self.roots[alpha], self.roots[beta]))

    def inner(self, alpha: RootId, beta: RootId) -> int:
        return self._inner_vectors(self.roots[alpha], self.roots[beta])

    def norm2(self, alpha: RootId) -> int:
        return self.inner(alpha, alpha)

    def pairing(self, beta: RootId, alpha: RootId) -> int:
        """Cartan integer <beta, alpha^v>."""
        return self._pair_vectors(self.roots[beta], self.roots[alpha])

    def reflect(self, alpha: RootId, beta: RootId) -> RootId:
        """w_alpha(beta) = beta - <beta, alpha^v> alpha."""
        return self.combination(1, beta, -self.pairing(beta, alpha), alpha)

    def string_bounds(self, alpha: RootId, beta: RootId) -> tuple[int, int]:
        """(p, q) for the alpha-string beta - p alpha, ..., beta + q alpha."""
        p = 0
        while self.combination(1, beta, -(p + 1), alpha) is not None:
            p += 1
        q = 0
        while self.combination(1, beta, q + 1, alpha) is not None:
            q += 1
        return p, q

    def coroot_coefficients(self, alpha: RootId) -> tuple[int, ...]:
        """n_i with alpha^v = sum n_i alpha_i^v."""
        n2 = self.norm2(alpha)
        return tuple(m * self.lengths[i] // n2 for i, m in enumerate(self.roots[alpha]))

    # -- subsets ----------------------------------------------------------

    def positive_ids(self) -> range:
        return range(self.num_positive)

    def negative_ids(self) -> range:
        return range(self.num_positive, len(self.roots))

    def signed_ids(self, sign: int) -> range:
        return self.positive_ids() if sign > 0 else self.negative_ids()

    def is_closed(self, subset) -> bool:
        subset = set(subset)
        for a in subset:
            for b in subset:
                s = self.add(a, b)
                if s is not None and s not in subset:
                    return False
        return True

    def is_special(self, subset) -> bool:
        subset = set(subset)
        return all(self.neg(a) not in subset for a in subset)

    def parabolic(self, r: int) -> ParabolicData:
        if not 1 <= r <= self.rank:
            raise ValueError(f"node {r} outside 1..{self.rank}")
        ids = range(len(self.roots))
        return ParabolicData(
            node=r,
            s=frozenset(a for a in ids if self.coeff(a, r) >= 0),
            delta=frozenset(a for a in ids if self.coeff(a, r) == 0),
            sigma=frozenset(a for a in ids if self.coeff(a, r) > 0),
            s_minus=frozenset(a for a in ids if self.coeff(a, r) <= 0),
            minus_sigma=frozenset(a for a in ids if self.coeff(a, r) < 0),
        )

    def terminal_subsystem(self, r: int) -> "SubsystemEmbedding":
        return terminal_subsystem(self, r)


@dataclass(frozen=True)
class SubsystemEmbedding:
    """The subsystem spanned by Pi minus {alpha_r}, relabelled to Bourbaki numbering.

    ``nodes[i]`` is the parent node (1-based) of the sub node ``i + 1``;
    ``root_map[b]`` is the parent root id of sub root ``b``.
    """

    parent: RootSystem
    sub: RootSystem
    removed: int
    nodes: tuple[int, ...]
    root_map: tuple[RootId, ...]

    @cached_property
    def inverse(self) -> dict[RootId, RootId]:
        return {g: b for b, g in enumerate(self.root_map)}


@lru_cache(maxsize=None)
def build(label: str, rank: int) -> RootSystem:
    return RootSystem(label, rank)


def parse_system(text: str) -> RootSystem:
    """Parse labels such as ``B3`` or ``G2``."""
    match = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
    if not match:
        raise DescriptorError(f"cannot parse root system {text!r}")
    return build(match.group(1).upper(), int(match.group(2)))


def _candidate_types(rank: int):
    for label in "ABCDEFG":
        try:
            validate_type(label, rank)
        except InvalidType:
            continue
        yield label


@lru_cache(maxsize=None)
def terminal_subsystem(rs: RootSystem, r: int) -> SubsystemEmbedding:
    if rs.rank == 1:
        raise RankTooSmall(f"{rs.name} has no proper terminal subsystem")
    if r not in (1, rs.rank):
        raise ValueError(f"node {r} is not terminal in {rs.name}")
    rest = [k for k in range(1, rs.rank + 1) if k != r]
    m = len(rest)
    sub_cartan = [[rs.cartan[a - 1][b - 1] for b in rest] for a in rest]
    for label in _candidate_types(m):
        target = cartan_matrix(label, m)
        for perm in itertools.permutations(range(m)):
            if all(sub_cartan[perm[i]][perm[j]] == target[i][j]
                   for i in range(m) for j in range(m)):
                sub = build(label, m)
                nodes = tuple(rest[perm[i]] for i in range(m))
                root_map = []
                for coeffs in sub.roots:
                    parent = [0] * rs.rank
                    for i, c in enumerate(coeffs):
                        parent[nodes[i] - 1] = c
                    root_map.append(rs.index[tuple(parent)])
                logger.debug("%s minus node %d is %s on nodes %s", rs.name, r, sub.name, nodes)
                return SubsystemEmbedding(rs, sub, r, nodes, tuple(root_map))
    raise AssertionError(f"could not identify {rs.name} minus node {r}")
