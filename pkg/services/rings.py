"""Commutative rings with 1 and the stable-rank-1 witness search.

Elements are immutable ``RingElem`` values that always hold the canonical
encoding of their ring: a residue in ``range(n)`` for ``zmod``/``gf``, a
Python ``int`` for the integers, a pair for direct products.
"""

from __future__ import annotations

import itertools
import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterator, Optional

from errors import DescriptorError, SearchBoundExceeded, UnsupportedRing

logger = logging.getLogger(__name__)


class Ring(ABC):
    """Abstract commutative ring with 1."""

    @property
    @abstractmethod
    def descriptor(self) -> str: ...

    @property
    @abstractmethod
    def size(self) -> Optional[int]:
        """Number of elements, ``None`` for infinite rings."""

    @abstractmethod
    def canonical(self, value: Any) -> Any: ...

    @abstractmethod
    def add_values(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def neg_value(self, a: Any) -> Any: ...

    @abstractmethod
    def mul_values(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def is_unit_value(self, a: Any) -> bool: ...

    @abstractmethod
    def inv_value(self, a: Any) -> Any: ...

    @abstractmethod
    def values(self) -> Iterator[Any]:
        """Canonical enumeration order (smallest residue first)."""

    @abstractmethod
    def atoms(self) -> tuple["AtomicRing", ...]:
        """The ``zmod``/``int`` factors, left to right."""

    @abstractmethod
    def split(self, value: Any) -> tuple[int, ...]:
        """Component residues, one per atom."""

    @abstractmethod
    def join(self, parts: tuple[int, ...]) -> Any: ...

    @abstractmethod
    def encode(self, value: Any) -> Any:
        """JSON encoding: decimal string, nested arrays for products."""

    @abstractmethod
    def decode(self, raw: Any) -> Any: ...

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    def __call__(self, value: Any) -> "RingElem":
        return RingElem(self, self.canonical(value))

    @property
    def zero(self) -> "RingElem":
        return self(0)

    @property
    def one(self) -> "RingElem":
        return self(1)

    def elements(self) -> Iterator["RingElem"]:
        if not self.is_finite:
            raise UnsupportedRing(f"{self.descriptor} cannot be enumerated")
        for value in self.values():
            yield RingElem(self, value)

    def from_json(self, raw: Any) -> "RingElem":
        return RingElem(self, self.decode(raw))

    def __str__(self) -> str:
        return self.descriptor


class AtomicRing(Ring):
    """A ring whose elements are plain integers reduced by ``modulus``."""

    modulus: int

    def atoms(self):
        return (self,)

    def split(self, value):
        return (value,)

    def join(self, parts):
        (value,) = parts
        return self.canonical(value)

    def encode(self, value):
        return str(value)

    def decode(self, raw):
        try:
            return self.canonical(int(raw))
        except (TypeError, ValueError):
            raise DescriptorError(f"{raw!r} is not an element of {self.descriptor}")


@dataclass(frozen=True)
class IntegersMod(AtomicRing):
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DescriptorError(f"zmod needs n >= 2, got {self.n}")

    @property
    def modulus(self):
        return self.n

    @property
    def descriptor(self):
        return f"zmod:{self.n}"

    @property
    def size(self):
        return self.n

    def canonical(self, value):
        if isinstance(value, RingElem):
            value = value.value
        return int(value) % self.n

    def add_values(self, a, b):
        return (a + b) % self.n

    def neg_value(self, a):
        return (-a) % self.n

    def mul_values(self, a, b):
        return (a * b) % self.n

    def is_unit_value(self, a):
        return math.gcd(a, self.n) == 1

    def inv_value(self, a):
        if not self.is_unit_value(a):
            raise ZeroDivisionError(f"{a} is not a unit in {self.descriptor}")
        return pow(a, -1, self.n)

    def values(self):
        return iter(range(self.n))


@dataclass(frozen=True)
class PrimeField(IntegersMod):
    def __post_init__(self):
        if self.n < 2 or any(self.n % k == 0 for k in range(2, math.isqrt(self.n) + 1)):
            raise DescriptorError(f"gf needs a prime, got {self.n}")

    @property
    def descriptor(self):
        return f"gf:{self.n}"


@dataclass(frozen=True)
class Integers(AtomicRing):
    """The ring Z; present to exhibit rings without stable rank 1."""

    @property
    def modulus(self):
        return 0

    @property
    def descriptor(self):
        return "int"

    @property
    def size(self):
        return None

    def canonical(self, value):
        if isinstance(value, RingElem):
            value = value.value
        return int(value)

    def add_values(self, a, b):
        return a + b

    def neg_value(self, a):
        return -a

    def mul_values(self, a, b):
        return a * b

    def is_unit_value(self, a):
        return a in (1, -1)

    def inv_value(self, a):
        if a not in (1, -1):
            raise ZeroDivisionError(f"{a} is not a unit in Z")
        return a

    def values(self):
        raise UnsupportedRing("Z cannot be enumerated")


@dataclass(frozen=True)
class ProductRing(Ring):
    left: Ring
    right: Ring

    @property
    def descriptor(self):
        return f"prod:{self.left.descriptor},{self.right.descriptor}"

    @property
    def size(self):
        if self.left.size is None or self.right.size is None:
            return None
        return self.left.size * self.right.size

    def canonical(self, value):
        if isinstance(value, RingElem):
            value = value.value
        if isinstance(value, int):
            return (self.left.canonical(value), self.right.canonical(value))
        lv, rv = value
        return (self.left.canonical(lv), self.right.canonical(rv))

    def add_values(self, a, b):
        return (self.left.add_values(a[0], b[0]), self.right.add_values(a[1], b[1]))

    def neg_value(self, a):
        return (self.left.neg_value(a[0]), self.right.neg_value(a[1]))

    def mul_values(self, a, b):
        return (self.left.mul_values(a[0], b[0]), self.right.mul_values(a[1], b[1]))

    def is_unit_value(self, a):
        return self.left.is_unit_value(a[0]) and self.right.is_unit_value(a[1])

    def inv_value(self, a):
        return (self.left.inv_value(a[0]), self.right.inv_value(a[1]))

    def values(self):
        return itertools.product(self.left.values(), self.right.values())

    def atoms(self):
        return self.left.atoms() + self.right.atoms()

    def split(self, value):
        return self.left.split(value[0]) + self.right.split(value[1])

    def join(self, parts):
        k = len(self.left.atoms())
        return (self.left.join(tuple(parts[:k])), self.right.join(tuple(parts[k:])))

    def encode(self, value):
        return [self.left.encode(value[0]), self.right.encode(value[1])]

    def decode(self, raw):
        if not isinstance(raw, (list, tuple)) or len(raw) != 2:
            raise DescriptorError(f"{raw!r} is not an element of {self.descriptor}")
        return (self.left.decode(raw[0]), self.right.decode(raw[1]))


@dataclass(frozen=True, eq=True)
class RingElem:
    ring: Ring
    value: Any

    def _coerce(self, other) -> Any:
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise ValueError(f"mixing {self.ring} and {other.ring}")
            return other.value
        return self.ring.canonical(other)

    def __add__(self, other):
        return RingElem(self.ring, self.ring.add_values(self.value, self._coerce(other)))

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg_value(self.value))

    def __sub__(self, other):
        return self + (-RingElem(self.ring, self._coerce(other)))

    def __rsub__(self, other):
        return RingElem(self.ring, self._coerce(other)) - self

    def __mul__(self, other):
        return RingElem(self.ring, self.ring.mul_values(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inv()
        result = self.ring.one
        for _ in range(abs(k)):
            result = result * base
        return result

    def is_unit(self) -> bool:
        return self.ring.is_unit_value(self.value)

    def inv(self) -> "RingElem":
        return RingElem(self.ring, self.ring.inv_value(self.value))

    def is_zero(self) -> bool:
        return self.value == self.ring.zero.value

    def is_one(self) -> bool:
        return self.value == self.ring.one.value

    def to_json(self):
        return self.ring.encode(self.value)

    def __repr__(self):
        return f"{self.ring.encode(self.value)} in {self.ring.descriptor}"


def parse_ring(descriptor: str) -> Ring:
    """Parse ``zmod:<n>``, ``gf:<p>``, ``prod:<desc>,<desc>`` or ``int``."""
    ring, rest = _parse(descriptor.strip())
    if rest:
        raise DescriptorError(f"trailing input {rest!r} in ring descriptor {descriptor!r}")
    return ring


def _parse(text: str) -> tuple[Ring, str]:
    if text.startswith("int"):
        return Integers(), text[3:]
    for prefix, cls in (("zmod:", IntegersMod), ("gf:", PrimeField)):
        if text.startswith(prefix):
            body = text[len(prefix):]
            digits = "".join(itertools.takewhile(str.isdigit, body))
            if not digits:
                raise DescriptorError(f"missing modulus after {prefix!r}")
            return cls(int(digits)), body[len(digits):]
    if text.startswith("prod:"):
        left, rest = _parse(text[5:])
        if not rest.startswith(","):
            raise DescriptorError("prod: needs two comma separated factors")
        right, rest = _parse(rest[1:])
        return ProductRing(left, right), rest
    raise DescriptorError(f"unknown ring descriptor {text!r}")


def units(ring: Ring) -> list[RingElem]:
    return [x for x in ring.elements() if x.is_unit()]


def _same_ring(c: RingElem, d: RingElem) -> Ring:
    if c.ring != d.ring:
        raise ValueError(f"{c!r} and {d!r} live in different rings")
    return c.ring


def stable_rank_witness(c: RingElem, d: RingElem, bound: Optional[int] = None) -> Optional[RingElem]:
    """Return the first z (canonical order) with d + c*z a unit, or ``None``."""
    ring = _same_ring(c, d)
    if ring.is_finite:
        for z in ring.elements():
            if (d + c * z).is_unit():
                return z
        return None
    if not isinstance(ring, Integers):
        raise UnsupportedRing(f"no witness search for {ring.descriptor}")
    if bound is None:
        raise UnsupportedRing("witness search over Z needs a search bound")
    for k in range(bound + 1):
        for z in ((0,) if k == 0 else (k, -k)):
            if abs(d.value + c.value * z) == 1:
                return ring(z)
    # d + c*z = +-1 is solvable iff c divides (+-1 - d)
    cv, dv = c.value, d.value
    solvable = (abs(dv) == 1) if cv == 0 else any((s - dv) % cv == 0 for s in (1, -1))
    if solvable:
        raise SearchBoundExceeded(f"no witness for ({cv}, {dv}) with |z| <= {bound}")
    logger.debug("no integer witness exists for (%s, %s)", cv, dv)
    return None


def is_unimodular(c: RingElem, d: RingElem) -> bool:
    """True iff cR + dR = R."""
    ring = _same_ring(c, d)
    return _unimodular_values(ring, c.value, d.value)


def _unimodular_values(ring: Ring, c, d) -> bool:
    if isinstance(ring, IntegersMod):
        return math.gcd(c, d, ring.n) == 1
    if isinstance(ring, Integers):
        return math.gcd(c, d) == 1
    if isinstance(ring, ProductRing):
        return (_unimodular_values(ring.left, c[0], d[0])
                and _unimodular_values(ring.right, c[1], d[1]))
    if not ring.is_finite:
        raise UnsupportedRing(f"cannot decide unimodularity over {ring.descriptor}")
    one = ring.one.value
    for s, t in itertools.product(ring.values(), repeat=2):
        if ring.add_values(ring.mul_values(c, s), ring.mul_values(d, t)) == one:
            return True
    return False


@lru_cache(maxsize=None)
def check_sr1(ring: Ring) -> bool:
    """Exhaustively confirm that every unimodular pair has a witness."""
    if not ring.is_finite:
        raise UnsupportedRing(f"check_sr1 needs a finite ring, got {ring.descriptor}")
    elems = list(ring.elements())
    for c in elems:
        for d in elems:
            if is_unimodular(c, d) and stable_rank_witness(c, d) is None:
                logger.info("pair (%r, %r) has no witness", c, d)
                return False
    return True
