"""Residue rings Z/mZ with exact arithmetic and unit/regularity queries."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterator

from sympy import isprime, totient

from unitsums.errors import PreconditionError


@dataclass(frozen=True)
class ModRing:
    """The ring Z/mZ for m >= 2."""

    modulus: int

    def __post_init__(self) -> None:
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise PreconditionError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    def __call__(self, value: int) -> RingElement:
        return RingElement(value % self.modulus, self)

    def __len__(self) -> int:
        return self.modulus

    def __iter__(self) -> Iterator[RingElement]:
        for v in range(self.modulus):
            yield RingElement(v, self)

    @property
    def zero(self) -> RingElement:
        return RingElement(0, self)

    @property
    def one(self) -> RingElement:
        return RingElement(1, self)

    @cached_property
    def unit_count(self) -> int:
        return int(totient(self.modulus))

    @cached_property
    def is_field(self) -> bool:
        return bool(isprime(self.modulus))

    def unit_values(self) -> list[int]:
        return [v for v in range(1, self.modulus) if gcd(v, self.modulus) == 1]

    def units(self) -> list[RingElement]:
        return [RingElement(v, self) for v in self.unit_values()]

    def __repr__(self) -> str:
        return f"Z/{self.modulus}Z"


@dataclass(frozen=True)
class RingElement:
    value: int
    ring: ModRing

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.ring.modulus:
            raise ValueError(f"residue {self.value} outside [0, {self.ring.modulus})")

    def _coerce(self, other: RingElement | int) -> int:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError(f"modulus mismatch: {self.ring} vs {other.ring}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: RingElement | int) -> RingElement:
        return self.ring(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: RingElement | int) -> RingElement:
        return self.ring(self.value - self._coerce(other))

    def __rsub__(self, other: int) -> RingElement:
        return self.ring(self._coerce(other) - self.value)

    def __neg__(self) -> RingElement:
        return self.ring(-self.value)

    def __mul__(self, other: RingElement | int) -> RingElement:
        return self.ring(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RingElement:
        if exponent < 0:
            inv = self.inverse()
            if inv is None:
                raise ZeroDivisionError(f"{self} is not a unit")
            return inv ** (-exponent)
        return self.ring(pow(self.value, exponent, self.ring.modulus))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ring.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.ring.modulus))

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> RingElement | None:
        """Multiplicative inverse, or None for a non-unit."""
        if gcd(self.value, self.ring.modulus) != 1:
            return None
        return RingElement(pow(self.value, -1, self.ring.modulus), self.ring)

    def is_unit(self) -> bool:
        return gcd(self.value, self.ring.modulus) == 1

    def is_regular(self) -> bool:
        # finite commutative ring: regular <=> unit
        return self.is_unit()

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.ring.modulus})"


def make_ring(m: int) -> ModRing:
    return ModRing(m)


def inverse(a: RingElement) -> RingElement | None:
    return a.inverse()


def is_regular(a: RingElement) -> bool:
    return a.is_regular()


def is_regular_exhaustive(a: RingElement) -> bool:
    """Regularity straight from the definition: a*x == 0 forces x == 0."""
    m = a.ring.modulus
    return all((a.value * x) % m != 0 for x in range(1, m))


def non_regular_count(ring: ModRing) -> int:
    """Size of the set of zero divisors together with 0."""
    return ring.modulus - ring.unit_count
