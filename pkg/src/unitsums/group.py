"""Finite subgroups of the unit group of Z/mZ, stored explicitly.

Elements are kept as plain residues (ints) so the brute-force oracle can
index them cheaply; ``members()`` wraps them as ring elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Iterable

from sympy import divisors

from unitsums.errors import PreconditionError
from unitsums.ring import ModRing, RingElement


def _order(value: int, modulus: int, divs: list[int]) -> int:
    # divs: ascending divisors of the group order (Lagrange)
    for d in divs:
        if pow(value, d, modulus) == 1:
            return d
    raise ValueError(f"{value} has no order dividing {divs[-1]}")


@dataclass(frozen=True)
class UnitSubgroup:
    ring: ModRing
    elements: tuple[int, ...]
    orders: dict[int, int] = field(compare=False, repr=False)
    exponent: int = field(compare=False)
    label: str = field(default="", compare=False)

    @classmethod
    def from_residues(
        cls, ring: ModRing, residues: Iterable[int], label: str = "", check: bool = True
    ) -> UnitSubgroup:
        elems = tuple(sorted({r % ring.modulus for r in residues}))
        m = ring.modulus
        for v in elems:
            if gcd(v, m) != 1:
                raise PreconditionError(f"{v} is not a unit mod {m}")
        elem_set = set(elems)
        if 1 not in elem_set:
            raise ValueError("subgroup must contain 1")
        for a in elems if check else ():
            if pow(a, -1, m) not in elem_set:
                raise ValueError(f"not closed under inverses at {a}")
            for b in elems:
                if (a * b) % m not in elem_set:
                    raise ValueError(f"not closed under products at {a}*{b}")
        divs = divisors(len(elems))
        orders = {v: _order(v, m, divs) for v in elems}
        exponent = lcm(*orders.values())
        return cls(ring, elems, orders, exponent, label)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: RingElement | int) -> bool:
        return _residue(self.ring, g) in self.orders

    def members(self) -> list[RingElement]:
        return [RingElement(v, self.ring) for v in self.elements]

    def element_order(self, g: RingElement | int) -> int:
        v = _residue(self.ring, g)
        try:
            return self.orders[v]
        except KeyError:
            raise PreconditionError(f"{v} is not in the subgroup") from None

    def max_order_element(self) -> int:
        return max(self.elements, key=lambda v: (self.orders[v], -v))

    def power(self, g: RingElement | int, e: int) -> int:
        """g**e for g in the subgroup; e may be negative or huge."""
        v = _residue(self.ring, g)
        return pow(v, e % self.element_order(v), self.ring.modulus)

    def describe(self) -> str:
        return self.label or f"subgroup of order {self.order}"


def _residue(ring: ModRing, g: RingElement | int) -> int:
    if isinstance(g, RingElement):
        if g.ring != ring:
            raise ValueError(f"modulus mismatch: {g.ring} vs {ring}")
        return g.value
    return g % ring.modulus


def full_unit_group(ring: ModRing) -> UnitSubgroup:
    return UnitSubgroup.from_residues(ring, ring.unit_values(), label="units", check=False)


def nth_residue_subgroup(ring: ModRing, n: int) -> UnitSubgroup:
    """Image of the n-th power map on the units."""
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    m = ring.modulus
    return UnitSubgroup.from_residues(
        ring, {pow(u, n, m) for u in ring.unit_values()}, label=f"nth:{n}", check=False
    )


def generated_subgroup(ring: ModRing, gens: Iterable[RingElement | int]) -> UnitSubgroup:
    m = ring.modulus
    gens = [_residue(ring, g) for g in gens]
    for g in gens:
        if gcd(g, m) != 1:
            raise PreconditionError(f"generator {g} is not a unit mod {m}")
    seen = {1 % m}
    work = [1 % m]
    while work:
        x = work.pop()
        for g in gens:
            y = (x * g) % m
            if y not in seen:
                seen.add(y)
                work.append(y)
    label = "gen:" + ",".join(str(g) for g in gens)
    return UnitSubgroup.from_residues(ring, seen, label=label, check=False)


def element_order(G: UnitSubgroup, g: RingElement | int) -> int:
    return G.element_order(g)


def group_exponent(G: UnitSubgroup) -> int:
    return G.exponent


def parse_subgroup(ring: ModRing, spec: str) -> UnitSubgroup:
    """Build a subgroup from ``units``, ``nth:<n>`` or ``gen:<g1,g2,...>``."""
    spec = spec.strip()
    if spec == "units":
        return full_unit_group(ring)
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ValueError(f"unknown subgroup spec {spec!r}")
    if kind == "nth":
        return nth_residue_subgroup(ring, int(arg))
    if kind == "gen":
        gens = [int(t) for t in arg.split(",") if t.strip()]
        return generated_subgroup(ring, gens)
    raise ValueError(f"unknown subgroup spec {spec!r}")
