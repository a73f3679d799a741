"""Bundled worked congruences, shared by the CLI and the acceptance tests."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from unitsums.group import parse_subgroup
from unitsums.ring import make_ring
from unitsums.symsum import brute_force_p, evaluate, unordered_sum


@dataclass(frozen=True)
class Demo:
    name: str
    modulus: int
    subgroup: str
    exponents: tuple[int, ...]
    # ordered: p(A); unordered: sum over k-subsets of (x_1...x_k)^e; product: product of all of G
    kind: str
    expected: int
    note: str


DEMOS: tuple[Demo, ...] = (
    Demo("pierce-5-2", 5, "nth:2", (2,), "unordered", 2,
         "quadratic residues mod 5, k=1: 2*(-1)^(k-1)"),
    Demo("pierce-13-3", 13, "nth:3", (2, 2), "unordered", -2,
         "cubic residues mod 13, k=2: 2*(-1)^(k-1)"),
    Demo("wilson-7", 7, "units", (1,) * 6, "product", -1,
         "product of all units mod 7"),
    Demo("abstract-9", 9, "units", (1, 5), "ordered", -6,
         "lam*(-1)^(k-1)*(k-1)! with lam=6, k=2"),
    Demo("abstract-27", 27, "units", (1, 17), "ordered", -18,
         "lam*(-1)^(k-1)*(k-1)! with lam=18, k=2"),
    Demo("example2-299", 299, "units", (1, 131), "ordered", -264,
         "units mod 13*23, chi of one 2-block = -264"),
)


@dataclass(frozen=True)
class DemoResult:
    demo: Demo
    expected: int
    computed: int
    oracle: int

    @property
    def ok(self) -> bool:
        return self.expected == self.computed == self.oracle


def run_demo(demo: Demo) -> DemoResult:
    ring = make_ring(demo.modulus)
    G = parse_subgroup(ring, demo.subgroup)
    A = demo.exponents
    k = len(A)
    value = evaluate(G, A).value
    if demo.kind == "ordered":
        computed, oracle = value, brute_force_p(G, A)
    elif demo.kind == "unordered":
        # an all-equal monomial counts each k-subset k! times
        computed = value * pow(factorial(k), -1, demo.modulus)
        oracle = unordered_sum(G, A[0], k)
    elif demo.kind == "product":
        computed = value * pow(factorial(k), -1, demo.modulus)
        oracle = ring(prod(G.elements))
    else:
        raise ValueError(f"unknown demo kind {demo.kind!r}")
    return DemoResult(demo, demo.expected % demo.modulus, int(computed), int(oracle))


def demo_by_name(name: str) -> Demo:
    for d in DEMOS:
        if d.name == name:
            return d
    raise KeyError(name)
