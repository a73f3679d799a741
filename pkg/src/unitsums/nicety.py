"""The minimax applicability test for the partition formula, plus the two
sufficient conditions for residue subgroups mod p^m and units mod pq."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from sympy import isprime, primefactors, totient

from unitsums.errors import PreconditionError
from unitsums.group import UnitSubgroup
from unitsums.ring import non_regular_count


@dataclass(frozen=True)
class NicenessReport:
    nice: bool
    threshold: int
    worst_subset: tuple[int, ...] | None
    worst_value: int | None
    family_size: int
    vacuous: bool
    field: bool
    witness: int | None = None

    def as_dict(self) -> dict:
        return {
            "nice": self.nice,
            "threshold": self.threshold,
            "worst_subset": list(self.worst_subset) if self.worst_subset is not None else None,
            "worst_value": self.worst_value,
            "family_size": self.family_size,
            "vacuous": self.vacuous,
            "field": self.field,
            "witness": self.witness,
        }


def max_quotient_scan(G: UnitSubgroup, s: int) -> int:
    """max over g in G of ord(g) / gcd(s, ord(g)), by scanning every element."""
    return max(d // gcd(s, d) for d in G.orders.values())


def max_quotient_fast(G: UnitSubgroup, s: int) -> int:
    # an element of order lam exists, and d/gcd(s,d) divides lam/gcd(s,lam) for d | lam
    lam = G.exponent
    return lam // gcd(s, lam)


def _subset_residues(A: Sequence[int], lam: int) -> dict[int, int]:
    """First bitmask (in increasing order) reaching each subset-sum residue mod lam."""
    k = len(A)
    sums = [0] * (1 << k)
    first: dict[int, int] = {}
    for mask in range(1, 1 << k):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + A[low.bit_length() - 1]
        r = sums[mask] % lam
        if r and r not in first:
            first[r] = mask
    return first


def is_a_nice(G: UnitSubgroup, A: Sequence[int], *, scan: bool = False) -> NicenessReport:
    """Decide min over subsets B with lam not dividing s(B) of max_g ord(g)/gcd(s(B), ord(g)) >= |D| + 1.

    Subsets are grouped by s(B) mod lam since the inner max only depends on
    that residue. ``scan=True`` uses the per-element max instead of the
    closed expression; both must agree.
    """
    A = tuple(A)
    lam = G.exponent
    threshold = non_regular_count(G.ring) + 1
    field = G.ring.is_field
    inner = max_quotient_scan if scan else max_quotient_fast
    first = _subset_residues(A, lam)
    worst_value = worst_mask = None
    for r, mask in sorted(first.items(), key=lambda kv: kv[1]):
        v = inner(G, r)
        if worst_value is None or v < worst_value:
            worst_value, worst_mask = v, mask
    if worst_value is None:
        nice, vacuous = True, True
    else:
        nice, vacuous = worst_value >= threshold, False
    worst_subset = None
    if worst_mask is not None:
        worst_subset = tuple(i for i in range(len(A)) if worst_mask >> i & 1)
    witness = None
    if A and sum(A) % lam != 0:
        witness = vanishing_witness(G, sum(A))
    return NicenessReport(nice, threshold, worst_subset, worst_value, len(first), vacuous, field, witness)


def vanishing_witness(G: UnitSubgroup, t: int) -> int | None:
    """Some w in G with w^t - 1 regular, or None.

    Powers of a maximal-order element are tried first; then every element.
    """
    m = G.ring.modulus
    g = G.max_order_element()

    def ok(w: int) -> bool:
        return gcd((G.power(w, t) - 1) % m, m) == 1

    w = g
    for _ in range(G.element_order(g)):
        if ok(w):
            return w
        w = w * g % m
    for w in G.elements:
        if ok(w):
            return w
    return None


def least_prime_factor(n: int) -> int | None:
    return min(primefactors(n)) if n > 1 else None


# -- sufficient conditions -----------------------------------------------------


def _proper_subset_sums(A: Sequence[int]):
    k = len(A)
    for mask in range(1, (1 << k) - 1):
        yield sum(A[i] for i in range(k) if mask >> i & 1)


def example1_lambda(p: int, m: int, q: int) -> int:
    phi = int(totient(p**m))
    return phi // gcd(q, phi)


def example1_condition(p: int, m: int, q: int, A: Sequence[int]) -> bool:
    """Gcd criterion for the q-th residues mod p^m.

    True iff lam | s(A) and every non-empty proper subset B has
    gcd(s(B), p(p-1)) < (p-1)/gcd(q, phi(p^m)).
    """
    if p == 2 or not isprime(p):
        raise PreconditionError(f"p must be an odd prime, got {p}")
    if m < 1 or q < 1:
        raise PreconditionError("m and q must be positive")
    phi = int(totient(p**m))
    g = gcd(q, phi)
    lam = phi // g
    if sum(A) % lam != 0:
        return False
    bound = (p - 1) // g
    return all(gcd(s, p * (p - 1)) < bound for s in _proper_subset_sums(A))


class Example2PreconditionError(PreconditionError):
    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


def check_example2_primes(p: int, q: int) -> None:
    for r in (p, q):
        if not isprime(r):
            raise Example2PreconditionError("not_prime", f"{r} is not prime")
        if r <= 11:
            raise Example2PreconditionError("too_small", f"{r} is not greater than 11")
    if p == q:
        raise Example2PreconditionError("not_distinct", "p and q must be distinct")
    if (q + 1) % (p - 1) != 0:
        raise Example2PreconditionError("divisibility", f"{p - 1} does not divide {q + 1}")


def example2_condition(p: int, q: int, A: Sequence[int]) -> bool:
    """Product-of-gcds criterion for the full unit group mod pq.

    True iff for every non-empty proper subset B,
    gcd(s(B), p-1) * gcd(s(B), q-1) > pq / (3(p+q)) forces phi(pq)/2 | s(B).
    """
    check_example2_primes(p, q)
    half_phi = (p - 1) * (q - 1) // 2
    for s in _proper_subset_sums(A):
        big = 3 * (p + q) * gcd(s, p - 1) * gcd(s, q - 1) > p * q
        if big and s % half_phi != 0:
            return False
    return True
