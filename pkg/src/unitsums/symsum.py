"""Symmetric sums of monomials over injective tuples from a unit subgroup.

For a subgroup G of order n and exponents A = (a_1, ..., a_k) we evaluate

    p(A) = sum over pairwise distinct x_1..x_k in G of x_1^a_1 * ... * x_k^a_k

either by exhaustive enumeration (the oracle) or by summing, over every set
partition of the positions whose blocks all have exponent-sum divisible by
the group exponent, the product of the block weights n * (-1)^(b-1) * (b-1)!.

Exponent tuples are plain ``tuple[int, ...]``; partitions are tuples of
0-based index blocks, each block sorted and blocks ordered by their least
index.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial, prod
from typing import Iterator, Sequence

import numpy as np

from unitsums.errors import NotNiceError, PreconditionError
from unitsums.group import UnitSubgroup
from unitsums.ring import RingElement

Exponents = tuple[int, ...]
Partition = tuple[tuple[int, ...], ...]

# residues below this bound multiply without overflow in int64
_NUMPY_MODULUS_LIMIT = 1 << 31
_CHUNK_ROWS = 1 << 20


class Method(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    VANISHING = "vanishing"
    BRUTE_FORCE = "brute_force"


def subset_sum(A: Sequence[int], indices) -> int:
    k = len(A)
    total = 0
    for i in indices:
        if not 0 <= i < k:
            raise IndexError(f"index {i} out of range for {k} exponents")
        total += A[i]
    return total


def falling_factorial(n: int, count: int) -> int:
    """n * (n-1) * ... * (n-count+1)."""
    return prod(range(n - count + 1, n + 1)) if count > 0 else 1


def reduce(A: Sequence[int], lam: int, n: int) -> tuple[Exponents, int]:
    """Drop exponents divisible by ``lam``; return the rest and the multiplier.

    The dropped positions evaluate to 1 for every group element, so they only
    count the ways to fill them with still-unused elements.
    """
    k = len(A)
    if k > n:
        raise PreconditionError(f"{k} exponents but the group has only {n} elements")
    kept = tuple(a for a in A if a % lam != 0)
    prefactor = prod(range(n - k + 1, n - len(kept) + 1))
    return kept, prefactor


def chi(block_size: int, n: int) -> int:
    if block_size < 1:
        raise ValueError("block size must be positive")
    sign = -1 if block_size % 2 == 0 else 1
    return n * sign * factorial(block_size - 1)


# -- brute force -------------------------------------------------------------


@lru_cache(maxsize=64)
def _injective_rows(n: int, k: int) -> np.ndarray:
    """All injective k-tuples over range(n) as an (n!/(n-k)!, k) array."""
    rows = np.zeros((1, 0), dtype=np.int32)
    for _ in range(k):
        r, j = rows.shape
        new = np.repeat(rows, n, axis=0)
        col = np.tile(np.arange(n, dtype=np.int32), r)
        keep = (new != col[:, None]).all(axis=1)
        rows = np.column_stack([new[keep], col[keep]])
    rows.setflags(write=False)
    return rows


def _count_injective(n: int, k: int) -> int:
    return falling_factorial(n, k)


def _prefix_blocks(n: int, k: int) -> Iterator[tuple[tuple[int, ...], np.ndarray]]:
    """Cover all injective k-tuples as (fixed prefix, array of suffixes) chunks."""
    j = 0
    while j < k and _count_injective(n - j, k - j) > _CHUNK_ROWS:
        j += 1
    suffix = _injective_rows(n - j, k - j) if j < k else np.zeros((1, 0), dtype=np.int32)
    for prefix in permutations(range(n), j):
        rest = np.array([i for i in range(n) if i not in prefix], dtype=np.int32)
        yield prefix, rest[suffix]


def _power_table(values: Sequence[int], a: int, m: int) -> list[int]:
    return [pow(x, a, m) for x in values]


def _injective_sum(values: Sequence[int], A: Sequence[int], m: int) -> int:
    n, k = len(values), len(A)
    if k > n:
        return 0
    if k == 0:
        return 1 % m
    tables = [_power_table(values, a, m) for a in A]
    if m >= _NUMPY_MODULUS_LIMIT:
        total = 0
        for tup in permutations(range(n), k):
            term = 1
            for t, i in zip(tables, tup):
                term = term * t[i] % m
            total += term
        return total % m
    arrays = [np.array(t, dtype=np.int64) for t in tables]
    total = 0
    for prefix, rows in _prefix_blocks(n, k):
        c = 1
        for t, i in zip(tables, prefix):
            c = c * t[i] % m
        acc = np.full(rows.shape[0], c, dtype=np.int64)
        for col, arr in enumerate(arrays[len(prefix):]):
            acc = acc * arr[rows[:, col]] % m
        total += int(acc.sum())
    return total % m


def brute_force_p(G: UnitSubgroup, A: Sequence[int]) -> RingElement:
    """Exhaustive sum over all injective k-tuples of G."""
    return G.ring(_injective_sum(G.elements, tuple(A), G.ring.modulus))


def brute_force_p_sharp(G: UnitSubgroup, A: Sequence[int]) -> RingElement:
    """Exhaustive sum over injective k-tuples avoiding the identity."""
    values = [v for v in G.elements if v != 1]
    return G.ring(_injective_sum(values, tuple(A), G.ring.modulus))


def unordered_sum(G: UnitSubgroup, exponent: int, k: int) -> RingElement:
    """Sum over k-element subsets {x_1..x_k} of G of (x_1 * ... * x_k)^exponent."""
    m = G.ring.modulus
    powers = _power_table(G.elements, exponent, m)
    total = 0
    for combo in combinations(powers, k):
        term = 1
        for v in combo:
            term = term * v % m
        total += term
    return G.ring(total)


def check_inclusion_exclusion(
    G: UnitSubgroup, A: Sequence[int]
) -> tuple[bool, RingElement, RingElement]:
    """Compare the truncated sum with its expansion over sub-multisets.

    Both sides are computed by brute force. Returns (holds, lhs, rhs).
    """
    A = tuple(A)
    k = len(A)
    lhs = brute_force_p_sharp(G, A)
    cache: dict[Exponents, RingElement] = {}
    rhs = G.ring.zero
    for mask in range(1 << k):
        B = tuple(A[i] for i in range(k) if mask >> i & 1)
        key = tuple(sorted(B))
        if key not in cache:
            cache[key] = brute_force_p(G, key)
        r = k - len(B)
        rhs = rhs + (-1) ** r * factorial(r) * cache[key]
    return lhs == rhs, lhs, rhs


def check_n_p_sharp(G: UnitSubgroup, A: Sequence[int]) -> list[tuple[int, RingElement, RingElement]]:
    """For lam | s(A): compare p(A) with n * p_sharp(A minus position i), for every i.

    Returns one (position, p(A), n * p_sharp) row per position.
    """
    A = tuple(A)
    if not A or sum(A) % G.exponent != 0:
        raise PreconditionError("needs a non-empty exponent list with sum divisible by the group exponent")
    full = brute_force_p(G, A)
    rows = []
    for i in range(len(A)):
        rest = A[:i] + A[i + 1:]
        rows.append((i, full, G.order * brute_force_p_sharp(G, rest)))
    return rows


# -- partitions ---------------------------------------------------------------


def set_partitions(k: int) -> Iterator[Partition]:
    """All set partitions of range(k), via restricted growth strings."""
    if k == 0:
        yield ()
        return
    a = [0] * k

    def rec(i: int, top: int) -> Iterator[Partition]:
        if i == k:
            blocks: list[list[int]] = [[] for _ in range(top + 1)]
            for idx, b in enumerate(a):
                blocks[b].append(idx)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(top + 2):
            a[i] = b
            yield from rec(i + 1, max(top, b))

    a[0] = 0
    yield from rec(1, 0)


def naive_valid_partitions(A: Sequence[int], lam: int) -> list[Partition]:
    """Filter every set partition of the positions by block-sum divisibility."""
    return [
        P
        for P in set_partitions(len(A))
        if all(sum(A[i] for i in block) % lam == 0 for block in P)
    ]


def _canonical(blocks) -> Partition:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


def valid_partitions(A: Sequence[int], lam: int) -> list[Partition]:
    """Set partitions of the positions with every block sum divisible by lam.

    Recursion: fix the least position x of X. Either the whole X is one block,
    or the block holding x is X minus Y for a non-empty Y inside X - {x} with
    lam | s(Y), followed by a valid partition of Y.
    """
    if lam < 1:
        raise ValueError("lam must be positive")
    A = tuple(A)

    @lru_cache(maxsize=None)
    def rec(X: tuple[int, ...]) -> tuple[Partition, ...]:
        if not X:
            return ((),)
        if sum(A[i] for i in X) % lam != 0:
            return ()
        out: list[Partition] = [(X,)]
        x, rest = X[0], X[1:]
        for r in range(1, len(rest) + 1):
            for Y in combinations(rest, r):
                if sum(A[i] for i in Y) % lam != 0:
                    continue
                head = tuple(i for i in X if i not in Y)
                for Z in rec(Y):
                    out.append(_canonical((head, *Z)))
        return tuple(out)

    return list(rec(tuple(range(len(A)))))


def partition_weight(P: Partition, n: int) -> int:
    return prod(chi(len(block), n) for block in P)


def closed_form_by_enumeration(A: Sequence[int], lam: int, n: int) -> int:
    return sum(partition_weight(P, n) for P in valid_partitions(A, lam))


def closed_form_dp(A: Sequence[int], lam: int, n: int) -> int:
    """Sum of partition weights via dynamic programming over subsets of positions.

    f(S) sums over blocks P inside S holding the least index of S, with
    lam | s(P), of chi(|P|) * f(S - P); f(empty) = 1.
    """
    k = len(A)
    full = (1 << k) - 1
    sums = [0] * (1 << k)
    for mask in range(1, 1 << k):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + A[low.bit_length() - 1]
    sizes = [bin(mask).count("1") for mask in range(1 << k)]
    chis = [0] + [chi(b, n) for b in range(1, k + 1)]
    f = [0] * (1 << k)
    f[0] = 1
    for S in range(1, full + 1):
        low = S & -S
        rest = S ^ low
        total = 0
        sub = rest
        while True:
            P = sub | low
            if sums[P] % lam == 0:
                total += chis[sizes[P]] * f[S ^ P]
            if sub == 0:
                break
            sub = (sub - 1) & rest
        f[S] = total
    return f[full]


def closed_form_p(
    G: UnitSubgroup, A: Sequence[int], *, check: bool = True, method: str = "dp"
) -> RingElement:
    """Partition-formula value of p(A), reduced into the ring.

    With ``check`` the minimax condition is verified first and
    :class:`NotNiceError` raised when it fails; pass ``check=False`` to apply
    the formula unverified.
    """
    A = tuple(A)
    n, lam = G.order, G.exponent
    if len(A) > n:
        raise PreconditionError(f"{len(A)} exponents but the group has only {n} elements")
    bad = [a for a in A if a % lam == 0]
    if bad:
        raise PreconditionError(f"exponents {bad} are divisible by the group exponent {lam}")
    if check:
        from unitsums.nicety import is_a_nice

        report = is_a_nice(G, A)
        if not report.nice:
            raise NotNiceError("subgroup is not nice for these exponents", report)
    if method == "dp":
        value = closed_form_dp(A, lam, n)
    elif method == "enumerate":
        value = closed_form_by_enumeration(A, lam, n)
    else:
        raise ValueError(f"unknown method {method!r}")
    return G.ring(value)


@dataclass(frozen=True)
class Evaluation:
    value: RingElement
    method: Method
    nice: bool
    reduced: Exponents
    prefactor: int
    report: object = None


def evaluate(G: UnitSubgroup, A: Sequence[int], *, force_closed_form: bool = False) -> Evaluation:
    """Full pipeline: reduce, test niceness, then closed form, vanishing or oracle."""
    from unitsums.nicety import is_a_nice

    A = tuple(A)
    if len(A) > G.order:
        raise PreconditionError(f"{len(A)} exponents but the group has only {G.order} elements")
    kept, prefactor = reduce(A, G.exponent, G.order)
    report = is_a_nice(G, kept)
    if not kept:
        return Evaluation(G.ring(prefactor), Method.CLOSED_FORM, True, kept, prefactor, report)
    if report.nice or force_closed_form:
        if sum(kept) % G.exponent != 0:
            return Evaluation(G.ring.zero, Method.VANISHING, report.nice, kept, prefactor, report)
        value = closed_form_p(G, kept, check=False)
        return Evaluation(prefactor * value, Method.CLOSED_FORM, report.nice, kept, prefactor, report)
    return Evaluation(brute_force_p(G, A), Method.BRUTE_FORCE, False, kept, prefactor, report)
