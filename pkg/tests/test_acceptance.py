"""Exit criteria. Every check is exact (residues compared for equality).

Run with ``pytest tests/test_acceptance.py``; one PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import itertools
import random
import time
from functools import lru_cache
from math import factorial, gcd, prod

import pytest

from unitsums import (
    brute_force_p,
    brute_force_p_sharp,
    closed_form_p,
    evaluate,
    example1_condition,
    example2_condition,
    full_unit_group,
    generated_subgroup,
    is_a_nice,
    make_ring,
    nth_residue_subgroup,
    valid_partitions,
)
from unitsums.bench import draw_exponents
from unitsums.nicety import example1_lambda, max_quotient_fast, max_quotient_scan, vanishing_witness
from unitsums.symsum import Method, check_inclusion_exclusion, naive_valid_partitions, unordered_sum

RINGS = (5, 7, 9, 13, 15, 25, 27)
RANDOM_SUBGROUPS_PER_RING = 20
SEQUENCES_PER_SUBGROUP = 200
KMAX = 4


@lru_cache(maxsize=None)
def _tested_subgroups():
    rng = random.Random(20261016)
    out = []
    for m in RINGS:
        R = make_ring(m)
        out.append(full_unit_group(R))
        out.extend(nth_residue_subgroup(R, n) for n in (2, 3, 4))
        units = R.unit_values()
        for _ in range(RANDOM_SUBGROUPS_PER_RING):
            out.append(generated_subgroup(R, rng.sample(units, rng.randint(1, 2))))
    return tuple(out)


def exponent_sequences(G, rng):
    """Random sequences with k <= 4, |a| <= 2 lam and lam not dividing any a."""
    lam = G.exponent
    pool = [a for a in range(-2 * lam, 2 * lam + 1) if a % lam]
    kmax = min(KMAX, G.order)
    return [
        tuple(rng.choice(pool) for _ in range(rng.randint(1, kmax)))
        for _ in range(SEQUENCES_PER_SUBGROUP)
    ]


@lru_cache(maxsize=None)
def _p(G, A):
    return brute_force_p(G, A)


@lru_cache(maxsize=None)
def _p_sharp(G, A):
    return brute_force_p_sharp(G, A)


@lru_cache(maxsize=None)
def _suite():
    """Per tested subgroup, its exponent sequences; subgroups with lam = 1 admit none."""
    rng = random.Random(1)
    return tuple(
        (G, exponent_sequences(G, rng) if G.exponent > 1 else []) for G in _tested_subgroups()
    )


def _suite_pairs():
    return [(G, A) for G, seqs in _suite() for A in seqs]


@pytest.mark.criterion("theorem oracle equivalence")
def test_theorem_oracle_equivalence(record_property):
    t0 = time.perf_counter()
    subgroups = _tested_subgroups()
    assert len(subgroups) == len(RINGS) * (4 + RANDOM_SUBGROUPS_PER_RING)
    trivial = 0
    for G, seqs in _suite():
        if G.exponent == 1:
            trivial += 1
        else:
            assert len(seqs) >= SEQUENCES_PER_SUBGROUP
    pairs = _suite_pairs()
    checked = mismatches = 0
    for G, A in pairs:
        if not is_a_nice(G, A).nice:
            continue
        checked += 1
        if closed_form_p(G, A, check=False) != _p(G, A):
            mismatches += 1
    elapsed = time.perf_counter() - t0
    record_property("sequences", len(pairs))
    record_property("nice_checked", checked)
    record_property("trivial_subgroups_skipped", trivial)
    assert mismatches == 0
    assert checked > 0
    assert elapsed < 60


ABSTRACT_INSTANCES = [(3, 2, 1), (3, 3, 1), (3, 3, 2), (13, 1, 3), (5, 2, 2)]


def admissible_exponents(p, m, q, rng, want=30):
    cands = [(a,) for a in range(-200, 201)]
    cands += list(itertools.product(range(-40, 41), repeat=2))
    cands += [tuple(rng.randint(-30, 30) for _ in range(3)) for _ in range(4000)]
    cands += [tuple(rng.randint(-30, 30) for _ in range(4)) for _ in range(4000)]
    ok = sorted({A for A in cands if example1_condition(p, m, q, A)}, key=lambda A: (len(A), A))
    # keep every length represented
    by_k = {}
    for A in ok:
        by_k.setdefault(len(A), []).append(A)
    chosen = []
    for k, As in sorted(by_k.items()):
        chosen.extend(rng.sample(As, min(len(As), want // len(by_k) + 1)))
    return chosen


@pytest.mark.criterion("abstract congruence")
@pytest.mark.parametrize("p, m, q", ABSTRACT_INSTANCES, ids=lambda v: str(v))
def test_abstract_congruence(p, m, q, record_property):
    t0 = time.perf_counter()
    mod = p**m
    G = nth_residue_subgroup(make_ring(mod), q)
    lam = example1_lambda(p, m, q)
    assert G.exponent == lam == G.order
    As = admissible_exponents(p, m, q, random.Random(mod * 10 + q))
    assert len(As) >= 20
    for A in As:
        k = len(A)
        want = lam * (-1) ** (k - 1) * factorial(k - 1)
        ev = evaluate(G, A)
        assert ev.nice and ev.method == Method.CLOSED_FORM
        assert ev.value == want, (A, ev)
        assert _p(G, A) == want
    elapsed = time.perf_counter() - t0
    record_property("instance", f"mod {mod} q={q}")
    record_property("cases", len(As))
    record_property("lengths", sorted({len(A) for A in As}))
    assert elapsed < 5


@pytest.mark.criterion("residue power corollary")
def test_pierce_corollary():
    # quadratic residues mod 5: order 2 = 2k with k = 1
    G5 = nth_residue_subgroup(make_ring(5), 2)
    assert G5.order == 2
    assert unordered_sum(G5, 2, 1) == 2
    ev = evaluate(G5, (2,))
    assert ev.method == Method.CLOSED_FORM and ev.value * pow(factorial(1), -1, 5) == 2
    # cubic residues mod 13: order 4 = 2k with k = 2
    G13 = nth_residue_subgroup(make_ring(13), 3)
    assert G13.order == 4
    assert unordered_sum(G13, 2, 2) == 11
    assert closed_form_p(G13, (2, 2)) * pow(factorial(2), -1, 13) == 11
    assert brute_force_p(G13, (2, 2)) * pow(factorial(2), -1, 13) == 11


@pytest.mark.criterion("semiprime modulus 299")
def test_example2_299():
    t0 = time.perf_counter()
    G = full_unit_group(make_ring(299))
    A = (1, 131)
    assert example2_condition(13, 23, A)
    assert is_a_nice(G, A).nice
    ev = evaluate(G, A)
    assert ev.value == 35 and ev.method == Method.CLOSED_FORM
    assert brute_force_p(G, A) == 35
    assert time.perf_counter() - t0 < 10


@pytest.mark.criterion("wilson lineage")
@pytest.mark.parametrize("p", [5, 7, 11])
def test_wilson_lineage(p):
    G = full_unit_group(make_ring(p))
    for k in range(1, p - 1):
        assert brute_force_p(G, (1,) * k) == 0
    full = brute_force_p(G, (1,) * (p - 1))
    assert full * pow(factorial(p - 1), -1, p) == p - 1
    assert full == (-1 * factorial(p - 1)) % p
    assert prod(G.elements) % p == p - 1


@pytest.mark.criterion("truncated-sum identities")
def test_truncated_sum_identities(record_property):
    pairs = _suite_pairs()
    for p, m, q in ABSTRACT_INSTANCES:
        G = nth_residue_subgroup(make_ring(p**m), q)
        pairs.extend((G, A) for A in admissible_exponents(p, m, q, random.Random(p**m * 10 + q)))
    eq4 = npsharp = 0
    for G, A in pairs:
        assert len(A) <= KMAX
        ok, lhs, rhs = check_inclusion_exclusion(G, A)
        assert ok, (G.ring.modulus, G.label, A, lhs, rhs)
        eq4 += 1
        if sum(A) % G.exponent == 0:
            full = _p(G, A)
            for i in range(len(A)):
                assert full == G.order * _p_sharp(G, A[:i] + A[i + 1:]), (G.label, A, i)
            npsharp += 1
    record_property("inclusion_exclusion_cases", eq4)
    record_property("n_psharp_cases", npsharp)
    assert npsharp > 0


@pytest.mark.criterion("partition recursion vs naive filter")
def test_partition_recursion(record_property):
    t0 = time.perf_counter()
    rng = random.Random(8)
    nonempty = 0
    for case in range(500):
        k = 8 if case % 2 == 0 else rng.randint(0, 8)
        lam = rng.randint(1, 12)
        A = [rng.randint(-3 * lam, 3 * lam) for _ in range(k)]
        rec = valid_partitions(A, lam)
        naive = naive_valid_partitions(A, lam)
        assert len(rec) == len(set(rec))
        assert set(rec) == set(naive), (A, lam)
        nonempty += bool(rec)
    record_property("nonempty_families", nonempty)
    assert time.perf_counter() - t0 < 30


@pytest.mark.criterion("vanishing power sums")
def test_lemma2_vanishing(record_property):
    checked = 0
    for G in _tested_subgroups():
        m = G.ring.modulus
        for t in range(1, 2 * G.exponent + 1):
            if t % G.exponent == 0:
                continue
            if vanishing_witness(G, t) is None:
                continue
            assert sum(pow(x, t, m) for x in G.elements) % m == 0, (m, G.label, t)
            checked += 1
    record_property("cases", checked)
    assert checked > 0


@pytest.mark.criterion("niceness fast path")
def test_fast_path():
    for G in _tested_subgroups():
        for s in range(G.exponent):
            assert max_quotient_fast(G, s) == max_quotient_scan(G, s)
            assert max_quotient_fast(G, s) == G.exponent // gcd(s, G.exponent)


@pytest.mark.criterion("benchmark speedup")
def test_benchmark_sanity(record_property):
    G = full_unit_group(make_ring(299))
    A, nice = draw_exponents(G, 3, random.Random(0))
    assert nice and sum(A) % G.exponent == 0
    t0 = time.perf_counter()
    oracle = brute_force_p(G, A)
    t_oracle = time.perf_counter() - t0
    t_dp = float("inf")
    for _ in range(5):
        t0 = time.perf_counter()
        dp = closed_form_p(G, A, check=False)
        t_dp = min(t_dp, time.perf_counter() - t0)
    record_property("exponents", list(A))
    record_property("speedup", f"{t_oracle / t_dp:.0f}x")
    assert dp == oracle
    assert t_oracle >= 100 * t_dp
