"""Timing comparison of the exhaustive oracle against the subset DP."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from unitsums.group import UnitSubgroup
from unitsums.nicety import is_a_nice
from unitsums.symsum import brute_force_p, closed_form_p


@dataclass
class BenchConfig:
    kmax: int = 3
    seed: int = 0
    max_draws: int = 2000


@dataclass
class BenchRow:
    k: int
    exponents: tuple[int, ...]
    nice: bool
    oracle_value: int
    dp_value: int
    oracle_ms: float
    dp_ms: float

    @property
    def agree(self) -> bool:
        return self.oracle_value == self.dp_value

    @property
    def speedup(self) -> float:
        return self.oracle_ms / self.dp_ms if self.dp_ms > 0 else float("inf")


def draw_exponents(G: UnitSubgroup, k: int, rng: random.Random, max_draws: int = 2000) -> tuple[tuple[int, ...], bool]:
    """Exponents in [1, lam-1] with sum divisible by lam, preferring nice draws.

    k == 1 cannot have both properties; a single non-multiple of lam is drawn.
    """
    lam = G.exponent
    if lam < 2:
        raise ValueError("the trivial-exponent group admits no such exponents")
    last = None
    for _ in range(max_draws):
        if k == 1:
            A = (rng.randrange(1, lam),)
        else:
            head = [rng.randrange(1, lam) for _ in range(k - 1)]
            tail = -sum(head) % lam
            if tail == 0:
                continue
            A = (*head, tail)
        last = A
        if is_a_nice(G, A).nice:
            return A, True
    if last is None:
        raise ValueError(f"could not draw {k} exponents")
    return last, False


def _timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, (time.perf_counter() - t0) * 1e3


def run_bench(G: UnitSubgroup, cfg: BenchConfig) -> list[BenchRow]:
    rng = random.Random(cfg.seed)
    ks = range(2, cfg.kmax + 1) if cfg.kmax >= 2 else [1]
    rows = []
    for k in ks:
        if k > G.order:
            break
        A, nice = draw_exponents(G, k, rng, cfg.max_draws)
        oracle, t_oracle = _timed(brute_force_p, G, A)
        dp, t_dp = _timed(closed_form_p, G, A, check=False)
        rows.append(BenchRow(k, A, nice, int(oracle), int(dp), t_oracle, t_dp))
    return rows
