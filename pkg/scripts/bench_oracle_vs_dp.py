"""Time the exhaustive oracle against the subset DP over several moduli.

    python scripts/bench_oracle_vs_dp.py --moduli 7,13,27,299 --kmax 4 > bench.csv
"""

import argparse
import csv
import sys

from unitsums import make_ring, parse_subgroup
from unitsums.bench import BenchConfig, run_bench


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--moduli", default="7,13,27,101,299")
    ap.add_argument("--subgroup", default="units")
    ap.add_argument("--kmax", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-tuples", type=float, default=5e7,
                    help="skip rows whose oracle would visit more injective tuples")
    args = ap.parse_args()

    out = csv.writer(sys.stdout)
    out.writerow(["modulus", "subgroup", "order", "k", "exponents", "nice",
                  "oracle_ms", "dp_ms", "speedup", "agree"])
    for m in (int(t) for t in args.moduli.split(",")):
        G = parse_subgroup(make_ring(m), args.subgroup)
        if G.exponent < 2:
            continue
        kmax = args.kmax
        while kmax > 1:
            tuples = 1
            for j in range(kmax):
                tuples *= G.order - j
            if tuples <= args.max_tuples:
                break
            kmax -= 1
        for r in run_bench(G, BenchConfig(kmax=kmax, seed=args.seed)):
            out.writerow([m, args.subgroup, G.order, r.k, " ".join(map(str, r.exponents)), r.nice,
                          f"{r.oracle_ms:.3f}", f"{r.dp_ms:.4f}", f"{r.speedup:.0f}", r.agree])
            sys.stdout.flush()


if __name__ == "__main__":
    main()
