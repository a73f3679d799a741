"""How often the minimax condition holds, and how often the partition formula
still matches the oracle when it does not.

    python scripts/niceness_survey.py --moduli 9,15,21,25,27,35 --samples 300
"""

import argparse
import random
from dataclasses import dataclass

from unitsums import brute_force_p, closed_form_p, is_a_nice, make_ring, parse_subgroup


@dataclass
class SurveyConfig:
    moduli: tuple[int, ...] = (9, 15, 21, 25, 27, 35)
    subgroups: tuple[str, ...] = ("units", "nth:2")
    samples: int = 300
    kmax: int = 4
    seed: int = 0


def survey(cfg: SurveyConfig):
    rng = random.Random(cfg.seed)
    for m in cfg.moduli:
        R = make_ring(m)
        for spec in cfg.subgroups:
            G = parse_subgroup(R, spec)
            lam = G.exponent
            if lam < 2:
                continue
            pool = [a for a in range(1, lam)]
            nice = nonnice = nonnice_agree = 0
            for _ in range(cfg.samples):
                k = rng.randint(2, min(cfg.kmax, G.order))
                A = tuple(rng.choice(pool) for _ in range(k))
                if is_a_nice(G, A).nice:
                    nice += 1
                    continue
                nonnice += 1
                nonnice_agree += closed_form_p(G, A, check=False) == brute_force_p(G, A)
            yield m, spec, G.order, lam, nice, nonnice, nonnice_agree


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--moduli", default="9,15,21,25,27,35")
    ap.add_argument("--samples", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = SurveyConfig(moduli=tuple(int(t) for t in args.moduli.split(",")),
                       samples=args.samples, seed=args.seed)
    print(f"{'m':>4} {'subgroup':<8} {'n':>4} {'lam':>4} {'nice':>6} {'not nice':>9} {'formula ok anyway':>18}")
    for m, spec, n, lam, nice, nonnice, agree in survey(cfg):
        print(f"{m:>4} {spec:<8} {n:>4} {lam:>4} {nice:>6} {nonnice:>9} {agree:>18}")


if __name__ == "__main__":
    main()
