"""How often do the Alexander lower bounds meet t_P on random good presentations?"""

import argparse
import random
from collections import Counter
from dataclasses import replace

from turaev.alexander_norm import lower_bounds
from turaev.presentations import make_good, t_P
from turaev.suite import SuiteConfig, random_class, random_presentation


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=300)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-gens", type=int, default=3)
    args = ap.parse_args(argv)

    cfg = replace(SuiteConfig(), max_gens=args.max_gens)
    rng = random.Random(args.seed)
    outcome = Counter()
    gaps = Counter()
    for _ in range(args.n):
        P = make_good(random_presentation(rng, cfg))
        if not P.gens:
            continue
        phi = random_class(rng, P)
        try:
            b = lower_bounds(P, phi)
        except Exception as e:  # b1 = 0 and similar
            outcome[type(e).__name__] += 1
            continue
        lows = [v for v in (b.a_bound, b.deg_bound) if v is not None]
        up = t_P(P, phi)
        if not lows:
            outcome["no bound applies"] += 1
            continue
        gap = up - max(lows)
        assert gap >= 0, (P.format(), phi)
        gaps[gap] += 1
        outcome["certified" if gap == 0 else "gap"] += 1

    for k, v in sorted(outcome.items()):
        print(f"{k:>20}: {v}")
    print("gap histogram:", ", ".join(f"{g}: {c}" for g, c in sorted(gaps.items())))


if __name__ == "__main__":
    main()
