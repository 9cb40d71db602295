"""Random finite cyclic covers: how tight is t_cover(p*phi) <= n * t_base(phi)?

Expect equality throughout. The weight is convex and the deck group permutes
optimal cochains upstairs, so their average is an invariant optimum, which is
the lift of a cochain downstairs.
"""

import argparse
from collections import Counter
from dataclasses import replace

from turaev.covers import verify_cover_inequality
from turaev.suite import SuiteConfig, random_instances


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--covers", type=int, default=200)
    ap.add_argument("--seed", type=int, default=SuiteConfig.seed)
    ap.add_argument("--orders", default="2,3", help="comma-separated cover degrees")
    args = ap.parse_args(argv)

    cfg = replace(SuiteConfig(), seed=args.seed, n_covers=args.covers, n_presentations=0,
                  cover_orders=tuple(int(x) for x in args.orders.split(",")))
    by_order = Counter()
    tight = Counter()
    strict = Counter()
    violations = []
    for P, spec, phi in random_instances(cfg).covers:
        r = verify_cover_inequality(P, spec, phi)
        by_order[r.n] += 1
        if not r.holds:
            violations.append((P, r))
        elif r.lhs == r.rhs:
            tight[r.n] += 1
        else:
            strict[r.n] += 1

    print(f"{'n':>3} {'covers':>7} {'equal':>6} {'strict':>7}")
    for n in sorted(by_order):
        print(f"{n:>3} {by_order[n]:>7} {tight[n]:>6} {strict[n]:>7}")
    for P, r in violations:
        print(f"VIOLATION n={r.n}: {r.lhs} > {r.rhs} for {P.format()}")
    print(f"violations: {len(violations)}")
    return 1 if violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
