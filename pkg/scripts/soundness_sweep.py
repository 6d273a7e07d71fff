"""Random determinants across many groups; no law may ever exclude one of them."""

from __future__ import annotations

import argparse
import random
from collections import Counter

from gdet.detengine import det_exact
from gdet.groupring import Family, GroupSpec, RingElement
from gdet.laws import necessary_conditions


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=2000, help="elements per group")
    ap.add_argument("--bound", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    codes: Counter = Counter()
    bad = []
    for family in Family:
        for n in range(1, args.max_n + 1):
            G = GroupSpec(family, n)
            for _ in range(args.samples):
                a = RingElement.from_vector(G, [rng.randint(-args.bound, args.bound) for _ in range(G.order)])
                d = det_exact(a)
                v = necessary_conditions(G, d)
                codes[v.status.value] += 1
                if v.excluded:
                    bad.append((G.name, d, v.code))
    print("verdicts", dict(codes))
    print(f"violations {len(bad)}" + (f", first {bad[:3]}" if bad else ""))


if __name__ == "__main__":
    main()
