"""Hunt for Q_4p determinants 2^5 p^l m with |m| below (p^2+1)/2."""

from __future__ import annotations

import argparse
import time

from gdet.search import search_frontier


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, nargs="+", default=[3, 5, 7])
    ap.add_argument("--min", type=int, default=0, help="lowest coefficient")
    ap.add_argument("--bound", type=int, default=1, help="highest coefficient")
    ap.add_argument("--budget", type=int, help="elements per prime")
    ap.add_argument("--threads", type=int)
    args = ap.parse_args()
    for p in args.p:
        t = time.perf_counter()
        r = search_frontier(p, args.bound, budget=args.budget, coeff_min=args.min, threads=args.threads)
        hits = ", ".join(f"{e.value} x{e.multiplicity}" for e in r.spectrum) or "none"
        print(
            f"p={p}: visited {r.elements_visited} (exhausted={r.exhausted}) "
            f"in {time.perf_counter() - t:.1f}s; hits: {hits}"
        )


if __name__ == "__main__":
    main()
