"""Exhaustive determinant spectra of small coefficient boxes, checked against the laws."""

from __future__ import annotations

import argparse
import sys
import time

from gdet.groupring import Family, GroupSpec
from gdet.laws import Status, classify, necessary_conditions
from gdet.report import spectrum_csv
from gdet.search import SearchSpec, search_box

SET_OF = {(Family.DICYCLIC, 2): "Q8", (Family.DICYCLIC, 3): "Q12"}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--group", choices=[f.value for f in Family], default="dicyclic")
    ap.add_argument("--n", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--bound", type=int, default=1)
    ap.add_argument("--cap", type=int)
    ap.add_argument("--csv", help="write the last spectrum here")
    args = ap.parse_args()
    for n in args.n:
        G = GroupSpec(Family(args.group), n)
        t = time.perf_counter()
        r = search_box(SearchSpec(G, args.bound, mode="spectrum", value_cap=args.cap))
        sid = SET_OF.get((G.family, n))
        stats = {s: 0 for s in Status}
        for v in r.values:
            verdict = classify(sid, v) if sid else necessary_conditions(G, v)
            stats[verdict.status] += 1
        nz = sorted((v for v in r.values if abs(v) > 1), key=lambda v: (abs(v), v))
        print(
            f"{G.name}: {r.elements_visited} elements, {len(r.values)} values, "
            f"smallest nontrivial {nz[:6]}, verdicts "
            + ", ".join(f"{s.value}={c}" for s, c in stats.items())
            + f", law violations {len(r.violations)}, {time.perf_counter() - t:.1f}s"
        )
        if args.csv:
            with open(args.csv, "wb") as fh:
                fh.write(spectrum_csv(r))
    sys.exit(0)


if __name__ == "__main__":
    main()
