"""Print lambda(Q_4n) for odd n with its witness and exclusion certificate size."""

from __future__ import annotations

import argparse

from gdet.detengine import det_exact
from gdet.search import verify_lambda


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int, nargs="*", default=[3, 5, 7, 9, 15, 21, 105, 1155, 15015])
    args = ap.parse_args()
    print(f"{'n':>7} {'p0':>4} {'lambda':>6}  witness")
    for n in args.n:
        r = verify_lambda(n)
        d = det_exact(r.witness.element)
        print(f"{n:>7} {r.p0:>4} {r.value:>6}  det={d} ({r.witness.anchor}), {len(r.certificate)} values excluded")


if __name__ == "__main__":
    main()
