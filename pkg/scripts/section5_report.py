#!/usr/bin/env python3
"""Scrollar bound survey: abundance verdicts and non-abundance witnesses.

Three tables.  First, abundance of the conjectured polytope for small
(m, delta, k); the banner cases m = 0 (split covers of rational normal
curves) and delta = 0 come out ABUNDANT, while small mixed classes carry
corner witnesses.  Second, the general-cover witnesses for k in 4..6 across
a genus range.  Third, the imprimitive double-cover family, which leaves
the pairwise polytope once g2 > 2 g1 + 1.
"""

from __future__ import annotations

import argparse

from hbn.scrollar import (
    abundance_verdict,
    general_cover_not_abundant,
    imprimitive_double_cover_scrollar,
    oo_admits,
)
from hbn.splitting import HirzebruchClass


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=5)
    ap.add_argument("--gmax", type=int, default=30)
    args = ap.parse_args()

    print("abundance of the conjectured polytope")
    print(f"{'m':>2} {'delta':>5} {'k':>2}  verdict        witness")
    for m in range(3):
        for delta in range(4):
            if m == 0 and delta == 0:
                continue
            for k in range(2, args.kmax + 1):
                cls = HirzebruchClass(m=m, k=k, delta=delta)
                res = abundance_verdict(cls)
                wit = "" if res["witness"] is None else str(tuple(res["witness"]))
                print(f"{m:>2} {delta:>5} {k:>2}  {res['verdict']:<13}  {wit}")

    print()
    print("general covers: splitting types too deep for their genus")
    print(f"{'k':>2} {'g':>3}  witness")
    for k in range(4, args.kmax + 2):
        for g in range(2 * (k - 1), args.gmax + 1):
            wit = general_cover_not_abundant(k, g)
            if wit is not None:
                print(f"{k:>2} {g:>3}  {tuple(wit)}")

    print()
    print("imprimitive double covers against the pairwise bound")
    print(f"{'g1':>3} {'g2':>3}  scrollar          admissible")
    for g1 in range(0, 4):
        for g2 in range(g1, 4 * g1 + 4):
            a = imprimitive_double_cover_scrollar(g1, g2)
            print(f"{g1:>3} {g2:>3}  {str(a):<16}  {oo_admits(a)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
