#!/usr/bin/env python3
"""Rerun the worked examples end to end and print their tables.

Covers the stratum table for (m, k, delta) = (3, 3, 2) over e = (-8, -4, -1),
the degree-14 exactly-3-sections query on F_1, a certified curve sample on
the trigonal stratum, its dominance report, and the small abundance sweep.
Every block is a plain CLI invocation, so the output doubles as usage docs.
"""

from __future__ import annotations

import sys

from hbn.cli import main as cli_main

BLOCKS = [
    ["enumerate", "--m", "3", "--k", "3", "--delta", "2", "--e", "-8,-4,-1"],
    ["enumerate", "--m", "1", "--k", "7", "--delta", "0", "--degree", "14", "--sections", "3"],
    ["sample", "--m", "3", "--k", "3", "--delta", "2", "--e", "-8,-4,-1", "--f", "-7,-4,0", "--seed", "1"],
    ["dominance", "--m", "3", "--k", "3", "--delta", "2", "--e", "-8,-4,-1"],
    ["dominance", "--m", "3", "--k", "3", "--delta", "2", "--e", "-8,-4,-1", "--f", "-7,-4,0", "--lemma", "main"],
    ["section5", "--abundance", "--m", "1", "--delta", "1", "--k", "4"],
    ["section5", "--general-cover", "--k", "4", "--g", "9"],
]


def main() -> int:
    fmt = sys.argv[1] if len(sys.argv) > 1 else "pretty"
    worst = 0
    for argv in BLOCKS:
        print(f"$ hbn {' '.join(argv)}")
        code = cli_main(argv + ["--format", fmt])
        print()
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    raise SystemExit(main())
