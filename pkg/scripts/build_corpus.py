#!/usr/bin/env python3
"""Write the isomorph-free graph corpus of one order to a graph6 file.

Degree bounds are optional; without them the order cap for unconstrained
enumeration applies.  The output is one graph6 line per isomorphism
class, in the deterministic order the enumerator produces, so two runs
of this script always produce identical files.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from treewheel.enumeration import EnumFilter, enumerate_graphs
from treewheel.graph import graph6_encode


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("order", type=int, help="number of vertices")
    parser.add_argument("--min-degree", type=int, default=None)
    parser.add_argument("--max-degree", type=int, default=None)
    parser.add_argument("--out", type=Path, default=None,
                        help="output path (default: corpus-<order>.g6)")
    args = parser.parse_args(argv)

    out = args.out or Path(f"corpus-{args.order}.g6")
    filt = EnumFilter(order=args.order, min_degree=args.min_degree,
                      max_degree=args.max_degree)
    start = time.perf_counter()
    count = 0
    with open(out, "w", encoding="utf-8") as fh:
        for g in enumerate_graphs(filt):
            fh.write(graph6_encode(g))
            fh.write("\n")
            count += 1
    print(f"{count} graphs -> {out}  ({time.perf_counter() - start:.1f}s)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
