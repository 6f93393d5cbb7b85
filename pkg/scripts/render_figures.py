#!/usr/bin/env python3
"""Render the standard cobweb matrix figures.

Emits, for the 16x16 naturals window (levels 1,2,3,4,5,1) and the 16x16
Fibonacci window (levels 1,1,1,2,3,5,3):

  * the Hasse adjacency grid A,
  * the zeta grid (reflexive-transitive closure),
  * the Boolean square of A (next-but-one level blocks),
  * a DOT drawing of the Hasse digraph.

Files go to --out-dir (default: ./figures), one file per artifact, in the
same space-separated 0/1 text format the CLI uses.
"""

import argparse
from pathlib import Path

from cobwebs import boolmat
from cobwebs.cobweb import build_cobweb, hasse_matrix, zeta_matrix
from cobwebs.digraph import to_dot

WINDOWS = {
    "naturals_16": [1, 2, 3, 4, 5, 1],
    "fibonacci_16": [1, 1, 1, 2, 3, 5, 3],
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    args = parser.parse_args()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    for name, sizes in WINDOWS.items():
        p = build_cobweb(sizes)
        a = hasse_matrix(p)
        artifacts = {
            f"hasse_{name}.txt": boolmat.to_text(a),
            f"zeta_{name}.txt": boolmat.to_text(zeta_matrix(p)),
            f"hasse_sq_{name}.txt": boolmat.to_text(boolmat.bool_product(a, a)),
            f"hasse_{name}.dot": to_dot(p.hasse),
        }
        for filename, text in artifacts.items():
            (out_dir / filename).write_text(text, encoding="utf-8")
            print(f"wrote {out_dir / filename}")


if __name__ == "__main__":
    main()
