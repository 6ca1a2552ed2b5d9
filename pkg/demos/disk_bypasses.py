"""Bypass moves on dividing sets of a disk.

A disk whose Legendrian boundary has tb = -n carries n non-crossing
dividing arcs.  Attaching a bypass along three consecutive endpoints either
changes the arcs, leaves them alone (trivial) or would close off a circle
(disallowed, which never happens in a tight manifold).

    python demos/disk_bypasses.py 4
"""

import sys
from collections import Counter

from tightcount import DisallowedBypass, disk_bypass_move, enumerate_disk_diagrams
from tightcount.dividing_sets import SIDES, boundary_parallel_chords


def main(n: int = 4) -> None:
    diagrams = enumerate_disk_diagrams(n)
    print(f"{len(diagrams)} dividing sets with n = {n}")
    outcome = Counter()
    for d in diagrams:
        for i in range(2 * n):
            for side in SIDES:
                try:
                    new = disk_bypass_move(d, i, side)
                except DisallowedBypass:
                    outcome["disallowed", side] += 1
                    continue
                outcome["trivial" if new == d else "changes", side] += 1
    for kind in ("changes", "trivial", "disallowed"):
        print(f"  {kind:>10}: " + ", ".join(f"{side} {outcome[kind, side]}" for side in SIDES))

    d = diagrams[len(diagrams) // 2]
    print(f"\nstart from {d}  (outermost arcs {boundary_parallel_chords(d)})")
    for i in range(2 * n):
        cells = []
        for side in SIDES:
            try:
                cells.append(f"{side}: {disk_bypass_move(d, i, side)}")
            except DisallowedBypass:
                cells.append(f"{side}: disallowed")
        print(f"  triple {i}:  " + "   ".join(cells))


if __name__ == "__main__":
    main(*map(int, sys.argv[1:2]))
