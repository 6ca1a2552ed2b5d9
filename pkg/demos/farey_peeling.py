"""Walk a solid torus boundary slope down to -1 through the Farey graph.

Each step is a bypass attached along the meridian; the number of steps and
how they group by continued fraction length decide how many tight
structures the solid torus carries.

    python demos/farey_peeling.py 14 5
"""

import sys

from tightcount import (
    block_decompose,
    bypass_slope,
    cf_expand,
    farey_det,
    make_slope,
    solid_torus_count_formula,
)


def main(p: int = 14, q: int = 5) -> None:
    print(f"boundary slope -{p}/{q}, continued fraction {cf_expand(p, q).coeffs}")
    meridian = make_slope(0)
    s = make_slope(-p, q)
    step = 0
    while s != make_slope(-1):
        nxt = bypass_slope(s, meridian)
        step += 1
        # consecutive slopes always span a unit-area parallelogram
        print(f"  bypass {step}: {s} -> {nxt}   det {farey_det(s, nxt)}")
        s = nxt

    blocks = block_decompose(p, q)
    print(f"slices per block: {list(blocks.block_edge_counts)}")
    # within a block only the number of positive slices matters
    shape = " x ".join(str(e + 1) for e in blocks.block_edge_counts)
    print(f"tight structures: {shape} = {solid_torus_count_formula(p, q)}")


if __name__ == "__main__":
    main(*map(int, sys.argv[1:3]))
