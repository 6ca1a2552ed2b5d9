"""Tight structures on lens spaces, counted two ways.

L(p, q) is two solid tori glued by a matrix built from p and q.  The closed
form multiplies |r_i + 1| over the continued fraction of -p/q; the
surgery picture realizes exactly that many structures, one per choice of
rotation numbers.

    python demos/lens_spaces.py 12
"""

import sys
from fractions import Fraction
from math import gcd

from tightcount import cf_expand, lens_count_formula, lens_gluing_matrix, peel_path, surgery_rotation_tuples


def main(p_max: int = 12) -> None:
    print(f"{'L(p,q)':>9} {'coefficients':<22} {'count':>5} {'tuples':>6}  gluing")
    for p in range(2, p_max + 1):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            count = lens_count_formula(p, q)
            tuples = len(surgery_rotation_tuples(p, q))
            (a, b), (c, d) = lens_gluing_matrix(p, q)
            # the second solid torus sees the first peeling step as its slope
            assert peel_path(p, q)[1].as_fraction() == Fraction(d, b)
            coeffs = str(cf_expand(p, q).coeffs)
            print(f"{f'L({p},{q})':>9} {coeffs:<22} {count:>5} {tuples:>6}  [[{a},{b}],[{c},{d}]]")


if __name__ == "__main__":
    main(*map(int, sys.argv[1:2]))
