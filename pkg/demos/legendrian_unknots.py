"""Legendrian unknots in the tight 3-sphere from their fronts.

Stabilizations add zigzags; each one lowers tb by one and moves r by one.
The invariants alone pin down the knot, and the Bennequin bound rules out
everything above the tb = -1 line.

    python demos/legendrian_unknots.py
"""

from tightcount import (
    UnknotForm,
    bennequin_check,
    front_r,
    front_tb,
    stabilize,
    surgery_rotation_tuples,
    unknot_from_invariants,
)

u = UnknotForm()
for sign in "++-":
    u = stabilize(u, sign)
    f = u.front()
    print(f"after S{sign}: {f.up_cusps} up / {f.down_cusps} down cusps -> tb={front_tb(f)} r={front_r(f)}")

print("\nrealizable (tb, r) with tb >= -4:")
for tb in range(0, -5, -1):
    row = []
    for r in range(-4, 5):
        form = unknot_from_invariants(tb, r)
        row.append(" . " if form is None else f"{form.k_plus},{form.k_minus}")
    allowed = [r for r in range(-4, 5) if bennequin_check(tb, r, 1)]
    print(f"  tb={tb:>2}: {' '.join(row)}   Bennequin allows r in {allowed or 'nothing'}")

# Legendrian surgery on a chain of unknots gives L(p, q); the rotation
# numbers of the chain label its tight structures
for p, q in [(5, 2), (14, 5)]:
    tuples = surgery_rotation_tuples(p, q)
    print(f"\nL({p},{q}): {len(tuples)} rotation choices, e.g. {tuples[:3]}")
