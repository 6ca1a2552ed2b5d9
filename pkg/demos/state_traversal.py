"""Count tight structures on a solid torus by brute force.

Every dividing set on the meridian disk is a candidate.  Cutting along the
disk and rounding corners gives a sphere; candidates whose sphere carries
more than one circle are overtwisted.  Bypasses that do not add circles
connect candidates, and each component made only of single-circle
candidates is one tight structure.

    python demos/state_traversal.py 7 3 [graph.dot]
"""

import sys
import time

from tightcount import SolidTorusProblem, build_state_graph, export_graph, solid_torus_count_formula


def main(p: int = 7, q: int = 3, dot_path: str = "") -> None:
    prob = SolidTorusProblem(p, q)
    t0 = time.perf_counter()
    g = build_state_graph(prob)
    dt = time.perf_counter() - t0
    print(f"slope -{p}/{q}: {len(g.vertices)} disk dividing sets, {sum(g.allowable)} give one circle")
    print(f"{len(g.edges)} bypass transitions, graph built in {dt:.2f}s")
    for label in g.tight_components:
        members = g.component_members(label)
        print(f"  tight component {label}: {len(members)} states, e.g. {g.vertices[members[0]]}")
    print(f"traversal {g.tight_count}, closed form {solid_torus_count_formula(p, q)}")
    if dot_path:
        with open(dot_path, "w") as fh:
            fh.write(export_graph(g, "dot"))
        print(f"wrote {dot_path}")


if __name__ == "__main__":
    args = sys.argv[1:]
    main(*map(int, args[:2]), *args[2:3])
