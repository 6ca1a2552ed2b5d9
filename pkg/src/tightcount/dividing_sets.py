"""Combinatorial dividing sets on disks, annuli and tori.

A dividing set on a convex disk with Legendrian boundary ``tb = -n`` is a
non-crossing perfect matching of ``2n`` boundary points labelled
``0, ..., 2n-1`` counterclockwise.  It is stored as the involution
``match`` with ``match[i]`` the other end of the arc through ``i``; the
canonical text form is that sequence.

Bypass moves use arcs of attachment running parallel to the boundary past
three consecutive endpoints ``i, i+1, i+2`` (mod ``2n``).  Cutting the three
strands along the arc leaves an outer stub (towards the boundary point) and
an inner stub (towards the rest of the arc) for each strand.  The bypass
reconnects them as follows, writing ``a, b, c`` for the three positions:

* ``front``: outer ``a``-``b``, inner ``b``-``c``, outer ``c`` to inner ``a``.
* ``back``:  outer ``b``-``c``, inner ``a``-``b``, outer ``a`` to inner ``c``.

When an inner pair is already joined by an arc of the diagram the reconnection
closes off a homotopically trivial circle; that is the disallowed bypass.
When the reconnection reproduces the original diagram the move is trivial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Literal, Sequence

from .farey import Slope, as_slope, bypass_slope, make_slope

__all__ = [
    "Side",
    "DiskDiagram",
    "DisallowedBypass",
    "enumerate_disk_diagrams",
    "disk_matchings",
    "boundary_parallel_chords",
    "bypass_rewire",
    "disk_bypass_move",
    "AnnulusDiagram",
    "annulus_boundary_parallel",
    "TorusDividingSet",
    "torus_attach_bypass",
    "twisting_from_intersections",
    "std_nbhd_slope",
    "is_noncrossing",
]

Side = Literal["front", "back"]
SIDES: tuple[Side, Side] = ("front", "back")


class DisallowedBypass(ValueError):
    """The bypass would create a homotopically trivial dividing circle."""


def is_noncrossing(match: Sequence[int]) -> bool:
    """Check a fixed-point-free involution for crossing chords.

    Reading positions in order, chords must close in stack order.
    """
    stack = []
    for i, j in enumerate(match):
        if j > i:
            stack.append(i)
        elif not stack or stack.pop() != j:
            return False
    return not stack


def _check_matching(match: Sequence[int]) -> None:
    size = len(match)
    if size == 0 or size % 2:
        raise ValueError(f"a disk diagram needs a positive even number of endpoints, got {size}")
    for i, j in enumerate(match):
        if not 0 <= j < size:
            raise ValueError(f"endpoint {j} out of range")
        if j == i:
            raise ValueError(f"endpoint {i} is matched to itself")
        if match[j] != i:
            raise ValueError(f"match is not an involution at {i}")
    if not is_noncrossing(match):
        raise ValueError(f"chords cross: {list(match)}")


@dataclass(frozen=True)
class DiskDiagram:
    """Non-crossing matching of ``2n`` points on the boundary of a disk."""

    match: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "match", tuple(int(j) for j in self.match))
        _check_matching(self.match)

    @classmethod
    def _trusted(cls, match: tuple[int, ...]) -> "DiskDiagram":
        obj = object.__new__(cls)
        object.__setattr__(obj, "match", match)
        return obj

    @classmethod
    def from_chords(cls, chords: Iterable[tuple[int, int]]) -> "DiskDiagram":
        chords = list(chords)
        match = [-1] * (2 * len(chords))
        for a, b in chords:
            if not (0 <= a < len(match) and 0 <= b < len(match)):
                raise ValueError(f"chord ({a}, {b}) out of range")
            if match[a] != -1 or match[b] != -1:
                raise ValueError(f"endpoint reused in chord ({a}, {b})")
            match[a], match[b] = b, a
        return cls(tuple(match))

    @classmethod
    def parse(cls, text: str) -> "DiskDiagram":
        """Inverse of :meth:`encode`; commas are accepted as separators."""
        return cls(tuple(int(t) for t in text.replace(",", " ").split()))

    @property
    def n(self) -> int:
        return len(self.match) // 2

    @property
    def size(self) -> int:
        return len(self.match)

    def chords(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.match) if i < j]

    def encode(self) -> str:
        return " ".join(str(j) for j in self.match)

    def __str__(self) -> str:
        return "{" + ", ".join(f"({a},{b})" for a, b in self.chords()) + "}"


def _matchings(points: tuple[int, ...]):
    if not points:
        yield {}
        return
    first = points[0]
    for k in range(1, len(points), 2):
        for inside in _matchings(points[1:k]):
            for outside in _matchings(points[k + 1:]):
                m = {first: points[k], points[k]: first}
                m.update(inside)
                m.update(outside)
                yield m


@lru_cache(maxsize=None)
def disk_matchings(n: int) -> tuple[tuple[int, ...], ...]:
    """All non-crossing matchings on ``2n`` points as raw tuples, sorted."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    size = 2 * n
    out = [tuple(m[i] for i in range(size)) for m in _matchings(tuple(range(size)))]
    out.sort()
    return tuple(out)


def enumerate_disk_diagrams(n: int) -> list[DiskDiagram]:
    """Every dividing set without closed curves on a disk with ``tb = -n``.

    Ordered lexicographically by the canonical encoding; there are
    ``Catalan(n)`` of them.
    """
    return [DiskDiagram._trusted(m) for m in disk_matchings(n)]


def boundary_parallel_chords(d: DiskDiagram) -> list[tuple[int, int]]:
    """Chords joining cyclically adjacent endpoints (outermost arcs)."""
    size = d.size
    out = set()
    for i in range(size):
        j = (i + 1) % size
        if d.match[i] == j:
            out.add((min(i, j), max(i, j)))
    return sorted(out)


# local reconnection per side, as (node, node) pairs; nodes are ("o"|"i", k)
# with k in {0, 1, 2} the offset inside the attachment triple
_RECONNECT = {
    "front": ((("o", 0), ("o", 1)), (("i", 1), ("i", 2)), (("o", 2), ("i", 0))),
    "back": ((("o", 1), ("o", 2)), (("i", 0), ("i", 1)), (("o", 0), ("i", 2))),
}


def bypass_rewire(match: Sequence[int], i: int, side: Side) -> tuple[tuple[int, ...], int]:
    """Apply a bypass along the triple starting at ``i``.

    Returns the new matching and the number of closed circles created (``0``
    for an allowed move).  The matching is not re-validated.
    """
    size = len(match)
    if size < 4:
        raise ValueError("a bypass needs at least two chords (n >= 2)")
    try:
        pairs = _RECONNECT[side]
    except KeyError:
        raise ValueError(f"side must be 'front' or 'back', got {side!r}") from None
    triple = (i % size, (i + 1) % size, (i + 2) % size)
    offset = {pos: k for k, pos in enumerate(triple)}
    local = {}
    for u, v in pairs:
        local[u] = v
        local[v] = u
    seen_inner = set()

    def follow(node):
        # node is an inner stub just entered along its chord
        while True:
            seen_inner.add(node)
            node = local[node]
            if node[0] == "o":
                return triple[node[1]]
            seen_inner.add(node)
            far = match[triple[node[1]]]
            if far not in offset:
                return far
            node = ("i", offset[far])

    new = list(match)
    # every path has an end among the triple or the outside partners of it
    starts = list(triple) + [match[t] for t in triple if match[t] not in offset]
    for pos in starts:
        if pos in offset:
            nxt = local[("o", offset[pos])]
            if nxt[0] == "o":
                end = triple[nxt[1]]
            else:
                seen_inner.add(nxt)
                far = match[triple[nxt[1]]]
                end = far if far not in offset else follow(("i", offset[far]))
        else:
            end = follow(("i", offset[match[pos]]))
        new[pos] = end
        new[end] = pos
    closed = 0
    remaining = {("i", k) for k in range(3)} - seen_inner
    while remaining:
        start = node = remaining.pop()
        closed += 1
        while True:
            node = local[node]
            remaining.discard(node)
            node = ("i", offset[match[triple[node[1]]]])
            if node == start:
                break
            remaining.discard(node)
    return tuple(new), closed


def disk_bypass_move(d: DiskDiagram, i: int, side: Side) -> DiskDiagram:
    """Dividing set after a bypass attached along endpoints ``i, i+1, i+2``.

    Raises :class:`DisallowedBypass` when the move would close off a trivial
    circle, and ``ValueError`` for ``n = 1``.

    >>> d = DiskDiagram((3, 2, 1, 0))
    >>> disk_bypass_move(d, 0, "back") == d   # trivial move
    True
    """
    if d.n < 2:
        raise ValueError("a bypass needs three distinct endpoints and n >= 2")
    new, closed = bypass_rewire(d.match, i, side)
    if closed:
        raise DisallowedBypass(f"bypass at {i} from the {side} closes a trivial circle")
    return DiskDiagram(new)


Endpoint = tuple[int, int]


@dataclass(frozen=True)
class AnnulusDiagram:
    """Dividing arcs on the annulus ``S^1 x [0, 1]``.

    Endpoints are ``(side, k)`` with ``0 <= k < m_side``, numbered in the same
    rotational direction on both boundary circles.  The annulus is assumed
    cut open along a radial segment that misses the dividing set (one always
    exists), between endpoint ``m-1`` and endpoint ``0`` on each side.  The
    cut annulus is a disk whose boundary reads side ``0`` forwards and then
    side ``1`` backwards; the arcs must not cross there.  Closed curves parallel
    to the core are only counted.
    """

    m0: int
    m1: int
    arcs: tuple[tuple[Endpoint, Endpoint], ...]
    closed_curves: int = 0

    def __post_init__(self) -> None:
        arcs = tuple(sorted(tuple(sorted((tuple(a), tuple(b)))) for a, b in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        if self.m0 < 0 or self.m1 < 0 or self.m0 % 2 or self.m1 % 2:
            raise ValueError("endpoint counts must be non-negative and even")
        if self.closed_curves < 0:
            raise ValueError("closed_curves must be non-negative")
        seen = set()
        for arc in arcs:
            for side, k in arc:
                bound = self.m0 if side == 0 else self.m1 if side == 1 else -1
                if not 0 <= k < bound:
                    raise ValueError(f"endpoint {(side, k)} out of range")
                if (side, k) in seen:
                    raise ValueError(f"endpoint {(side, k)} used twice")
                seen.add((side, k))
        if len(seen) != self.m0 + self.m1:
            raise ValueError("every endpoint must lie on exactly one arc")
        if not is_noncrossing(self._cut_match()):
            raise ValueError("arcs cross")

    def _position(self, e: Endpoint) -> int:
        side, k = e
        return k if side == 0 else self.m0 + (self.m1 - 1 - k)

    def _cut_match(self) -> list[int]:
        match = [0] * (self.m0 + self.m1)
        for a, b in self.arcs:
            pa, pb = self._position(a), self._position(b)
            match[pa], match[pb] = pb, pa
        return match

    def crossing_arcs(self) -> list[tuple[Endpoint, Endpoint]]:
        return [arc for arc in self.arcs if arc[0][0] != arc[1][0]]

    def twisting(self, side: int) -> int:
        """Twisting of the boundary circle relative to the annulus framing."""
        return twisting_from_intersections(self.m0 if side == 0 else self.m1)


def annulus_boundary_parallel(a: AnnulusDiagram, side: int) -> list[tuple[Endpoint, Endpoint]]:
    """Outermost arcs with both ends on boundary circle ``side``."""
    if side not in (0, 1):
        raise ValueError(f"side must be 0 or 1, got {side}")
    return [
        arc
        for arc in a.arcs
        if arc[0][0] == side and arc[1][0] == side and arc[1][1] - arc[0][1] == 1
    ]


@dataclass(frozen=True)
class TorusDividingSet:
    """``count`` parallel essential dividing curves of slope ``slope``."""

    count: int
    slope: Slope = field(default_factory=lambda: make_slope(-1))

    def __post_init__(self) -> None:
        if self.count < 2 or self.count % 2:
            raise ValueError(f"#Γ on a torus is a positive even number, got {self.count}")
        object.__setattr__(self, "slope", as_slope(self.slope))


def torus_attach_bypass(t: TorusDividingSet, attach_slope: Slope) -> TorusDividingSet:
    """Attach a bypass along a curve of slope ``attach_slope``.

    With more than two curves the count drops by two and the slope is kept;
    with exactly two the slope moves along the Farey tessellation.
    """
    attach_slope = as_slope(attach_slope)
    if attach_slope == t.slope:
        raise ValueError("the attaching curve must not be parallel to the dividing curves")
    if t.count > 2:
        return TorusDividingSet(t.count - 2, t.slope)
    return TorusDividingSet(2, bypass_slope(t.slope, attach_slope))


def twisting_from_intersections(intersection_count: int) -> int:
    """Twisting number ``-#(C ∩ Γ)/2`` of a Legendrian curve on a convex surface."""
    if intersection_count < 0 or intersection_count % 2:
        raise ValueError(f"intersection count must be even and non-negative, got {intersection_count}")
    return -(intersection_count // 2)


def std_nbhd_slope(n: int) -> Slope:
    """Boundary slope ``-1/n`` of a standard neighborhood of a curve with twisting ``-n``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return make_slope(-1, n)
