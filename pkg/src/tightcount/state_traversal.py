"""State traversal for tight contact structures on a solid torus.

The boundary torus carries two dividing curves of slope ``-p/q`` (meridian
slope ``0``).  A meridian disk ``D`` with Legendrian boundary meets them in
``2p`` points, so its dividing set is one of the ``Catalan(p)`` non-crossing
matchings.  Cutting along ``D`` leaves a ball whose boundary sphere is made
of two copies ``D+`` and ``D-`` of the disk and an annulus carrying ``2p``
arcs from one copy to the other.

Index conventions on the sphere (positions measured along ``∂D`` in units of
one endpoint, with annulus endpoints sitting halfway between disk endpoints):

* the annulus arc leaving ``∂D+`` at position ``k + 1/2`` reaches ``∂D-`` at
  position ``k + 1/2 + 2q`` (the holonomy of slope ``-p/q`` curves);
* rounding the edge ``∂D+`` joins disk endpoint ``i`` to the annulus
  endpoint at ``i - 1/2``; rounding ``∂D-`` joins the annulus endpoint at
  ``k + 1/2`` to disk endpoint ``k``, i.e. the opposite shift.

Altogether disk endpoint ``i`` on ``D+`` is joined to disk endpoint
``i + 2q - 1`` (mod ``2p``) on ``D-``.

A configuration is potentially allowable when the rounded sphere carries a
single dividing circle.  A bypass from inside the ball onto ``D+`` (``front``)
or ``D-`` (``back``) changes only that copy; it exists when the number of
circles on the sphere does not grow, and it then moves the state to the new
disk dividing set.  Tight structures correspond to connected components of
the transition graph made only of potentially allowable states.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Literal, Optional, Sequence, Union

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .dividing_sets import SIDES, DiskDiagram, Side, bypass_rewire, disk_matchings

__all__ = [
    "SolidTorusProblem",
    "SphereAssembly",
    "StateGraph",
    "Edge",
    "assemble_sphere",
    "sphere_components",
    "is_potentially_allowable",
    "transition_exists",
    "build_state_graph",
    "tight_count_traversal",
    "export_graph",
    "GRAPH_SCHEMA_VERSION",
]

log = logging.getLogger(__name__)

GRAPH_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SolidTorusProblem:
    """Boundary condition ``#Γ = 2``, slope ``-p/q`` with ``0 < q <= p``."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1 or self.q > self.p:
            raise ValueError(f"need 0 < q <= p, got p={self.p}, q={self.q}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"p={self.p} and q={self.q} are not coprime")

    @property
    def size(self) -> int:
        """Number of points where ``∂D`` meets the dividing set."""
        return 2 * self.p

    @property
    def gluing_shift(self) -> int:
        """Disk endpoint ``i`` on ``D+`` is joined to ``i + shift`` on ``D-``."""
        return (2 * self.q - 1) % self.size


@dataclass(frozen=True)
class SphereAssembly:
    p: int
    q: int
    plus_diagram: DiskDiagram
    minus_diagram: DiskDiagram
    component_count: int


def sphere_components(
    plus: Sequence[int], minus: Sequence[int], prob: SolidTorusProblem, extra_circles: int = 0
) -> int:
    """Count dividing circles on the rounded sphere by tracing them.

    Nodes are the ``2p`` disk endpoints on each copy; every node has one disk
    arc and one annulus arc, so the curves are the connected components.
    """
    size = prob.size
    if len(plus) != size or len(minus) != size:
        raise ValueError(f"diagrams must have {size} endpoints")
    parent = list(range(2 * size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    shift = prob.gluing_shift
    for i in range(size):
        union(i, plus[i])
        union(size + i, size + minus[i])
        union(i, size + (i + shift) % size)
    return len({find(x) for x in range(2 * size)}) + extra_circles


def assemble_sphere(
    prob: SolidTorusProblem, d: DiskDiagram, minus: Optional[DiskDiagram] = None
) -> SphereAssembly:
    """Round the corners of the cut-open solid torus.

    ``d`` is placed on both copies unless ``minus`` gives the ``D-`` copy
    separately (as happens in the middle of a bypass attachment).
    """
    minus = d if minus is None else minus
    if d.n != prob.p or minus.n != prob.p:
        raise ValueError(f"disk diagrams must have n = p = {prob.p}")
    count = sphere_components(d.match, minus.match, prob)
    return SphereAssembly(prob.p, prob.q, d, minus, count)


def is_potentially_allowable(prob: SolidTorusProblem, d: DiskDiagram) -> bool:
    return assemble_sphere(prob, d).component_count == 1


def transition_exists(prob: SolidTorusProblem, d: DiskDiagram, i: int, side: Side) -> bool:
    """Whether a bypass from inside the ball along triple ``i`` exists.

    ``front`` attaches to ``D+`` and ``back`` to ``D-``; the criterion is that
    the number of dividing circles on the sphere does not increase.
    """
    if d.n != prob.p:
        raise ValueError(f"disk diagram must have n = p = {prob.p}")
    before = sphere_components(d.match, d.match, prob)
    new, closed = bypass_rewire(d.match, i, side)
    if side == "front":
        after = sphere_components(new, d.match, prob, closed)
    else:
        after = sphere_components(d.match, new, prob, closed)
    return after <= before


@dataclass(frozen=True)
class Edge:
    """Undirected transition; ``(triple, side)`` is the move that was found
    from vertex ``source`` (one of ``a``, ``b``)."""

    a: int
    b: int
    triple: int
    side: Side
    source: int


@dataclass(frozen=True)
class StateGraph:
    p: int
    q: int
    vertices: tuple[DiskDiagram, ...]
    allowable: tuple[bool, ...]
    edges: tuple[Edge, ...]
    component: tuple[int, ...]
    tight_components: tuple[int, ...]

    @property
    def tight_count(self) -> int:
        return len(self.tight_components)

    def component_members(self, label: int) -> list[int]:
        return [v for v, c in enumerate(self.component) if c == label]


# -- vectorized machinery ---------------------------------------------------


@lru_cache(maxsize=16)
def _move_table(p: int) -> tuple[np.ndarray, np.ndarray]:
    """Matchings of ``2p`` points and the result of every bypass on them.

    ``targets[v, i, s]`` is the vertex reached from ``v`` by the move at
    triple ``i`` from side ``SIDES[s]``, or ``-1`` when the move closes off a
    circle.  Independent of ``q``.
    """
    matchings = disk_matchings(p)
    size = 2 * p
    index = {m: k for k, m in enumerate(matchings)}
    table = np.array(matchings, dtype=np.int64).reshape(len(matchings), size)
    targets = np.full((len(matchings), size, 2), -1, dtype=np.int64)
    if p >= 2:
        for v, m in enumerate(matchings):
            for i in range(size):
                for s, side in enumerate(SIDES):
                    new, closed = bypass_rewire(m, i, side)
                    if not closed:
                        targets[v, i, s] = index[new]
    return table, targets


def _cycle_counts(perms: np.ndarray) -> np.ndarray:
    """Number of cycles of each row of ``perms``."""
    rows, size = perms.shape
    ident = np.broadcast_to(np.arange(size), perms.shape)
    mins = np.minimum(ident, perms)
    jump = perms
    span = 1
    while span < size:
        mins = np.minimum(mins, np.take_along_axis(mins, jump, axis=1))
        jump = np.take_along_axis(jump, jump, axis=1)
        span *= 2
    return (mins == ident).sum(axis=1)


def _sphere_counts(plus: np.ndarray, minus: np.ndarray, shift: int) -> np.ndarray:
    # following a circle from D+: disk arc, annulus, disk arc on D-, annulus back
    size = plus.shape[1]
    sigma = (np.arange(size) + shift) % size
    sigma_inv = (np.arange(size) - shift) % size
    step = sigma_inv[np.take_along_axis(minus, sigma[plus], axis=1)]
    # each circle is seen once in each direction
    return _cycle_counts(step) // 2


def build_state_graph(prob: SolidTorusProblem) -> StateGraph:
    """Bypass transition graph on all meridian-disk configurations.

    Transitions are evaluated from potentially allowable configurations only:
    a ball whose boundary carries more than one dividing circle holds no
    tight structure, so the existence criterion says nothing there.
    """
    table, targets = _move_table(prob.p)
    count = len(table)
    shift = prob.gluing_shift
    c0 = _sphere_counts(table, table, shift)
    allowable = c0 == 1

    edges: dict[tuple[int, int], Edge] = {}
    found: dict[tuple[int, int], set[int]] = {}
    sources = np.flatnonzero(allowable)
    if prob.p >= 2 and len(sources):
        for s, side in enumerate(SIDES):
            tgt = targets[sources, :, s]  # (sources, triples)
            src_idx, triple_idx = np.nonzero((tgt >= 0) & (tgt != sources[:, None]))
            if not len(src_idx):
                continue
            src = sources[src_idx]
            dst = tgt[src_idx, triple_idx]
            if side == "front":
                c1 = _sphere_counts(table[dst], table[src], shift)
            else:
                c1 = _sphere_counts(table[src], table[dst], shift)
            ok = c1 <= c0[src]
            for a, b, i in zip(src[ok].tolist(), dst[ok].tolist(), triple_idx[ok].tolist()):
                key = (min(a, b), max(a, b))
                found.setdefault(key, set()).add(a)
                if key not in edges:
                    edges[key] = Edge(key[0], key[1], i, side, a)
    one_way = sum(1 for k, srcs in found.items() if len(srcs) == 1 and allowable[k[0]] and allowable[k[1]])
    if one_way:
        log.debug("p=%d q=%d: %d transitions between allowable states found in one direction only",
                  prob.p, prob.q, one_way)

    edge_list = sorted(edges.values(), key=lambda e: (e.a, e.b))
    if edge_list:
        rows = np.array([e.a for e in edge_list])
        cols = np.array([e.b for e in edge_list])
        adj = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(count, count))
    else:
        adj = coo_matrix((count, count), dtype=np.int8)
    _, labels = connected_components(adj, directed=False)
    labels = _canonical_labels(labels)
    bad = set(labels[~allowable].tolist())
    tight = tuple(sorted(set(labels.tolist()) - bad))

    vertices = tuple(DiskDiagram._trusted(m) for m in disk_matchings(prob.p))
    return StateGraph(
        p=prob.p,
        q=prob.q,
        vertices=vertices,
        allowable=tuple(bool(x) for x in allowable),
        edges=tuple(edge_list),
        component=tuple(int(x) for x in labels),
        tight_components=tight,
    )


def _canonical_labels(labels: np.ndarray) -> np.ndarray:
    # number components by their smallest vertex
    order = {}
    out = np.empty_like(labels)
    for v, lab in enumerate(labels.tolist()):
        if lab not in order:
            order[lab] = len(order)
        out[v] = order[lab]
    return out


def tight_count_traversal(prob: SolidTorusProblem) -> int:
    """Number of tight structures found by traversing all states."""
    return build_state_graph(prob).tight_count


def export_graph(
    graph: Union[StateGraph, SolidTorusProblem], format: Literal["dot", "json"] = "json"
) -> str:
    """Serialize a state graph deterministically as DOT or JSON."""
    if format not in ("dot", "json"):
        raise ValueError(f"unknown graph format {format!r}; expected 'dot' or 'json'")
    if isinstance(graph, SolidTorusProblem):
        graph = build_state_graph(graph)
    if format == "json":
        payload = {
            "schema_version": GRAPH_SCHEMA_VERSION,
            "p": graph.p,
            "q": graph.q,
            "vertices": [
                {"id": v, "match": list(d.match), "allowable": graph.allowable[v]}
                for v, d in enumerate(graph.vertices)
            ],
            "edges": [
                {"a": e.a, "b": e.b, "triple": e.triple, "side": e.side} for e in graph.edges
            ],
            "tight_count": graph.tight_count,
        }
        return json.dumps(payload, indent=2) + "\n"
    tight = set(graph.tight_components)
    lines = [f'graph "solid_torus_p{graph.p}_q{graph.q}" {{']
    lines.append(f'  label="p={graph.p} q={graph.q} tight_count={graph.tight_count}";')
    for v, d in enumerate(graph.vertices):
        attrs = [f'label="{d.encode()}"']
        if not graph.allowable[v]:
            attrs.append("style=dashed")
        elif graph.component[v] in tight:
            attrs.append("style=filled")
        lines.append(f"  v{v} [{', '.join(attrs)}];")
    for e in graph.edges:
        lines.append(f'  v{e.a} -- v{e.b} [label="{e.triple}{e.side[0]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
