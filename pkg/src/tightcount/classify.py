"""Closed-form counts of tight contact structures on solid tori and lens spaces.

Peeling a solid torus with boundary slope ``-p/q`` walks the Farey
tessellation to ``-1`` one basic slice at a time.  Slices whose slopes have
continued fractions of the same length form a block; inside a block only the
number of positive slices matters, since neighbouring slices of opposite sign
can be shuffled.  A block of ``e`` slices therefore contributes ``e + 1``
choices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .farey import Slope, _check_pq, cf_expand, peel_coefficients, peel_path

__all__ = [
    "BlockDecomposition",
    "TightDecoration",
    "HalfEulerClass",
    "block_decompose",
    "solid_torus_count_formula",
    "lens_count_formula",
    "enumerate_tight_decorations",
    "half_euler",
    "slope_vector",
    "decoration_half_euler",
    "lens_gluing_matrix",
]


@dataclass(frozen=True)
class BlockDecomposition:
    path: tuple[Slope, ...]
    block_edge_counts: tuple[int, ...]
    # (start, stop) edge indices into the path, one per block
    block_spans: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if sum(self.block_edge_counts) != len(self.path) - 1:
            raise ValueError("block edge counts must add up to the number of path edges")


def block_decompose(p: int, q: int) -> BlockDecomposition:
    """Group the peeling path into continued fraction blocks.

    An edge belongs to the block of its starting slope's continued fraction
    length.

    >>> block_decompose(14, 5).block_edge_counts
    (4, 1)
    """
    coeffs = peel_coefficients(p, q)
    path = tuple(peel_path(p, q))
    counts: list[int] = []
    spans: list[tuple[int, int]] = []
    prev_len = None
    for edge, c in enumerate(coeffs[:-1]):
        if len(c) != prev_len:
            counts.append(0)
            spans.append((edge, edge))
            prev_len = len(c)
        counts[-1] += 1
        spans[-1] = (spans[-1][0], edge + 1)
    return BlockDecomposition(path, tuple(counts), tuple(spans))


def solid_torus_count_formula(p: int, q: int) -> int:
    """``|(r_0+1)...(r_{k-1}+1) r_k|`` for ``-p/q = (r_0, ..., r_k)``; ``1`` for ``-1``."""
    _check_pq(p, q)
    if p == q == 1:
        return 1
    r = cf_expand(p, q).coeffs
    return abs(prod(x + 1 for x in r[:-1]) * r[-1])


def lens_count_formula(p: int, q: int) -> int:
    """``|(r_0+1)(r_1+1)...(r_k+1)|`` tight structures on ``L(p, q)``."""
    return abs(prod(x + 1 for x in cf_expand(p, q).coeffs))


@dataclass(frozen=True)
class TightDecoration:
    """Number of positive basic slices in each block."""

    plus_counts: tuple[int, ...]


def enumerate_tight_decorations(p: int, q: int) -> list[TightDecoration]:
    blocks = block_decompose(p, q).block_edge_counts
    return [TightDecoration(tuple(m)) for m in itertools.product(*(range(e + 1) for e in blocks))]


@dataclass(frozen=True)
class HalfEulerClass:
    vector: tuple[int, int]

    def __neg__(self) -> "HalfEulerClass":
        return HalfEulerClass((-self.vector[0], -self.vector[1]))

    def __add__(self, other: "HalfEulerClass") -> "HalfEulerClass":
        return HalfEulerClass((self.vector[0] + other.vector[0], self.vector[1] + other.vector[1]))


def slope_vector(s: Slope) -> tuple[int, int]:
    """Shortest vector ``(b, a)`` of ``a/b`` with ``b > 0``; ``(0, 1)`` for ``∞``."""
    return s.vector()


def half_euler(path: Sequence[Slope], signs: Sequence[str]) -> HalfEulerClass:
    """Relative half-Euler class of a stack of basic slices.

    Slice ``i`` runs from ``path[i]`` to ``path[i+1]`` and contributes
    ``±(v(path[i+1]) - v(path[i]))``.  The pairing of ``+`` with one of the
    two summands is a convention; only the pair is intrinsic.
    """
    if len(signs) != len(path) - 1:
        raise ValueError(f"need {len(path) - 1} signs for {len(path)} slopes, got {len(signs)}")
    x = y = 0
    for s0, s1, sign in zip(path, path[1:], signs):
        if sign not in ("+", "-"):
            raise ValueError(f"signs are '+' or '-', got {sign!r}")
        (a0, b0), (a1, b1) = slope_vector(s0), slope_vector(s1)
        k = 1 if sign == "+" else -1
        x += k * (a1 - a0)
        y += k * (b1 - b0)
    return HalfEulerClass((x, y))


def decoration_half_euler(p: int, q: int, decoration: TightDecoration) -> HalfEulerClass:
    """Half-Euler class of any shuffle realizing ``decoration``.

    Positive slices are placed first in each block; shuffling does not change
    the sum.
    """
    blocks = block_decompose(p, q)
    if len(decoration.plus_counts) != len(blocks.block_edge_counts):
        raise ValueError("decoration does not match the block structure")
    signs: list[str] = []
    for m, e in zip(decoration.plus_counts, blocks.block_edge_counts):
        if not 0 <= m <= e:
            raise ValueError(f"plus count {m} outside 0..{e}")
        signs += ["+"] * m + ["-"] * (e - m)
    return half_euler(blocks.path, signs)


def lens_gluing_matrix(p: int, q: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Gluing map ``((-q, q'), (p, -p'))`` of ``L(p, q)``, with ``p q' - q p' = 1``.

    ``0 < q' <= q`` and ``0 < p' < p``, so the determinant is ``-1``.  The
    slope ``-p'/q'`` is the first step of the peeling path of ``-p/q``.
    """
    _check_pq(p, q)
    if p <= q:
        raise ValueError(f"lens spaces need p > q, got ({p}, {q})")
    q_prime = pow(p, -1, q) if q > 1 else 1
    if q_prime == 0:
        q_prime = q
    p_prime = (p * q_prime - 1) // q
    assert p * q_prime - q * p_prime == 1
    return ((-q, q_prime), (p, -p_prime))

