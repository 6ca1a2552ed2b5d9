"""Classical invariants of Legendrian knots read off front projections.

Fronts are described by their feature counts only: cusps by direction and
crossings by sign.  Legendrian unknots in the tight ``S^3`` are the
stabilizations ``S_+^{k+} S_-^{k-}(L_0)`` of the unknot ``L_0`` with
``tb = -1`` and ``r = 0``, so an unknot is stored as the pair ``(k+, k-)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal, Optional

from .farey import cf_expand

__all__ = [
    "FrontCounts",
    "UnknotForm",
    "front_tb",
    "front_r",
    "stabilize",
    "unknot_from_invariants",
    "bennequin_check",
    "rotation_menu",
    "surgery_rotation_tuples",
]

Sign = Literal["+", "-"]


@dataclass(frozen=True)
class FrontCounts:
    up_cusps: int
    down_cusps: int
    pos_crossings: int = 0
    neg_crossings: int = 0

    def __post_init__(self) -> None:
        for name in ("up_cusps", "down_cusps", "pos_crossings", "neg_crossings"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        cusps = self.up_cusps + self.down_cusps
        if cusps < 2 or cusps % 2:
            raise ValueError(f"a closed front has an even, positive number of cusps, got {cusps}")


def front_tb(f: FrontCounts) -> int:
    """Thurston-Bennequin invariant: ``-cusps/2 + positive - negative crossings``."""
    return -(f.up_cusps + f.down_cusps) // 2 + f.pos_crossings - f.neg_crossings


def front_r(f: FrontCounts) -> int:
    """Rotation number ``(down cusps - up cusps) / 2``."""
    diff = f.down_cusps - f.up_cusps
    if diff % 2:
        raise ValueError("down_cusps - up_cusps is odd: not a closed oriented front")
    return diff // 2


@dataclass(frozen=True)
class UnknotForm:
    """The unknot ``S_+^{k_plus} S_-^{k_minus}(L_0)``."""

    k_plus: int = 0
    k_minus: int = 0

    def __post_init__(self) -> None:
        if self.k_plus < 0 or self.k_minus < 0:
            raise ValueError("stabilization counts must be non-negative")

    @property
    def tb(self) -> int:
        return -1 - self.k_plus - self.k_minus

    @property
    def r(self) -> int:
        return self.k_plus - self.k_minus

    def front(self) -> FrontCounts:
        # L_0 has one cusp of each kind; each S_+ adds two down cusps, each S_- two up
        return FrontCounts(
            up_cusps=1 + 2 * self.k_minus,
            down_cusps=1 + 2 * self.k_plus,
        )


def stabilize(u: UnknotForm, sign: Sign) -> UnknotForm:
    if sign == "+":
        return UnknotForm(u.k_plus + 1, u.k_minus)
    if sign == "-":
        return UnknotForm(u.k_plus, u.k_minus + 1)
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def unknot_from_invariants(tb: int, r: int) -> Optional[UnknotForm]:
    """The Legendrian unknot with invariants ``(tb, r)``, or ``None``.

    ``None`` means no Legendrian unknot in the tight ``S^3`` has them.

    >>> unknot_from_invariants(-4, 1)
    UnknotForm(k_plus=2, k_minus=1)
    >>> unknot_from_invariants(0, 0) is None
    True
    """
    total = -1 - tb
    if total < 0 or (total + r) % 2:
        return None
    k_plus, k_minus = (total + r) // 2, (total - r) // 2
    if k_plus < 0 or k_minus < 0:
        return None
    return UnknotForm(k_plus, k_minus)


def bennequin_check(tb: int, r: int, chi: int) -> bool:
    """Whether ``tb + |r| <= -chi`` for a Seifert surface of Euler characteristic ``chi``."""
    if chi > 1:
        raise ValueError(f"a Seifert surface has chi <= 1, got {chi}")
    return tb + r <= -chi and tb - r <= -chi


def rotation_menu(coefficient: int) -> list[int]:
    """Rotation numbers ``r+2, r+4, ..., -(r+2)`` of unknots with ``tb = r + 1``."""
    if coefficient > -2:
        raise ValueError("continued fraction coefficients are <= -2")
    return list(range(coefficient + 2, -(coefficient + 2) + 1, 2))


def surgery_rotation_tuples(p: int, q: int) -> list[tuple[int, ...]]:
    """Rotation-number choices for the Legendrian surgery link of ``L(p, q)``.

    One menu per continued fraction coefficient of ``-p/q``; the result is
    their Cartesian product, in lexicographic order.
    """
    menus = [rotation_menu(r) for r in cf_expand(p, q)]
    return list(itertools.product(*menus))
