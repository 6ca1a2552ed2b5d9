"""Exact slope arithmetic on the Farey tessellation.

Slopes live on the circle ``Q ∪ {∞}``.  A slope ``a/b`` is stored through its
shortest integer vector, reduced, with the sign carried by the numerator; the
point at infinity is ``1/0``.  Two slopes are joined by a Farey edge when their
vectors form an integral basis of ``Z^2``.

The circle is walked in the *counterclockwise* direction by decreasing the
real value, passing from ``-∞`` through ``∞`` back to ``+∞``.  With that
orientation a bypass attached along the meridian (slope ``0``) moves
``-14/5`` to ``-11/4``, and repeated attachments walk the peeling path
``-14/5, -11/4, -8/3, -5/2, -2, -1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Union

__all__ = [
    "Slope",
    "ContinuedFraction",
    "INFINITY",
    "make_slope",
    "parse_slope",
    "farey_det",
    "is_farey_edge",
    "cf_expand",
    "cf_to_slope",
    "peel_path",
    "bypass_slope",
    "ccw_key",
]


@dataclass(frozen=True, order=False)
class Slope:
    """A reduced slope ``num/den``; ``den == 0`` only for ``∞ = 1/0``.

    Build instances with :func:`make_slope`; the constructor only checks that
    the pair is already normalized.
    """

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den < 0:
            raise ValueError(f"denominator must be non-negative, got {self.den}")
        if self.den == 0:
            if self.num != 1:
                raise ValueError("infinity must be stored as 1/0")
        elif gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not reduced")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.den == 0:
            raise ValueError("∞ has no rational value")
        return Fraction(self.num, self.den)

    def vector(self) -> tuple[int, int]:
        """Shortest integer vector ``(den, num)`` in the half-plane ``den > 0``.

        ``∞`` maps to ``(0, 1)``.
        """
        return (self.den, self.num)

    def __str__(self) -> str:
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Slope({self})"


INFINITY = Slope(1, 0)

SlopeLike = Union[Slope, int, Fraction, str]


def make_slope(num: int, den: int = 1) -> Slope:
    """Reduce ``num/den`` to a :class:`Slope`.

    >>> make_slope(-28, 10)
    Slope(-14/5)
    >>> make_slope(5, -2)
    Slope(-5/2)
    >>> make_slope(3, 0)
    Slope(inf)
    """
    num, den = int(num), int(den)
    if num == 0 and den == 0:
        raise ValueError("0/0 is not a slope")
    if den == 0:
        return INFINITY
    g = gcd(num, den)
    num, den = num // g, den // g
    if den < 0:
        num, den = -num, -den
    return Slope(num, den)


def as_slope(value: SlopeLike) -> Slope:
    if isinstance(value, Slope):
        return value
    if isinstance(value, str):
        return parse_slope(value)
    if isinstance(value, Fraction):
        return make_slope(value.numerator, value.denominator)
    return make_slope(value, 1)


def parse_slope(text: str) -> Slope:
    """Parse ``a/b``, ``-a/b``, an integer, or ``inf``."""
    t = text.strip().lower()
    if t in ("inf", "infinity", "∞", "1/0"):
        return INFINITY
    try:
        if "/" in t:
            a, b = t.split("/", 1)
            return make_slope(int(a), int(b))
        return make_slope(int(t), 1)
    except ValueError as exc:
        raise ValueError(f"cannot parse slope {text!r}") from exc


def farey_det(a: Slope, b: Slope) -> int:
    """``a.num * b.den - a.den * b.num`` on reduced representatives."""
    return a.num * b.den - a.den * b.num


def is_farey_edge(a: Slope, b: Slope) -> bool:
    return abs(farey_det(a, b)) == 1


@dataclass(frozen=True)
class ContinuedFraction:
    """Negative continued fraction ``r_0 - 1/(r_1 - 1/(... - 1/r_k))``.

    Every coefficient is at most ``-2``.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(r) for r in self.coeffs))
        if not self.coeffs:
            raise ValueError("a continued fraction needs at least one coefficient")
        bad = [r for r in self.coeffs if r > -2]
        if bad:
            raise ValueError(f"coefficients must be <= -2, got {list(self.coeffs)}")

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __str__(self) -> str:
        return "(" + ", ".join(str(r) for r in self.coeffs) + ")"


def _check_pq(p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise ValueError(f"p and q must be positive, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")


def _expand_raw(p: int, q: int) -> list[int]:
    # floor division keeps each remainder x in (r-1... r]; coefficients r <= -2
    # whenever -p/q < -1
    out = []
    num, den = -p, q
    while True:
        r = num // den
        out.append(r)
        rem = num - r * den  # 0 <= rem < den
        if rem == 0:
            return out
        # -p/q = r - rem/den = r - 1/(den/rem); next value is -den/rem
        num, den = -den, rem


def cf_expand(p: int, q: int) -> ContinuedFraction:
    """Expand ``-p/q`` (with ``p > q >= 1`` coprime) into coefficients ``<= -2``.

    >>> print(cf_expand(14, 5))
    (-3, -5)
    >>> print(cf_expand(2, 1))
    (-2)

    ``-1`` has no such expansion and is rejected.
    """
    _check_pq(p, q)
    if p <= q:
        raise ValueError(
            f"-{p}/{q} >= -1 has no expansion with coefficients <= -2 "
            "(-1 is the terminal slope of a peeling path)"
        )
    return ContinuedFraction(tuple(_expand_raw(p, q)))


def _evaluate(coeffs: Iterable[int]) -> Fraction:
    coeffs = list(coeffs)
    value = Fraction(coeffs[-1])
    for r in reversed(coeffs[:-1]):
        value = r - 1 / value
    return value


def cf_to_slope(cf: ContinuedFraction | Iterable[int]) -> Slope:
    if not isinstance(cf, ContinuedFraction):
        cf = ContinuedFraction(tuple(cf))
    return as_slope(_evaluate(cf.coeffs))


def _increment_last(coeffs: list[int]) -> list[int]:
    coeffs = coeffs[:-1] + [coeffs[-1] + 1]
    # (..., r, -1) == (..., r + 1)
    while len(coeffs) > 1 and coeffs[-1] == -1:
        coeffs = coeffs[:-2] + [coeffs[-2] + 1]
    return coeffs


def peel_coefficients(p: int, q: int) -> list[tuple[int, ...]]:
    """Coefficient lists along the peeling path, ending at ``(-1,)``."""
    _check_pq(p, q)
    if p == 1 and q == 1:
        return [(-1,)]
    coeffs = list(cf_expand(p, q).coeffs)
    out = [tuple(coeffs)]
    while coeffs != [-1]:
        coeffs = _increment_last(coeffs)
        out.append(tuple(coeffs))
    return out


def peel_path(p: int, q: int) -> list[Slope]:
    """Slopes met while peeling a solid torus with boundary slope ``-p/q``.

    Each step increments the last coefficient of the continued fraction; the
    path stops at ``-1``.

    >>> [str(s) for s in peel_path(14, 5)]
    ['-14/5', '-11/4', '-8/3', '-5/2', '-2', '-1']
    """
    return [as_slope(_evaluate(c)) for c in peel_coefficients(p, q)]


def ccw_key(start: Slope, x: Slope) -> tuple:
    """Sort key for the counterclockwise walk that leaves ``start``.

    Keys increase along the walk; ``start`` itself gets the smallest key.
    """
    if start.is_infinite:
        if x.is_infinite:
            return (-1, Fraction(0))
        return (0, -x.as_fraction())
    s = start.as_fraction()
    if x.is_infinite:
        return (1, Fraction(0))
    v = x.as_fraction()
    if v <= s:
        return (0, s - v)
    return (2, -v)


def bypass_slope(s: Slope, s_attach: Slope) -> Slope:
    """Slope after a bypass on a torus with ``#Γ = 2``.

    Returns the slope in the counterclockwise interval from ``s_attach`` to
    ``s`` that is closest to ``s_attach`` and has a Farey edge to ``s``.

    >>> bypass_slope(make_slope(-14, 5), make_slope(0))
    Slope(-11/4)
    """
    s, s_attach = as_slope(s), as_slope(s_attach)
    if s == s_attach:
        raise ValueError("attaching slope must differ from the dividing slope")
    # M in SL(2, Z) sends s to ∞; rows act on column vectors (num, den)
    a, b = s.num, s.den
    x, y = _bezout(a, b)  # x*a + y*b == 1
    # M = [[x, y], [-b, a]], orientation-preserving so the walk direction is kept
    top = x * s_attach.num + y * s_attach.den
    bottom = -b * s_attach.num + a * s_attach.den
    image = Fraction(top, bottom)  # bottom != 0 since s_attach != s
    # neighbours of ∞ are the integers; walking down from image, take the first
    t = -((-image.numerator) // image.denominator) - 1  # ceil(image) - 1
    # M^{-1} = [[a, -y], [b, x]] applied to (t, 1)
    return make_slope(a * t - y, b * t + x)


def _bezout(a: int, b: int) -> tuple[int, int]:
    old_r, r = a, b
    old_s, s_ = 1, 0
    old_t, t = 0, 1
    while r != 0:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_s, s_ = s_, old_s - k * s_
        old_t, t = t, old_t - k * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    assert old_r == 1, "slope vector must be primitive"
    return old_s, old_t
