"""Exact rational scalars, points and the orientation/intersection predicates.

Every coordinate in the package is a ``gmpy2.mpq``.  Those values are always
kept in lowest terms with a positive denominator, so equality of two scalars
is equality of their canonical representations.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Union

from gmpy2 import mpq

from .errors import DegenerateInput, MalformedNumber

Rational = type(mpq())
RationalLike = Union[int, str, Fraction, "mpq"]

ZERO = mpq(0)
ONE = mpq(1)
HALF = mpq(1, 2)

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")
_DECIMAL_RE = re.compile(r"^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$")


def rational(value: RationalLike) -> mpq:
    """Convert ``value`` to an exact rational.

    Strings may be ``"p/q"`` or a decimal literal such as ``"-0.8"`` or
    ``"1.5e-3"``; decimals are read digit for digit, so ``"0.8"`` is ``4/5``.
    Floats are refused because their binary value is almost never the number
    the user typed.
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise MalformedNumber(f"not a number: {value!r}")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return _parse_text(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator") and not isinstance(value, float):
        return mpq(int(value.numerator), int(value.denominator))
    raise MalformedNumber(f"cannot read {value!r} as an exact rational")


def _parse_text(text: str) -> mpq:
    m = _FRACTION_RE.match(text)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise MalformedNumber(f"zero denominator in {text!r}")
        return mpq(num, den)
    m = _DECIMAL_RE.match(text)
    if m and (m.group(2) or m.group(3)):
        sign, whole, frac, exp = m.groups()
        frac = frac or ""
        digits = int((whole or "0") + frac)
        scale = len(frac) - int(exp or 0)
        value = mpq(digits, 10**scale) if scale >= 0 else mpq(digits * 10 ** (-scale))
        return -value if sign == "-" else value
    raise MalformedNumber(f"malformed number {text!r}")


def format_rational(value: mpq) -> str:
    """Canonical text form: ``"p"`` for integers, otherwise ``"p/q"``."""
    value = rational(value)
    if value.denominator == 1:
        return str(int(value.numerator))
    return f"{int(value.numerator)}/{int(value.denominator)}"


class Orientation(Enum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class Point(NamedTuple):
    x: mpq
    y: mpq

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def __mul__(self, k):  # type: ignore[override]
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self):
        return Point(-self.x, -self.y)

    def __str__(self) -> str:
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


def point(x: RationalLike, y: RationalLike) -> Point:
    return Point(rational(x), rational(y))


def parse_point(text: str) -> Point:
    """Read ``"(x, y)"`` where each coordinate is a rational literal."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise MalformedNumber(f"malformed point {text!r}")
    parts = body[1:-1].split(",")
    if len(parts) != 2:
        raise MalformedNumber(f"malformed point {text!r}")
    return point(parts[0], parts[1])


def cross(o, a, b) -> mpq:
    """(a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def sign(v) -> int:
    return (v > 0) - (v < 0)


def orient_sign(p, q, r) -> int:
    """+1 for a left turn p -> q -> r, -1 for a right turn, 0 if collinear."""
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def orient(p: Point, q: Point, r: Point) -> Orientation:
    return Orientation(orient_sign(p, q, r))


def dot(o, a, b) -> mpq:
    """(a - o) . (b - o)."""
    return (a[0] - o[0]) * (b[0] - o[0]) + (a[1] - o[1]) * (b[1] - o[1])


def dist2(a, b) -> mpq:
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


def lerp(a, b, t) -> Point:
    """(1 - t) a + t b."""
    return Point(a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def segment_contains(a, b, p) -> bool:
    """True iff ``p`` lies on the closed segment ``ab``."""
    if orient_sign(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def line_intersection(a1, a2, b1, b2, *, with_parameter: bool = False):
    """Intersection of the infinite lines a1a2 and b1b2, or ``None`` if parallel.

    With ``with_parameter=True`` the result is ``(E, t)`` where
    ``E = t*b1 + (1 - t)*b2``, the scalar form used for bit-size accounting.
    """
    if a1 == a2 or b1 == b2:
        raise DegenerateInput("line through two equal points")
    dax, day = a2[0] - a1[0], a2[1] - a1[1]
    dbx, dby = b2[0] - b1[0], b2[1] - b1[1]
    den = dax * dby - day * dbx
    if den == 0:
        return None
    # a1 + u*(a2 - a1) = b1 + w*(b2 - b1)
    w = ((b1[0] - a1[0]) * day - (b1[1] - a1[1]) * dax) / den
    e = Point(b1[0] + w * dbx, b1[1] + w * dby)
    if with_parameter:
        return e, ONE - w
    return e


def segment_parameter(a, b, p) -> mpq:
    """Parameter of ``p`` along ``ab`` (p assumed on the line ab)."""
    dx = b[0] - a[0]
    if dx != 0:
        return (p[0] - a[0]) / dx
    return (p[1] - a[1]) / (b[1] - a[1])


def integer_bits(v: int) -> int:
    """1 + ceil(log2(|v| + 1)): one sign bit plus the magnitude bits."""
    return 1 + abs(int(v)).bit_length()


def scalar_bits(s: RationalLike) -> int:
    """Bit complexity of a rational: bits of numerator plus bits of denominator."""
    s = rational(s)
    return integer_bits(s.numerator) + integer_bits(s.denominator)


def max_component_bits(s: RationalLike) -> int:
    """max(<numerator>, <denominator>) for a rational."""
    s = rational(s)
    return max(integer_bits(s.numerator), integer_bits(s.denominator))


def point_bits(p: Point) -> int:
    return scalar_bits(p[0]) + scalar_bits(p[1])


def scalar_point(v: Point, w: Point, s: RationalLike) -> Point:
    """s*V + (1 - s)*W."""
    s = rational(s)
    return Point(s * v[0] + (ONE - s) * w[0], s * v[1] + (ONE - s) * w[1])
