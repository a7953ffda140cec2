"""Exact Gaussian integers and the handful of operations the phi algorithms need.

Coordinates are Python ints but are held to magnitude < 2**62 so that every
value also fits a signed 64-bit word; this is what lets the compiled kernels
work on machine integers.  Lifting ``LIMIT`` is the extension point for
arbitrary precision (the kernels would then have to fall back to Python).
"""

from __future__ import annotations

import enum
import operator
import re
from dataclasses import dataclass

from .errors import NotDivisible, ParseError, RangeOverflow, ZeroInput

__all__ = [
    "LIMIT",
    "GaussianInt",
    "Unit",
    "UnitTransform",
    "ZERO",
    "ONE",
    "I",
    "as_gaussian",
    "parse_gaussian",
    "format_gaussian",
    "mul_unit",
    "conj",
    "mul_one_plus_i",
    "div_one_plus_i",
    "two_valuation",
    "one_plus_i_valuation",
    "octant_normalize",
]

LIMIT = 1 << 62


def _check(value: int) -> int:
    if not -LIMIT < value < LIMIT:
        raise RangeOverflow(f"coordinate {value} outside (-2**62, 2**62)")
    return value


@dataclass(frozen=True, slots=True, order=True)
class GaussianInt:
    """The element ``re + im*i``.  Ordering is lexicographic on (re, im)."""

    re: int
    im: int = 0

    def __post_init__(self) -> None:
        # operator.index rejects floats and other non-integral values
        object.__setattr__(self, "re", _check(operator.index(self.re)))
        object.__setattr__(self, "im", _check(operator.index(self.im)))

    def __str__(self) -> str:
        return format_gaussian(self)

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __add__(self, other: GaussianInt) -> GaussianInt:
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussianInt) -> GaussianInt:
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return GaussianInt(self.re - other.re, self.im - other.im)

    def scale(self, k: int) -> GaussianInt:
        """Multiply by the rational integer ``k``."""
        return GaussianInt(self.re * k, self.im * k)

    @property
    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def astuple(self) -> tuple[int, int]:
        return (self.re, self.im)


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)


def as_gaussian(value) -> GaussianInt:
    """Coerce a GaussianInt, ``(re, im)`` pair, int, or literal string."""
    if isinstance(value, GaussianInt):
        return value
    if isinstance(value, str):
        return parse_gaussian(value)
    if isinstance(value, tuple) and len(value) == 2:
        return GaussianInt(*value)
    if isinstance(value, complex):
        if value.real != int(value.real) or value.imag != int(value.imag):
            raise ValueError(f"{value!r} is not a Gaussian integer")
        return GaussianInt(int(value.real), int(value.imag))
    return GaussianInt(operator.index(value), 0)


class Unit(enum.IntEnum):
    """The four units, stored as the exponent of ``i``."""

    ONE = 0
    I = 1
    NEG_ONE = 2
    NEG_I = 3

    @property
    def value_gaussian(self) -> GaussianInt:
        return _UNIT_VALUES[self]

    @property
    def inverse(self) -> Unit:
        return Unit(-self % 4)

    def __mul__(self, other):
        if isinstance(other, Unit):
            return Unit((int(self) + int(other)) % 4)
        return NotImplemented

    @classmethod
    def from_gaussian(cls, g: GaussianInt) -> Unit:
        for u, v in _UNIT_VALUES.items():
            if v == g:
                return u
        raise ValueError(f"{g} is not a unit")


_UNIT_VALUES = {
    Unit.ONE: GaussianInt(1, 0),
    Unit.I: GaussianInt(0, 1),
    Unit.NEG_ONE: GaussianInt(-1, 0),
    Unit.NEG_I: GaussianInt(0, -1),
}


def mul_unit(g: GaussianInt, u: Unit) -> GaussianInt:
    """Exact product ``u * g``; ``u = i`` sends (a, b) to (-b, a)."""
    u = Unit(u) if not isinstance(u, GaussianInt) else Unit.from_gaussian(u)
    a, b = g.re, g.im
    if u is Unit.ONE:
        return g
    if u is Unit.I:
        return GaussianInt(-b, a)
    if u is Unit.NEG_ONE:
        return GaussianInt(-a, -b)
    return GaussianInt(b, -a)


def conj(g: GaussianInt) -> GaussianInt:
    return GaussianInt(g.re, -g.im)


@dataclass(frozen=True)
class UnitTransform:
    """``g -> unit * (conj(g) if conjugated else g)``."""

    unit: Unit = Unit.ONE
    conjugated: bool = False

    def apply(self, g: GaussianInt) -> GaussianInt:
        return mul_unit(conj(g) if self.conjugated else g, self.unit)

    @property
    def inverse(self) -> UnitTransform:
        # u*conj(.) is an involution because conj(u) = u**-1 for every unit
        if self.conjugated:
            return self
        return UnitTransform(self.unit.inverse, False)

    @property
    def is_identity(self) -> bool:
        return self.unit is Unit.ONE and not self.conjugated


_TRANSFORMS = tuple(UnitTransform(u, c) for c in (False, True) for u in Unit)


def mul_one_plus_i(g: GaussianInt) -> GaussianInt:
    """(1+i)(a+bi) = (a-b) + (a+b)i."""
    return GaussianInt(g.re - g.im, g.re + g.im)


def div_one_plus_i(g: GaussianInt) -> GaussianInt:
    """(a+bi)/(1+i) = (a+b)/2 + (b-a)/2 i; requires a+b even."""
    s = g.re + g.im
    if s & 1:
        raise NotDivisible(f"1+i does not divide {g}")
    return GaussianInt(s >> 1, (g.im - g.re) >> 1)


def two_valuation(g: GaussianInt) -> int:
    """Largest j with 2**j dividing both coordinates (0 is divisible by anything)."""
    t = abs(g.re) | abs(g.im)
    if not t:
        raise ZeroInput("two_valuation is undefined at 0")
    return (t & -t).bit_length() - 1


def one_plus_i_valuation(g: GaussianInt) -> int:
    """Number of times 1+i divides ``g``."""
    j = two_valuation(g)
    # after removing 2**j exactly one of the halves is odd; 1+i divides iff both are odd
    r, s = g.re >> j, g.im >> j
    return 2 * j + ((r ^ s) & 1 == 0)


def octant_normalize(g: GaussianInt) -> tuple[GaussianInt, UnitTransform]:
    """Map ``g`` to a' + b'i with a' >= b' >= 0 using a unit/conjugation symmetry.

    The returned transform satisfies ``transform.apply(g) == normalized``.
    """
    for t in _TRANSFORMS:
        h = t.apply(g)
        if h.re >= h.im >= 0:
            return h, t
    raise AssertionError(f"no octant transform found for {g!r}")  # pragma: no cover


_LITERAL = re.compile(
    r"""
    \s*
    (?:
        (?P<real>[+-]?\d+)                                  # a
      | (?P<isign>[+-]?)(?P<imag>\d*)i                       # bi
      | (?P<re2>[+-]?\d+)(?P<sign2>[+-])(?P<im2>\d*)i        # a+bi
    )
    \s*\Z
    """,
    re.VERBOSE,
)


def parse_gaussian(text: str) -> GaussianInt:
    """Parse literals such as ``90+44i``, ``-i``, ``5``, ``3-2i``."""
    m = _LITERAL.match(text)
    if m is None:
        raise ParseError(f"not a Gaussian integer literal: {text!r}")
    if m["real"] is not None:
        return GaussianInt(int(m["real"]), 0)
    if m["re2"] is not None:
        im = int(m["im2"] or "1")
        return GaussianInt(int(m["re2"]), -im if m["sign2"] == "-" else im)
    im = int(m["imag"] or "1")
    return GaussianInt(0, -im if m["isign"] == "-" else im)


def format_gaussian(g: GaussianInt) -> str:
    a, b = g.re, g.im
    if b == 0:
        return str(a)
    mag = "" if abs(b) == 1 else str(abs(b))
    if a == 0:
        return f"{'-' if b < 0 else ''}{mag}i"
    return f"{a}{'-' if b < 0 else '+'}{mag}i"
