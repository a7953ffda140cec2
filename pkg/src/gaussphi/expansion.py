"""Minimal base-(1+i) expansions with digits in {0, 1, -1, i, -i}.

Digits are written most significant first with the one-character codec
``0 1 n i m`` (n = -1, m = -i).  A nonzero value with phi = n gets exactly
n + 1 digits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ._backend import kernels
from .core import LIMIT, GaussianInt, as_gaussian, div_one_plus_i
from .errors import ContractViolation, DigitError, RangeOverflow
from .phi import phi

__all__ = [
    "Digit",
    "Expansion",
    "leading_term",
    "minimal_expansion",
    "eval_expansion",
    "digits_to_text",
    "text_to_digits",
    "minimal_expansion_text",
]


class Digit(enum.Enum):
    ZERO = "0"
    ONE = "1"
    NEG_ONE = "n"
    I = "i"
    NEG_I = "m"

    @property
    def char(self) -> str:
        return self.value

    @property
    def gaussian(self) -> GaussianInt:
        return _DIGIT_VALUES[self]

    @classmethod
    def from_gaussian(cls, g: GaussianInt) -> Digit:
        for d, v in _DIGIT_VALUES.items():
            if v == g:
                return d
        raise ValueError(f"{g} is not a digit")


_DIGIT_VALUES = {
    Digit.ZERO: GaussianInt(0, 0),
    Digit.ONE: GaussianInt(1, 0),
    Digit.NEG_ONE: GaussianInt(-1, 0),
    Digit.I: GaussianInt(0, 1),
    Digit.NEG_I: GaussianInt(0, -1),
}
_BY_CHAR = {d.value: d for d in Digit}
_DIGIT_PAIRS = {d: v.astuple() for d, v in _DIGIT_VALUES.items()}


@dataclass(frozen=True)
class Expansion:
    """Digit sequence, most significant first."""

    digits: tuple[Digit, ...]

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return digits_to_text(self)

    @property
    def text(self) -> str:
        return digits_to_text(self)

    def digit_at(self, position: int) -> Digit:
        """Coefficient of (1+i)**position."""
        return self.digits[len(self.digits) - 1 - position]

    @classmethod
    def from_text(cls, text: str) -> Expansion:
        return text_to_digits(text)


def digits_to_text(e: Expansion) -> str:
    return "".join(d.value for d in e.digits)


def text_to_digits(s: str) -> Expansion:
    try:
        return Expansion(tuple(_BY_CHAR[c] for c in s))
    except KeyError as exc:
        raise DigitError(f"bad digit {exc.args[0]!r} in {s!r}; alphabet is 0 1 n i m") from None


def eval_expansion(e: Expansion) -> GaussianInt:
    """Horner evaluation in base 1+i; the empty expansion is 0."""
    a = b = 0
    for d in e.digits:
        da, db = _DIGIT_PAIRS[d]
        a, b = a - b + da, a + b + db
        if a >= LIMIT or b >= LIMIT or a <= -LIMIT or b <= -LIMIT:
            raise RangeOverflow(f"expansion of length {len(e)} leaves the machine range")
    return GaussianInt(a, b)


def leading_term(g, n: int) -> tuple[GaussianInt, Digit]:
    """Top term ``u * (1+i)**n`` of a minimal expansion of ``g``, with ``n = phi(g)``.

    Returns the subtrahend and the digit u.  Overlapping sign cases resolve
    to the first listed rule, which keeps the output deterministic.
    """
    g = as_gaussian(g)
    actual = phi(g)
    if actual != n:
        raise ContractViolation(f"leading_term needs n = phi({g}) = {actual}, got {n}")
    a, b = g.re, g.im
    k = n // 2
    p = 1 << k
    if n % 2 == 0:
        rules = (
            (abs(b) <= a, GaussianInt(p, 0)),
            (abs(b) <= -a, GaussianInt(-p, 0)),
            (abs(a) <= -b, GaussianInt(0, -p)),
            (abs(a) <= b, GaussianInt(0, p)),
        )
    else:
        rules = (
            (a >= 0 and b >= 0, GaussianInt(p, p)),
            (a <= 0 and b <= 0, GaussianInt(-p, -p)),
            (a >= 0 and b <= 0, GaussianInt(p, -p)),
            (a <= 0 and b >= 0, GaussianInt(-p, p)),
        )
    sub = next(value for cond, value in rules if cond)
    u = sub
    for _ in range(n):
        u = div_one_plus_i(u)
    return sub, Digit.from_gaussian(u)


def _expand_reference(g: GaussianInt) -> Expansion:
    # object-level loop over leading_term; the kernels must reproduce it digit for digit
    if not g:
        return Expansion((Digit.ZERO,))
    top = level = phi(g)
    digits = [Digit.ZERO] * (top + 1)
    while g:
        sub, d = leading_term(g, level)
        digits[top - level] = d
        g = g - sub
        if g:
            nxt = phi(g)
            if nxt >= level:
                raise AssertionError(f"phi did not descend below {level} (got {nxt})")
            level = nxt
    return Expansion(tuple(digits))


def minimal_expansion(g) -> Expansion:
    """A shortest expansion of ``g``; ``minimal_expansion(0)`` is the single digit 0."""
    g = as_gaussian(g)
    return Expansion(tuple(_BY_CHAR[c] for c in kernels.expand_text(g.re, g.im)))


def minimal_expansion_text(g) -> str:
    g = as_gaussian(g)
    return kernels.expand_text(g.re, g.im)
