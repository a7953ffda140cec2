"""The minimal Euclidean function phi on Z[i].

Two routes compute the same value:

* :func:`phi` is the reference: take the 2-valuation ``j``, the snowflake
  index ``m`` of ``max(|a|, |b|) / 2**j`` (by scanning w), then add one when
  ``(|a| + |b|) / 2**j`` overshoots ``w(m+1) - 3``.
* :func:`phi_fast` runs the same rule on machine words, with trailing-zero
  counts and bit lengths in place of the scan.  It runs in the compiled
  kernel when that is built.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .core import LIMIT, GaussianInt, as_gaussian, two_valuation
from .errors import RangeOverflow, ZeroInput
from .growth import min_snowflake_index, w

__all__ = ["Branch", "PhiBreakdown", "phi", "phi_breakdown", "phi_fast", "phi_fast_batch"]


class Branch(enum.Enum):
    LOW = "LOW"
    HIGH = "HIGH"


@dataclass(frozen=True)
class PhiBreakdown:
    """Intermediate quantities behind one phi evaluation.

    ``a``/``b`` are max/min of the absolute coordinates, ``x = a >> j`` and
    ``s = (a + b) >> j``; ``p = floor(log2(x + 2))``.  LOW means ``s <= w(m+1) - 3``.
    """

    j: int
    m: int
    p: int
    branch: Branch
    phi: int
    a: int
    b: int

    @property
    def x(self) -> int:
        return self.a >> self.j

    @property
    def s(self) -> int:
        return (self.a + self.b) >> self.j

    def as_dict(self) -> dict:
        return {
            "j": self.j,
            "m": self.m,
            "p": self.p,
            "branch": self.branch.value,
            "phi": self.phi,
        }


def phi_breakdown(g) -> PhiBreakdown:
    g = as_gaussian(g)
    if not g:
        raise ZeroInput("phi undefined at 0")
    a, b = abs(g.re), abs(g.im)
    if a < b:
        a, b = b, a
    j = two_valuation(g)
    x = a >> j
    m = min_snowflake_index(x)
    p = (x + 2).bit_length() - 1
    if (a + b) >> j <= w(m + 1) - 3:
        return PhiBreakdown(j, m, p, Branch.LOW, m + 2 * j, a, b)
    return PhiBreakdown(j, m, p, Branch.HIGH, m + 2 * j + 1, a, b)


def phi(g) -> int:
    """phi(g) for g != 0; raises ZeroInput at 0."""
    return phi_breakdown(g).phi


def phi_fast(g: GaussianInt) -> int:
    r = kernels.phi_ab(g.re, g.im)
    if r < 0:
        raise ZeroInput("phi undefined at 0")
    return r


def phi_fast_batch(re, im) -> np.ndarray:
    """Vectorised phi over int64 coordinate arrays (all entries nonzero, in range)."""
    re = np.ascontiguousarray(re, dtype=np.int64)
    im = np.ascontiguousarray(im, dtype=np.int64)
    for arr in (re, im):
        if arr.size and (arr.min() <= -LIMIT or arr.max() >= LIMIT):
            raise RangeOverflow("coordinates must satisfy |v| < 2**62")
    out = kernels.phi_batch(re, im)
    if out.size and out.min() < 0:
        raise ZeroInput("phi undefined at 0")
    return out
