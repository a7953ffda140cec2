"""Snowflakes S_n, doilies D_n and phi-balls B_n as lattice point sets.

* S_n: points not divisible by 2 with |x|, |y| <= w(n) - 2 and
  |x| + |y| <= w(n+1) - 3.
* D_n: same octagon, but x + y odd (not divisible by 1+i).
* B_n: phi(g) <= n, plus 0.  B_n minus 0 splits into 2**j S_{n-2j}
  (snowflake scheme) or into (1+i)**j D_{n-j} (doily scheme).

Enumeration scans the bounding box with numpy masks and returns points in
lexicographic (re, im) order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import (
    ONE,
    GaussianInt,
    as_gaussian,
    mul_one_plus_i,
    one_plus_i_valuation,
    two_valuation,
)
from .errors import RegionTooLarge
from .growth import W_MAX_INDEX, w

__all__ = [
    "MAX_BOX_POINTS",
    "Scheme",
    "RegionSpec",
    "LayerTerm",
    "in_S",
    "in_D",
    "in_B",
    "in_region",
    "layer_decomposition",
    "layer_points",
    "layer_index",
    "enumerate_region",
    "enumerate_region_array",
    "enumerate_preimage",
]

MAX_BOX_POINTS = 10**8
_ROW_CHUNK = 1 << 20


class Scheme(str, enum.Enum):
    SNOWFLAKE = "snowflake"
    DOILY = "doily"


@dataclass(frozen=True)
class RegionSpec:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("S", "D", "B"):
            raise ValueError(f"region kind must be S, D or B, got {self.kind!r}")
        if self.n < 0:
            raise ValueError(f"region index must be >= 0, got {self.n}")
        if self.n + 1 > W_MAX_INDEX:
            raise ValueError(f"w({self.n + 1}) is out of machine range")

    def __str__(self):
        return f"{self.kind}_{self.n}"

    @property
    def radius(self) -> int:
        """Half-width of the bounding box."""
        return w(self.n) - 2


@dataclass(frozen=True)
class LayerTerm:
    """The point set ``scale * spec``."""

    scale: GaussianInt
    spec: RegionSpec

    def __str__(self):
        return f"({self.scale})*{self.spec}"


def _octagon(a: int, b: int, n: int) -> bool:
    a, b = abs(a), abs(b)
    r = w(n) - 2
    return a <= r and b <= r and a + b <= w(n + 1) - 3


def in_S(g, n: int) -> bool:
    g = as_gaussian(g)
    return bool((g.re | g.im) & 1) and _octagon(g.re, g.im, n)


def in_D(g, n: int) -> bool:
    g = as_gaussian(g)
    return bool((g.re + g.im) & 1) and _octagon(g.re, g.im, n)


def in_B(g, n: int) -> bool:
    """Membership in B_n via the 2-valuation and S-membership (O(1))."""
    g = as_gaussian(g)
    if not g:
        return True
    v = two_valuation(g)
    if n < 2 * v:
        return False
    return in_S(GaussianInt(g.re >> v, g.im >> v), n - 2 * v)


def in_region(g, spec: RegionSpec) -> bool:
    return {"S": in_S, "D": in_D, "B": in_B}[spec.kind](g, spec.n)


def layer_decomposition(n: int, scheme: Scheme | str = Scheme.SNOWFLAKE) -> list[LayerTerm]:
    """Layers whose disjoint union is B_n minus 0, ordered by layer index j."""
    scheme = Scheme(scheme)
    if scheme is Scheme.SNOWFLAKE:
        return [LayerTerm(GaussianInt(1 << j, 0), RegionSpec("S", n - 2 * j)) for j in range(n // 2 + 1)]
    terms = []
    scale = ONE
    for j in range(n + 1):
        terms.append(LayerTerm(scale, RegionSpec("D", n - j)))
        scale = mul_one_plus_i(scale)
    return terms


def layer_index(g, scheme: Scheme | str = Scheme.SNOWFLAKE) -> int:
    """Index j of the layer of B_n (any n with g in B_n) that holds g; -1 for 0."""
    g = as_gaussian(g)
    if not g:
        return -1
    if Scheme(scheme) is Scheme.SNOWFLAKE:
        return two_valuation(g)
    return one_plus_i_valuation(g)


def _mask(kind: str, n: int, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    AX, AY = np.abs(X), np.abs(Y)
    if kind == "S":
        r = w(n) - 2
        return ((X | Y) & 1).astype(bool) & (AX <= r) & (AY <= r) & (AX + AY <= w(n + 1) - 3)
    if kind == "D":
        r = w(n) - 2
        return ((X + Y) & 1).astype(bool) & (AX <= r) & (AY <= r) & (AX + AY <= w(n + 1) - 3)
    # B: strip 2**v, then test S_{n-2v}
    t = AX | AY
    zero = t == 0
    low = t & -t
    v = np.zeros_like(t)
    nz = ~zero
    v[nz] = np.round(np.log2(low[nz].astype(np.float64))).astype(np.int64)
    idx = n - 2 * v
    ok = nz & (idx >= 0)
    idx = np.where(ok, idx, 0)
    table = np.array([w(i) for i in range(n + 2)], dtype=np.int64)
    ax, ay = AX >> v, AY >> v
    inside = (ax <= table[idx] - 2) & (ay <= table[idx] - 2) & (ax + ay <= table[idx + 1] - 3)
    return zero | (ok & inside)


def enumerate_region_array(spec: RegionSpec, max_points: int = MAX_BOX_POINTS) -> np.ndarray:
    """Points of the region as an (N, 2) int64 array, sorted by (re, im)."""
    r = spec.radius
    side = 2 * r + 1
    if side * side > max_points:
        raise RegionTooLarge(f"{spec} needs a {side}x{side} box (> {max_points} points)")
    ys = np.arange(-r, r + 1, dtype=np.int64)
    rows_per_chunk = max(1, _ROW_CHUNK // side)
    parts = []
    for x0 in range(-r, r + 1, rows_per_chunk):
        xs = np.arange(x0, min(x0 + rows_per_chunk, r + 1), dtype=np.int64)
        X, Y = np.meshgrid(xs, ys, indexing="ij")
        hit = _mask(spec.kind, spec.n, X, Y)
        parts.append(np.stack([X[hit], Y[hit]], axis=1))
    if not parts:
        return np.empty((0, 2), dtype=np.int64)
    return np.concatenate(parts)


def enumerate_region(spec: RegionSpec) -> list[GaussianInt]:
    return [GaussianInt(int(a), int(b)) for a, b in enumerate_region_array(spec).tolist()]


def enumerate_preimage(n: int) -> list[GaussianInt]:
    """phi^{-1}(n) = B_n minus B_{n-1}, lexicographically sorted."""
    pts = enumerate_region_array(RegionSpec("B", n))
    if n > 0:
        X, Y = pts[:, 0], pts[:, 1]
        pts = pts[~_mask("B", n - 1, X, Y)]
    else:
        pts = pts[(pts != 0).any(axis=1)]
    return [GaussianInt(int(a), int(b)) for a, b in pts.tolist()]


def layer_points(term: LayerTerm) -> list[GaussianInt]:
    """Points of ``term.scale * term.spec``, in the order of the unscaled enumeration."""
    c, d = term.scale.re, term.scale.im
    return [
        GaussianInt(c * a - d * b, c * b + d * a)
        for a, b in enumerate_region_array(term.spec).tolist()
    ]
