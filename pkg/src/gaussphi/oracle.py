"""Brute-force ground truth for phi, independent of the closed form.

``bfs_levels`` grows the level sets directly from the digit-sum definition:
B_0 = {0, ±1, ±i} and B_n = B_{n-1} + {0, ±1, ±i}·(1+i)**n.  A point's level is
the first n at which it appears.  Nothing here calls the phi formula except
``euclidean_witness``, which needs phi(b) to pick the remainder ball.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .core import ZERO, GaussianInt, as_gaussian, mul_one_plus_i
from .errors import BudgetExceeded, ContractViolation, OutOfOracleRange, ZeroInput
from .expansion import Digit, Expansion, eval_expansion
from .growth import w
from .phi import phi
from .regions import in_B

__all__ = [
    "MAX_ORACLE_LEVEL",
    "LevelMap",
    "bfs_levels",
    "phi_oracle",
    "euclidean_witness",
    "assert_minimality",
]

MAX_ORACLE_LEVEL = 16

_OFFSET = 1 << 20
_STRIDE = 1 << 21
# nonzero digits in the order their candidates are generated; the first
# generator of a new point wins, which fixes the stored certificate digit
_STEP_DIGITS = (Digit.ONE, Digit.NEG_ONE, Digit.I, Digit.NEG_I)
_CODES = {d: k for k, d in enumerate((Digit.ZERO,) + _STEP_DIGITS)}
_DIGIT_OF_CODE = {k: d for d, k in _CODES.items()}


def _key(re: int, im: int) -> int:
    return (re + _OFFSET) * _STRIDE + (im + _OFFSET)


def _unkey(keys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    return keys // _STRIDE - _OFFSET, keys % _STRIDE - _OFFSET


def _power_one_plus_i(n: int) -> GaussianInt:
    g = GaussianInt(1, 0)
    for _ in range(n):
        g = mul_one_plus_i(g)
    return g


def _times(u: GaussianInt, v: GaussianInt) -> GaussianInt:
    return GaussianInt(u.re * v.re - u.im * v.im, u.re * v.im + u.im * v.re)


@dataclass(frozen=True)
class LevelMap:
    """Least level of every point of B_{n_max}; lookups by coordinate pair.

    Internally three parallel arrays sorted by key, so every listing comes
    out in lexicographic (re, im) order.
    """

    n_max: int
    keys: np.ndarray = field(repr=False)
    levels: np.ndarray = field(repr=False)
    codes: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return int(self.keys.shape[0])

    def _find(self, g: GaussianInt) -> int:
        if abs(g.re) >= _OFFSET or abs(g.im) >= _OFFSET:
            return -1
        k = _key(g.re, g.im)
        pos = int(np.searchsorted(self.keys, k))
        if pos < len(self) and self.keys[pos] == k:
            return pos
        return -1

    def __contains__(self, g) -> bool:
        return self._find(as_gaussian(g)) >= 0

    def level(self, g) -> int | None:
        pos = self._find(as_gaussian(g))
        return None if pos < 0 else int(self.levels[pos])

    def coordinates(self) -> tuple[np.ndarray, np.ndarray]:
        return _unkey(self.keys)

    def points(self) -> list[GaussianInt]:
        re, im = self.coordinates()
        return [GaussianInt(a, b) for a, b in zip(re.tolist(), im.tolist())]

    def items(self):
        re, im = self.coordinates()
        for a, b, lv in zip(re.tolist(), im.tolist(), self.levels.tolist()):
            yield GaussianInt(a, b), lv

    def ball_sizes(self) -> list[int]:
        """|B_n| (including 0) for n = 0..n_max."""
        exact = np.bincount(self.levels, minlength=self.n_max + 1)
        return np.cumsum(exact).tolist()

    def level_counts(self) -> list[int]:
        """Number of points whose least level is exactly n (0 counted at level 0)."""
        return np.bincount(self.levels, minlength=self.n_max + 1).tolist()

    def certificate(self, g) -> Expansion:
        """Digit sequence rebuilt from the recorded parent digits."""
        g = as_gaussian(g)
        pos = self._find(g)
        if pos < 0:
            raise OutOfOracleRange(f"{g} is not in B_{self.n_max}")
        top = int(self.levels[pos])
        digits = [Digit.ZERO] * (top + 1)
        cur = g
        while cur:
            pos = self._find(cur)
            lv = int(self.levels[pos])
            d = _DIGIT_OF_CODE[int(self.codes[pos])]
            digits[top - lv] = d
            cur = cur - _times(d.gaussian, _power_one_plus_i(lv))
        return Expansion(tuple(digits))


def bfs_levels(n_max: int) -> LevelMap:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n_max > MAX_ORACLE_LEVEL:
        raise BudgetExceeded(f"oracle supports n_max <= {MAX_ORACLE_LEVEL}, got {n_max}")
    seed = [(ZERO, Digit.ZERO)] + [(d.gaussian, d) for d in _STEP_DIGITS]
    order = sorted(seed, key=lambda t: t[0].astuple())
    keys = np.array([_key(g.re, g.im) for g, _ in order], dtype=np.int64)
    levels = np.zeros(len(order), dtype=np.int64)
    codes = np.array([_CODES[d] for _, d in order], dtype=np.int8)

    for n in range(1, n_max + 1):
        base = _power_one_plus_i(n)
        cand, cand_codes = [], []
        for d in _STEP_DIGITS:
            s = _times(d.gaussian, base)
            cand.append(keys + (s.re * _STRIDE + s.im))
            cand_codes.append(np.full(keys.shape[0], _CODES[d], dtype=np.int8))
        cand = np.concatenate(cand)
        cand_codes = np.concatenate(cand_codes)
        uniq, first = np.unique(cand, return_index=True)
        pos = np.searchsorted(keys, uniq)
        pos[pos == keys.shape[0]] = 0
        fresh = keys[pos] != uniq
        new_keys = uniq[fresh]
        keys = np.concatenate([keys, new_keys])
        levels = np.concatenate([levels, np.full(new_keys.shape[0], n, dtype=np.int64)])
        codes = np.concatenate([codes, cand_codes[first[fresh]]])
        perm = np.argsort(keys, kind="stable")
        keys, levels, codes = keys[perm], levels[perm], codes[perm]
    return LevelMap(n_max, keys, levels, codes)


@functools.lru_cache(maxsize=4)
def _cached_levels(n_max: int) -> LevelMap:
    return bfs_levels(n_max)


def phi_oracle(g, n_max: int) -> int | None:
    """Least n <= n_max with g in B_n, or None when phi(g) > n_max."""
    return _cached_levels(n_max).level(as_gaussian(g))


def assert_minimality(g, e: Expansion, n_max: int) -> bool:
    """True iff ``e`` (an expansion of ``g``) has the oracle's minimal length."""
    g = as_gaussian(g)
    if eval_expansion(e) != g:
        raise ContractViolation(f"expansion {e} does not evaluate to {g}")
    level = phi_oracle(g, n_max)
    if level is None:
        raise OutOfOracleRange(f"phi({g}) exceeds oracle bound {n_max}")
    return len(e) - 1 == level


def _divides(b: GaussianInt, x: GaussianInt) -> bool:
    n = b.norm
    p = _times(x, GaussianInt(b.re, -b.im))
    return p.re % n == 0 and p.im % n == 0


def _exact_quotient(x: GaussianInt, b: GaussianInt) -> GaussianInt:
    n = b.norm
    p = _times(x, GaussianInt(b.re, -b.im))
    return GaussianInt(p.re // n, p.im // n)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def euclidean_witness(a, b) -> tuple[GaussianInt, GaussianInt]:
    """(q, r) with a = q*b + r and r = 0 or phi(r) < phi(b).

    r = 0 is taken when b divides a; otherwise r is the lexicographically
    first point of B_{phi(b)-1} congruent to a modulo b.  The scan walks the
    residue class inside each column of the ball instead of the whole ball.
    """
    a, b = as_gaussian(a), as_gaussian(b)
    if not b:
        raise ZeroInput("division by 0")
    if _divides(b, a):
        return _exact_quotient(a, b), ZERO
    n = phi(b) - 1
    # the lattice b*Z[i] has basis (g, s), (0, N/g) with g = gcd(Re b, Im b)
    c, d = b.re, b.im
    g, u, v = _xgcd(c, d)
    if g < 0:
        g, u, v = -g, -u, -v
    s = u * d - v * c
    step = b.norm // g
    r_box = w(n) - 2
    diag = w(n + 1) - 3
    for x in range(-r_box, r_box + 1):
        t = a.re - x
        if t % g:
            continue
        col = min(r_box, diag - abs(x))
        if col < 0:
            continue
        y0 = (a.im - (t // g) * s) % step
        y = -col + (y0 + col) % step
        while y <= col:
            r = GaussianInt(x, y)
            if in_B(r, n):
                return _exact_quotient(a - r, b), r
            y += step
    raise AssertionError(f"no remainder for {a} mod {b}: phi would not be Euclidean")
