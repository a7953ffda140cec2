"""Cross-checks of the closed forms against the BFS level sets."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import GaussianInt
from .expansion import eval_expansion, minimal_expansion
from .oracle import LevelMap
from .phi import phi, phi_fast_batch
from .regions import RegionSpec, Scheme, enumerate_region_array, layer_decomposition

_MAX_REPORTED = 20


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        if len(self.failures) < _MAX_REPORTED:
            self.failures.append(msg)
        elif len(self.failures) == _MAX_REPORTED:
            self.failures.append("... further failures suppressed")


def _nonzero(levels: LevelMap):
    re, im = levels.coordinates()
    keep = (re != 0) | (im != 0)
    return re[keep], im[keep], levels.levels[keep]


def check_phi(levels: LevelMap) -> CheckReport:
    """phi (reference) and phi_fast (kernel) equal the BFS level at every point."""
    rep = CheckReport("phi")
    re, im, lv = _nonzero(levels)
    fast = phi_fast_batch(re, im)
    for idx in np.nonzero(fast != lv)[0].tolist():
        rep.fail(f"phi_fast({GaussianInt(int(re[idx]), int(im[idx]))}) = {fast[idx]}, oracle {lv[idx]}")
    for a, b, want in zip(re.tolist(), im.tolist(), lv.tolist()):
        got = phi(GaussianInt(a, b))
        if got != want:
            rep.fail(f"phi({GaussianInt(a, b)}) = {got}, oracle {want}")
    rep.checked = int(re.shape[0])
    return rep


def _keys(points: np.ndarray) -> np.ndarray:
    return points[:, 0] * (1 << 32) + points[:, 1]


def _scaled(points: np.ndarray, scale: GaussianInt) -> np.ndarray:
    c, d = scale.re, scale.im
    x, y = points[:, 0], points[:, 1]
    return np.stack([c * x - d * y, c * y + d * x], axis=1)


def _disjoint_union(parts: list[np.ndarray]) -> tuple[np.ndarray, bool]:
    allk = np.concatenate([_keys(p) for p in parts]) if parts else np.empty(0, dtype=np.int64)
    uniq = np.unique(allk)
    return uniq, uniq.shape[0] == allk.shape[0]


def check_decomposition(levels: LevelMap, n_max: int | None = None) -> CheckReport:
    """Both layer schemes tile B_n minus 0, and S_n = D_n + (1+i) D_{n-1} disjointly."""
    rep = CheckReport("decomp")
    n_max = levels.n_max if n_max is None else n_max
    re, im = levels.coordinates()
    for n in range(n_max + 1):
        sel = (levels.levels <= n) & ((re != 0) | (im != 0))
        truth = np.unique(_keys(np.stack([re[sel], im[sel]], axis=1)))
        for scheme in Scheme:
            parts = [_scaled(enumerate_region_array(t.spec), t.scale) for t in layer_decomposition(n, scheme)]
            union, disjoint = _disjoint_union(parts)
            rep.checked += int(union.shape[0])
            if not disjoint:
                rep.fail(f"{scheme.value} layers of B_{n} overlap")
            if not np.array_equal(union, truth):
                rep.fail(f"{scheme.value} layers of B_{n}: {union.shape[0]} points, oracle {truth.shape[0]}")
        if n >= 1:
            s = np.unique(_keys(enumerate_region_array(RegionSpec("S", n))))
            d = enumerate_region_array(RegionSpec("D", n))
            d1 = _scaled(enumerate_region_array(RegionSpec("D", n - 1)), GaussianInt(1, 1))
            union, disjoint = _disjoint_union([d, d1])
            if not disjoint:
                rep.fail(f"D_{n} and (1+i)D_{n - 1} overlap")
            if not np.array_equal(union, s):
                rep.fail(f"S_{n} != D_{n} u (1+i)D_{n - 1}")
    rep.notes = [f"|B_{n}| = {size}" for n, size in enumerate(levels.ball_sizes()[: n_max + 1])]
    return rep


def check_expansions(levels: LevelMap, max_coord: int | None = None) -> CheckReport:
    """Minimal expansions evaluate back and have length oracle level + 1."""
    rep = CheckReport("expansion")
    for g, lv in levels.items():
        if max_coord is not None and max(abs(g.re), abs(g.im)) > max_coord:
            continue
        e = minimal_expansion(g)
        rep.checked += 1
        if eval_expansion(e) != g:
            rep.fail(f"expansion {e} of {g} evaluates to {eval_expansion(e)}")
        if g and len(e) - 1 != lv:
            rep.fail(f"expansion of {g} has length {len(e)}, oracle level {lv}")
    return rep


CHECKS = {
    "phi": check_phi,
    "decomp": check_decomposition,
    "expansion": check_expansions,
}
