"""Throughput benchmark for phi and minimal expansions, per kernel backend.

Inputs come from splitmix64 keyed by the seed, so a given (seed, count)
always yields the same stream on every machine.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass

import numpy as np

from ._backend import available_backends
from .core import GaussianInt

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def splitmix64(seed: int, count: int) -> np.ndarray:
    """``count`` outputs of splitmix64 started at ``seed`` (uint64 array)."""
    with np.errstate(over="ignore"):
        z = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + _GOLDEN * np.arange(1, count + 1, dtype=np.uint64)
        z = (z ^ (z >> np.uint64(30))) * _M1
        z = (z ^ (z >> np.uint64(27))) * _M2
        return z ^ (z >> np.uint64(31))


def random_gaussians(seed: int, count: int, bits: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Nonzero signed coordinates with |re|, |im| < 2**bits."""
    raw = splitmix64(seed, 2 * count)
    mask = np.uint64((1 << bits) - 1)
    mag = (raw & mask).astype(np.int64)
    sign = ((raw >> np.uint64(63)) & np.uint64(1)).astype(bool)
    vals = np.where(sign, -mag, mag)
    re, im = vals[0::2].copy(), vals[1::2].copy()
    zero = (re == 0) & (im == 0)
    re[zero] = 1
    return re, im


def stream_digest(seed: int, count: int) -> str:
    """Short sha256 of the input stream, so two runs can be compared by eye."""
    re, im = random_gaussians(seed, count)
    h = hashlib.sha256(re.astype("<i8").tobytes())
    h.update(im.astype("<i8").tobytes())
    return h.hexdigest()[:16]


@dataclass
class BenchResult:
    backend: str
    metric: str
    count: int
    seconds: float

    @property
    def rate(self) -> float:
        return self.count / self.seconds if self.seconds > 0 else float("inf")

    def as_dict(self) -> dict:
        return {
            "backend": self.backend,
            "metric": self.metric,
            "count": self.count,
            "seconds": self.seconds,
            "per_second": self.rate if self.count else 0.0,
        }


def _time_phi(k, values) -> float:
    phi_ab = k.phi_ab
    t0 = time.perf_counter()
    for g in values:
        phi_ab(g.re, g.im)
    return time.perf_counter() - t0


def _time_expand(k, values) -> float:
    expand = k.expand_text
    t0 = time.perf_counter()
    for g in values:
        expand(g.re, g.im)
    return time.perf_counter() - t0


def _time_batch(k, re, im) -> float:
    t0 = time.perf_counter()
    k.phi_batch(re, im)
    return time.perf_counter() - t0


def run_bench(count: int, seed: int = 0, backends=None, expand_count=None) -> list[BenchResult]:
    """Time phi (per call and batched) and expansion on each requested backend.

    ``expand_count`` caps the expansion sample (expansions of 60-bit inputs
    carry ~120 digits each).
    """
    found = available_backends()
    names = list(found) if backends is None else list(backends)
    if count <= 0:
        return []
    re, im = random_gaussians(seed, count)
    values = [GaussianInt(a, b) for a, b in zip(re.tolist(), im.tolist())]
    n_exp = count if expand_count is None else min(count, expand_count)
    results = []
    for name in names:
        k = found[name]
        results.append(BenchResult(name, "phi_fast", count, _time_phi(k, values)))
        results.append(BenchResult(name, "phi_batch", count, _time_batch(k, re, im)))
        if n_exp:
            results.append(BenchResult(name, "minimal_expansion", n_exp, _time_expand(k, values[:n_exp])))
    return results
