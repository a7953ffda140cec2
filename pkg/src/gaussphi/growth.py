"""The snowflake growth sequence 3, 4, 6, 8, 12, 16, 24, ...

``w(2k) = 3 * 2**k`` and ``w(2k+1) = 4 * 2**k``.  Every w(n) used by the
kernels has to fit an unsigned 64-bit word, which caps n at 124.
"""

from __future__ import annotations

from .errors import RangeOverflow

__all__ = ["W_MAX_INDEX", "w", "min_snowflake_index"]

W_MAX_INDEX = 124


def w(n: int) -> int:
    if n < 0:
        raise ValueError(f"w is defined for n >= 0, got {n}")
    if n > W_MAX_INDEX:
        raise RangeOverflow(f"w({n}) does not fit in 64 bits")
    k = n >> 1
    return (4 << k) if n & 1 else (3 << k)


def min_snowflake_index(x: int) -> int:
    """Least m with ``x <= w(m) - 2``, found by scanning the sequence.

    This scan is the reference semantics; the kernels use a closed form
    based on ``(x + 2).bit_length()`` and are tested against it.
    """
    if x < 1:
        raise ValueError(f"min_snowflake_index needs x >= 1, got {x}")
    m = 0
    while w(m) - 2 < x:
        m += 1
    return m
