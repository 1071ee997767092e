"""Ackermann function, its row/column inverses, and threshold schedules.

The variant used here is::

    A(0, n) = 2**n
    A(m, 0) = A(m-1, 1)            for m >= 1
    A(m, n) = A(m-1, A(m, n-1))    for m, n >= 1

Arithmetic saturates at ``2**62``: any value exceeding the cap is reported as
:data:`SATURATED`, which compares greater than every finite value.  The row
inverse ``lambda_row(k, n)`` and the column inverse ``alpha(n)`` only ever ask
"is A(...) >= n", so saturation never changes an answer.

``thresholds(k, h)`` turns the iterated row inverse into the strictly
increasing list of boundary depths used by the layered oracle: the i-th
boundary is ``h - iter_lambda(k, i, h)``, generated until it reaches ``h-1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

SATURATION_CAP: int = 2**62
SATURATED = math.inf


@lru_cache(maxsize=None)
def ackermann(m: int, n: int):
    """A(m, n) with saturation; exact int when <= 2**62, else SATURATED."""
    if m < 0 or n < 0:
        raise ValueError("ackermann arguments must be non-negative")
    if m == 0:
        return 2**n if n <= 62 else SATURATED
    if m >= 1 and n >= 63:
        # A(m, n) >= A(0, n) = 2**n > cap.
        return SATURATED
    if n == 0:
        return ackermann(m - 1, 1)
    inner = ackermann(m, n - 1)
    if inner is SATURATED or inner >= 63:
        return SATURATED
    return ackermann(m - 1, int(inner))


def lambda_row(k: int, n: int) -> int:
    """Row inverse: smallest j >= 1 with A(k, j) >= n."""
    if k < 0 or n < 1:
        raise ValueError("lambda_row requires k >= 0 and n >= 1")
    j = 1
    while ackermann(k, j) < n:
        j += 1
    return j


def iter_lambda(k: int, i: int, h: int) -> int:
    """i-fold application of ``lambda_row(k-1, .)`` to h; identity at i = 0."""
    if k < 1 or i < 0 or h < 1:
        raise ValueError("iter_lambda requires k >= 1, i >= 0, h >= 1")
    x = h
    for _ in range(i):
        x = lambda_row(k - 1, x)
    return x


def alpha(n: int) -> int:
    """Column inverse at the diagonal: smallest i >= 1 with A(i, 1) >= n."""
    return alpha2(n, n)


def alpha2(m: int, n: int) -> int:
    """General column inverse: smallest i >= 1 with A(i, m // n) >= n."""
    if n < 1:
        raise ValueError("alpha2 requires n >= 1")
    col = m // n
    i = 1
    while ackermann(i, col) < n:
        i += 1
    return i


@dataclass(frozen=True)
class ThresholdSchedule:
    """Layer boundaries for a height-h tree at recursion step k.

    ``boundaries`` is strictly increasing and ends at ``h - 1``; layer i
    covers the open depth band (boundaries[i-1], boundaries[i]).
    """

    k: int
    h: int
    boundaries: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.boundaries)


def thresholds(k: int, h: int) -> ThresholdSchedule:
    if k < 1:
        raise ValueError("thresholds requires k >= 1")
    if h < 2:
        raise ValueError("thresholds requires h >= 2 (no layering possible)")
    bounds: list[int] = []
    x = h
    while True:
        x = lambda_row(k - 1, x)
        s = h - x
        if not bounds or bounds[-1] != s:
            bounds.append(s)
        if x == 1:
            break
    return ThresholdSchedule(k, h, tuple(bounds))
