"""Small shared exact-integer helpers."""

from __future__ import annotations

import math


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the extended convention C(a, b) = 0 for b < 0 or a < b."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)
