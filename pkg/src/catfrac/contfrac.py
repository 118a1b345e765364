"""Continued-fraction evaluation with a pluggable weight per level.

The generating function is the nested fraction 1/(1 - w_1/(1 - w_2/...)),
where the weight monomial w_l prices one vertex at level l.  Presets:

    catalan        w_l = z                    counts trees by edges
    area           w_l = z*q^l                q tracks the level sum, which
                                              encodes lattice-path area
    increasing(k)  w_l = z*q^C(l-1, k-1)      q tracks length-k increasing
                                              patterns of the tree's word
    multivariate   w_l = v_l                  one variable per level, the
                                              full level-profile census
    custom         explicit per-level list

Every weight carries at least one z, so a truncation at z-order N only ever
sees the first N levels: evaluating at depth >= order is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import Monomial, TruncSeries
from .util import binom

_KINDS = ("catalan", "area", "increasing", "multivariate", "custom")


@dataclass(frozen=True)
class LevelWeights:
    """Resolves a level index (from 1) to its weight monomial."""

    kind: str
    k: int | None = None
    levels: tuple[Monomial, ...] | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if self.kind == "increasing" and (self.k is None or self.k < 1):
            raise ValueError("increasing-pattern weights need k >= 1")
        if self.kind == "custom":
            if not self.levels:
                raise ValueError("custom weights need at least one level")
            for w in self.levels:
                if w.z_deg < 1:
                    raise ValueError(f"level weight {w} must carry a factor of z")
            pure_v = [bool(w.v_degs) for w in self.levels]
            if any(pure_v) and not all(pure_v):
                raise ValueError("custom weights must not mix z,q monomials with level variables")

    @classmethod
    def catalan(cls) -> "LevelWeights":
        return cls("catalan")

    @classmethod
    def area(cls) -> "LevelWeights":
        return cls("area")

    @classmethod
    def increasing(cls, k: int) -> "LevelWeights":
        return cls("increasing", k=k)

    @classmethod
    def multivariate(cls) -> "LevelWeights":
        return cls("multivariate")

    @classmethod
    def custom(cls, levels) -> "LevelWeights":
        return cls("custom", levels=tuple(levels))

    def weight(self, level: int) -> Monomial:
        if level < 1:
            raise ValueError("levels are indexed from 1")
        if self.kind == "catalan":
            return Monomial(1, 0, ())
        if self.kind == "area":
            return Monomial(1, level, ())
        if self.kind == "increasing":
            return Monomial(1, binom(level - 1, self.k - 1), ())
        if self.kind == "multivariate":
            return Monomial.level(level)
        if level > len(self.levels):
            raise ValueError(f"custom weights defined through level {len(self.levels)} only")
        return self.levels[level - 1]

    def __str__(self) -> str:
        if self.kind == "increasing":
            return f"increasing(k={self.k})"
        return self.kind


def eval_cf(weights: LevelWeights, depth: int, order_z: int) -> TruncSeries:
    """Evaluate the continued fraction truncated at z-order ``order_z``.

    Bottom-up: s = 1 below the deepest level, then s = 1/(1 - w_l * s) for
    l = depth down to 1.  Because every weight carries a z, any depth >=
    order_z yields the exact series through z-degree order_z.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if order_z < 0:
        raise ValueError("order_z must be nonnegative")
    s = TruncSeries.one(order_z)
    for level in range(depth, 0, -1):
        # Truncating constructor: a weight too deep for the order just vanishes.
        w = TruncSeries(order_z, {weights.weight(level): 1})
        s = w.mul(s).geom_inverse()
    return s


def cf_stability_check(weights: LevelWeights, order_z: int) -> bool:
    """True iff evaluating 3 levels deeper changes nothing (depth saturation)."""
    base = max(order_z, 1)
    return eval_cf(weights, base, order_z) == eval_cf(weights, base + 3, order_z)


def fixed_point_check(order_z: int) -> bool:
    """True iff the level-census series T satisfies T = 1/(1 - v1 * T-shifted).

    T-shifted is T with every level variable moved up one level, i.e. the
    same census seen from one level below the root.
    """
    t = eval_cf(LevelWeights.multivariate(), max(order_z, 1), order_z)
    shifted = t.shift_levels(1)
    v1 = TruncSeries(order_z, {Monomial.level(1): 1})
    return v1.mul(shifted).geom_inverse() == t


def specialize(series: TruncSeries, weights: LevelWeights) -> TruncSeries:
    """Substitute each level variable by the weight the preset assigns it."""
    return series.substitute_levels(weights.weight)
