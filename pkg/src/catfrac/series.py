"""Sparse truncated polynomial arithmetic in z, q, and level variables v1, v2, ...

Every generating function in this package lives here: a series is a finite
map from monomials to exact (arbitrary-precision) integer coefficients,
truncated at a fixed maximum z-degree.  The z-degree doubles as the total
edge count, so coefficients beyond the order are *unknown*, not zero, and
every operation discards them.

Values are immutable after construction and all operations are pure, so
series and monomials are safe to share between threads.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Callable, Iterable, Mapping, NamedTuple


class TruncationError(ValueError):
    """A coefficient beyond the retained z-order was requested (unknown, not zero)."""


class Monomial(NamedTuple):
    """z^z_deg * q^q_deg * v1^v_degs[0] * v2^v_degs[1] * ...

    ``v_degs`` is stored with trailing zeros stripped so equal monomials
    compare equal no matter how they were built.  When ``v_degs`` is
    nonempty the z-degree equals ``sum(v_degs)``: each level variable
    carries exactly one edge.  Tuple ordering gives the canonical sort
    (z_deg, then q_deg, then v_degs lexicographically) for free.
    """

    z_deg: int
    q_deg: int
    v_degs: tuple[int, ...] = ()

    @classmethod
    def make(cls, z_deg: int = 0, q_deg: int = 0, v_degs: Iterable[int] = ()) -> "Monomial":
        """Validated constructor; infers z_deg from v_degs when z_deg is omitted."""
        v = tuple(int(x) for x in v_degs)
        while v and v[-1] == 0:
            v = v[:-1]
        if z_deg < 0 or q_deg < 0 or any(x < 0 for x in v):
            raise ValueError("monomial exponents must be nonnegative")
        if v:
            total = sum(v)
            if z_deg == 0:
                z_deg = total
            elif z_deg != total:
                raise ValueError(
                    f"z-degree {z_deg} must equal the total level degree {total}"
                )
        return cls(int(z_deg), int(q_deg), v)

    @classmethod
    def level(cls, level: int) -> "Monomial":
        """The single level variable v_level (one edge, one vertex at that level)."""
        if level < 1:
            raise ValueError("levels are indexed from 1")
        return cls(1, 0, (0,) * (level - 1) + (1,))

    def times(self, other: "Monomial") -> "Monomial":
        va, vb = self.v_degs, other.v_degs
        if not vb:
            v = va
        elif not va:
            v = vb
        else:
            v = tuple(a + b for a, b in zip_longest(va, vb, fillvalue=0))
        return Monomial(self.z_deg + other.z_deg, self.q_deg + other.q_deg, v)


_ONE = Monomial(0, 0, ())


def _group_by_z(terms: Mapping[Monomial, int]) -> dict[int, list[tuple[Monomial, int]]]:
    by_z: dict[int, list[tuple[Monomial, int]]] = {}
    for m, c in terms.items():
        by_z.setdefault(m.z_deg, []).append((m, c))
    return by_z


class TruncSeries:
    """Exact polynomial truncated at a fixed z-order.

    Stored sparsely: no zero coefficients, no monomial of z-degree beyond
    ``order_z`` (such terms are silently discarded, which *is* the ring's
    truncation semantics).  Binary operations require operands of equal
    order; mixing orders is a usage error because the truncated tails differ.
    """

    __slots__ = ("order_z", "_terms")

    def __init__(self, order_z: int, terms: Mapping[Monomial, int] | None = None):
        if order_z < 0:
            raise ValueError("order_z must be nonnegative")
        clean: dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                if c and m.z_deg <= order_z:
                    clean[m] = c
        object.__setattr__(self, "order_z", int(order_z))
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def zero(cls, order_z: int) -> "TruncSeries":
        return cls(order_z)

    @classmethod
    def one(cls, order_z: int) -> "TruncSeries":
        return cls(order_z, {_ONE: 1})

    @classmethod
    def term(cls, order_z: int, coeff: int, monomial: Monomial) -> "TruncSeries":
        """Single-term series; rejects a monomial beyond the order outright."""
        if monomial.z_deg > order_z:
            raise ValueError(
                f"monomial of z-degree {monomial.z_deg} does not fit order {order_z}"
            )
        return cls(order_z, {monomial: coeff})

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, monomial: Monomial) -> int:
        """Exact coefficient; zero when absent, error when beyond the order."""
        if monomial.z_deg > self.order_z:
            raise TruncationError(
                f"coefficient at z-degree {monomial.z_deg} exceeds truncation order "
                f"{self.order_z}: it is unknown, not zero"
            )
        return self._terms.get(monomial, 0)

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in the canonical (z_deg, q_deg, v_degs) order."""
        return sorted(self._terms.items())

    def z_slice(self, n: int) -> dict[Monomial, int]:
        """All terms of z-degree exactly n."""
        if n > self.order_z:
            raise TruncationError(
                f"z-degree {n} exceeds truncation order {self.order_z}"
            )
        return {m: c for m, c in self._terms.items() if m.z_deg == n}

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order_z == other.order_z and self._terms == other._terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"TruncSeries(order_z={self.order_z}, {self.canonical_str()})"

    # -- ring operations --------------------------------------------------

    def _check_compat(self, other: "TruncSeries") -> None:
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if self.order_z != other.order_z:
            raise ValueError(
                f"mismatched truncation orders {self.order_z} and {other.order_z}"
            )

    def add(self, other: "TruncSeries") -> "TruncSeries":
        self._check_compat(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return TruncSeries(self.order_z, out)

    def scale(self, factor: int) -> "TruncSeries":
        if not factor:
            return TruncSeries(self.order_z)
        return TruncSeries(self.order_z, {m: factor * c for m, c in self._terms.items()})

    def mul(self, other: "TruncSeries") -> "TruncSeries":
        """Convolution product; z-degrees beyond the order are discarded."""
        self._check_compat(other)
        order = self.order_z
        out: dict[Monomial, int] = {}
        by_a = _group_by_z(self._terms)
        by_b = _group_by_z(other._terms)
        for za, terms_a in by_a.items():
            for zb, terms_b in by_b.items():
                if za + zb > order:
                    continue
                for ma, ca in terms_a:
                    for mb, cb in terms_b:
                        m = ma.times(mb)
                        out[m] = out.get(m, 0) + ca * cb
        return TruncSeries(order, out)

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.add(other.scale(-1))

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        return self.mul(other)

    def geom_inverse(self) -> "TruncSeries":
        """1/(1 - self) as the geometric series 1 + self + self^2 + ...

        Requires every term to carry at least one z (zero constant term),
        which makes the expansion terminate at the truncation order.
        Computed by the graded recurrence r = 1 + self*r, degree by degree.
        """
        for m in self._terms:
            if m.z_deg == 0:
                raise ValueError(
                    "geometric inverse needs a series with zero constant term; "
                    f"found a z-degree-0 term {m}"
                )
        order = self.order_z
        s_by_z = _group_by_z(self._terms)
        r_by_z: dict[int, dict[Monomial, int]] = {0: {_ONE: 1}}
        for d in range(1, order + 1):
            acc: dict[Monomial, int] = {}
            for j, terms_j in s_by_z.items():
                if j > d:
                    continue
                r_part = r_by_z.get(d - j)
                if not r_part:
                    continue
                for ms, cs in terms_j:
                    for mr, cr in r_part.items():
                        m = ms.times(mr)
                        acc[m] = acc.get(m, 0) + cs * cr
            acc = {m: c for m, c in acc.items() if c}
            if acc:
                r_by_z[d] = acc
        merged: dict[Monomial, int] = {}
        for part in r_by_z.values():
            merged.update(part)
        return TruncSeries(order, merged)

    # -- truncation and substitution --------------------------------------

    def truncated(self, order_z: int) -> "TruncSeries":
        """Drop to a lower (or equal) truncation order."""
        if order_z > self.order_z:
            raise TruncationError(
                f"cannot raise the truncation order from {self.order_z} to "
                f"{order_z}: higher coefficients are unknown"
            )
        return TruncSeries(order_z, self._terms)

    def shift_levels(self, by: int = 1) -> "TruncSeries":
        """Relabel every level variable v_l as v_(l+by)."""
        if by < 0:
            raise ValueError("shift must be nonnegative")
        if by == 0:
            return self
        pad = (0,) * by
        out = {
            (Monomial(m.z_deg, m.q_deg, pad + m.v_degs) if m.v_degs else m): c
            for m, c in self._terms.items()
        }
        return TruncSeries(self.order_z, out)

    def substitute_levels(self, weight_of_level: Callable[[int], Monomial]) -> "TruncSeries":
        """Replace each level variable v_l by the v-free monomial weight_of_level(l).

        Each substituted weight must carry at least one z so the truncation
        stays meaningful (terms dropped by the input's truncation could not
        reappear below the order).
        """
        out: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            if not m.v_degs:
                key = m
            else:
                z = 0
                q = m.q_deg
                for idx, a in enumerate(m.v_degs):
                    if not a:
                        continue
                    w = weight_of_level(idx + 1)
                    if w.v_degs:
                        raise ValueError("substitution weights must be v-free")
                    if w.z_deg < 1:
                        raise ValueError("substitution weights must carry a factor of z")
                    z += a * w.z_deg
                    q += a * w.q_deg
                if z > self.order_z:
                    continue
                key = Monomial(z, q, ())
            out[key] = out.get(key, 0) + c
        return TruncSeries(self.order_z, out)

    # -- rendering ---------------------------------------------------------

    def canonical_str(self) -> str:
        """Deterministic flat rendering, e.g. ``1 + 4*z^3 + 1*z^3*q^1``.

        Terms appear in canonical monomial order; every non-constant term
        keeps its explicit coefficient and exponents.  Monomials with level
        variables render the v-part only (their z-degree is implied).
        """
        items = self.terms()
        if not items:
            return "0"
        pieces: list[str] = []
        for m, c in items:
            body = _flat_body(m)
            mag = abs(c)
            text = str(mag) if not body else f"{mag}*{body}"
            if not pieces:
                pieces.append(f"-{text}" if c < 0 else text)
            else:
                pieces.append(f" - {text}" if c < 0 else f" + {text}")
        return "".join(pieces)

    def term_records(self) -> list[dict]:
        """JSON-ready records, coefficients as decimal strings (they exceed 64 bits)."""
        return [
            {"z": m.z_deg, "q": m.q_deg, "v": list(m.v_degs), "coeff": str(c)}
            for m, c in self.terms()
        ]


def _flat_body(m: Monomial) -> str:
    parts: list[str] = []
    if m.v_degs:
        if m.q_deg:
            parts.append(f"q^{m.q_deg}")
        parts.extend(f"v{i + 1}^{a}" for i, a in enumerate(m.v_degs) if a)
    else:
        if m.z_deg:
            parts.append(f"z^{m.z_deg}")
        if m.q_deg:
            parts.append(f"q^{m.q_deg}")
    return "*".join(parts)
