"""Graded dimension tables and symmetric powers of graded super spaces.

A BettiTable records the dimensions of a nonnegatively graded vector
space, degree by degree.  The parity of the degree is the super grading:
even degrees are even, odd degrees are odd.  Symmetric powers are taken
in the super sense, so odd degrees contribute exterior-power counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class BettiTable:
    """Immutable map {degree: dimension} with zero entries dropped."""

    __slots__ = ("_dims",)

    def __init__(self, dims):
        clean = {}
        for k, v in dict(dims).items():
            k, v = int(k), int(v)
            if k < 0:
                raise ValueError("degrees must be nonnegative")
            if v < 0:
                raise ValueError("dimensions must be nonnegative")
            if v:
                clean[k] = v
        self._dims = clean

    def dims(self) -> dict[int, int]:
        return dict(self._dims)

    def __getitem__(self, degree: int) -> int:
        return self._dims.get(degree, 0)

    def __iter__(self):
        return iter(sorted(self._dims))

    def __len__(self):
        return len(self._dims)

    def __eq__(self, other):
        if isinstance(other, BettiTable):
            return self._dims == other._dims
        if isinstance(other, dict):
            return self._dims == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._dims.items()))

    def __repr__(self):
        inner = ", ".join(f"{k}: {self._dims[k]}" for k in sorted(self._dims))
        return f"BettiTable({{{inner}}})"

    @property
    def max_degree(self) -> int:
        return max(self._dims, default=0)

    @property
    def total_dim(self) -> int:
        return sum(self._dims.values())

    def shift(self, s: int) -> "BettiTable":
        """Shift every degree up by s.  Only even shifts preserve parity,
        and parity carries the super grading, so odd shifts are refused."""
        if s < 0 or s % 2:
            raise ValueError("shift must be even and nonnegative")
        return BettiTable({k + s: v for k, v in self._dims.items()})

    def add(self, other: "BettiTable") -> "BettiTable":
        out = dict(self._dims)
        for k, v in other._dims.items():
            out[k] = out.get(k, 0) + v
        return BettiTable(out)

    __add__ = add

    def tensor(self, other: "BettiTable") -> "BettiTable":
        out: dict[int, int] = {}
        for k1, v1 in self._dims.items():
            for k2, v2 in other._dims.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + v1 * v2
        return BettiTable(out)


@dataclass(frozen=True)
class AlgebraPreset:
    """A named algebra standing in only through its cohomology dimensions.

    d is the duality dimension: the cohomology table must be supported in
    [0, d], and degree-i classes pair with degree-(d-i) homology classes.
    """

    name: str
    d: int
    betti: BettiTable

    def __post_init__(self):
        if self.d <= 0 or self.d % 2:
            raise ValueError("duality dimension d must be even and positive")
        if not isinstance(self.betti, BettiTable):
            object.__setattr__(self, "betti", BettiTable(self.betti))
        if self.betti.max_degree > self.d:
            raise ValueError("cohomology support exceeds the duality dimension")


def super_sym_powers(table: BettiTable, pmax: int, t_bound: int | None = None):
    """Graded dimensions of the super symmetric powers S^0 .. S^pmax.

    Expands prod_{j even} (1 - z t^j)^(-m_j) * prod_{j odd} (1 + z t^j)^(m_j)
    and reads off the coefficient of z^p.  With the default t_bound
    (pmax * max degree) the result is exact, not a truncation.

    Returns a list of BettiTable, index p in 0..pmax.
    """
    if pmax < 0:
        raise ValueError("pmax must be nonnegative")
    if t_bound is None:
        t_bound = pmax * table.max_degree
    # rows[p] = t-polynomial {degree: coeff} multiplying z^p
    rows: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(pmax)]
    for j in sorted(table.dims()):
        m = table[j]
        factor: list[dict[int, int]] = []
        for r in range(pmax + 1):
            deg = r * j
            if deg > t_bound:
                break
            if j % 2 == 0:
                factor.append({deg: math.comb(m + r - 1, r)})
            else:
                if r > m:
                    break
                factor.append({deg: math.comb(m, r)})
        new_rows: list[dict[int, int]] = [{} for _ in range(pmax + 1)]
        for p1, poly1 in enumerate(rows):
            if not poly1:
                continue
            for p2, poly2 in enumerate(factor):
                if p1 + p2 > pmax:
                    break
                target = new_rows[p1 + p2]
                for d1, c1 in poly1.items():
                    for d2, c2 in poly2.items():
                        d = d1 + d2
                        if d <= t_bound:
                            target[d] = target.get(d, 0) + c1 * c2
        rows = new_rows
    return [BettiTable(row) for row in rows]
