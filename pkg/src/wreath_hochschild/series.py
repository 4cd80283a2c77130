"""Truncated bivariate power series with exact integer coefficients.

A BiSeries stores the coefficients of sum_{n,i} c[n][i] q^n t^i for
0 <= n <= q_bound and 0 <= i <= t_bound.  All arithmetic is exact;
products are truncated to the shared bounds.  The q variable counts
the wreath index n, the t variable counts (co)homological degree.
"""

from __future__ import annotations

import math


class BiSeries:
    """Dense table of integer coefficients c[n][i] of q^n t^i."""

    __slots__ = ("q_bound", "t_bound", "coeff")

    def __init__(self, q_bound: int, t_bound: int, coeff=None):
        if q_bound < 0 or t_bound < 0:
            raise ValueError("bounds must be nonnegative")
        self.q_bound = q_bound
        self.t_bound = t_bound
        if coeff is None:
            self.coeff = [[0] * (t_bound + 1) for _ in range(q_bound + 1)]
        else:
            if len(coeff) != q_bound + 1 or any(len(r) != t_bound + 1 for r in coeff):
                raise ValueError("coefficient table shape does not match bounds")
            self.coeff = [[int(c) for c in row] for row in coeff]

    @classmethod
    def one(cls, q_bound: int, t_bound: int) -> "BiSeries":
        s = cls(q_bound, t_bound)
        s.coeff[0][0] = 1
        return s

    @classmethod
    def from_terms(cls, q_bound: int, t_bound: int, terms) -> "BiSeries":
        """Build from an iterable of (n, i, c) triples; out-of-bound terms rejected."""
        s = cls(q_bound, t_bound)
        for n, i, c in terms:
            if not (0 <= n <= q_bound and 0 <= i <= t_bound):
                raise ValueError(f"term q^{n} t^{i} outside bounds")
            s.coeff[n][i] += int(c)
        return s

    def get(self, n: int, i: int) -> int:
        if not (0 <= n <= self.q_bound and 0 <= i <= self.t_bound):
            raise IndexError("coefficient outside truncation bounds")
        return self.coeff[n][i]

    def q_coefficient(self, n: int) -> dict[int, int]:
        """The coefficient of q^n as a t-polynomial {degree: coeff}, zeros dropped."""
        row = self.coeff[n]
        return {i: c for i, c in enumerate(row) if c}

    def terms(self):
        """Yield nonzero (n, i, c) sorted by (n, i)."""
        for n, row in enumerate(self.coeff):
            for i, c in enumerate(row):
                if c:
                    yield (n, i, c)

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.coeff for c in row)

    def _check_bounds(self, other: "BiSeries"):
        if self.q_bound != other.q_bound or self.t_bound != other.t_bound:
            raise ValueError("series bounds do not match")

    def __eq__(self, other):
        return (
            isinstance(other, BiSeries)
            and self.q_bound == other.q_bound
            and self.t_bound == other.t_bound
            and self.coeff == other.coeff
        )

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._check_bounds(other)
        out = BiSeries(self.q_bound, self.t_bound)
        for n in range(self.q_bound + 1):
            a, b, o = self.coeff[n], other.coeff[n], out.coeff[n]
            for i in range(self.t_bound + 1):
                o[i] = a[i] + b[i]
        return out

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        self._check_bounds(other)
        out = BiSeries(self.q_bound, self.t_bound)
        for n in range(self.q_bound + 1):
            a, b, o = self.coeff[n], other.coeff[n], out.coeff[n]
            for i in range(self.t_bound + 1):
                o[i] = a[i] - b[i]
        return out

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        self._check_bounds(other)
        out = BiSeries(self.q_bound, self.t_bound)
        for n1 in range(self.q_bound + 1):
            rowa = self.coeff[n1]
            for i1 in range(self.t_bound + 1):
                a = rowa[i1]
                if not a:
                    continue
                for n2 in range(self.q_bound + 1 - n1):
                    rowb = other.coeff[n2]
                    orow = out.coeff[n1 + n2]
                    for i2 in range(self.t_bound + 1 - i1):
                        b = rowb[i2]
                        if b:
                            orow[i1 + i2] += a * b
        return out

    def apply_factor(self, sign: int, q_exp: int, t_exp: int, power: int) -> "BiSeries":
        """Multiply by (1 + sign * q^q_exp * t^t_exp)^power, truncated.

        sign must be +1 or -1.  A negative power with q_exp == 0 is
        rejected: the geometric expansion would not terminate in q.
        """
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if q_exp < 0 or t_exp < 0:
            raise ValueError("exponents must be nonnegative")
        if power == 0:
            return BiSeries(self.q_bound, self.t_bound, self.coeff)
        if power < 0 and q_exp == 0:
            raise ValueError("negative power requires q_exp >= 1")
        # expansion of (1 + s u)^e as a polynomial in u = q^a t^b
        if q_exp > 0:
            rmax = self.q_bound // q_exp
        else:
            rmax = self.t_bound // t_exp if t_exp > 0 else 0
        factor = BiSeries(self.q_bound, self.t_bound)
        for r in range(rmax + 1):
            if power > 0:
                if r > power:
                    break
                c = math.comb(power, r) * (sign ** r)
            else:
                c = math.comb(-power - 1 + r, r) * ((-sign) ** r)
            n, i = r * q_exp, r * t_exp
            if n <= self.q_bound and i <= self.t_bound:
                factor.coeff[n][i] = c
        return self * factor

    def restrict(self, q_bound: int, t_bound: int) -> "BiSeries":
        """Truncate to smaller bounds."""
        if q_bound > self.q_bound or t_bound > self.t_bound:
            raise ValueError("restrict only shrinks bounds")
        out = BiSeries(q_bound, t_bound)
        for n in range(q_bound + 1):
            out.coeff[n] = self.coeff[n][: t_bound + 1]
        return out

    def __repr__(self):
        parts = []
        for n, row in enumerate(self.coeff):
            poly = _t_poly_str({i: c for i, c in enumerate(row) if c})
            if poly != "0":
                parts.append(f"q^{n}*({poly})" if n else poly)
        body = " + ".join(parts) if parts else "0"
        return f"BiSeries[q<={self.q_bound}, t<={self.t_bound}]({body})"


def _t_poly_str(poly: dict[int, int]) -> str:
    """Render {degree: coeff} as a readable t-polynomial string."""
    if not poly:
        return "0"
    chunks = []
    for i in sorted(poly):
        c = poly[i]
        if i == 0:
            term = str(c)
        else:
            mono = "t" if i == 1 else f"t^{i}"
            if c == 1:
                term = mono
            elif c == -1:
                term = f"-{mono}"
            else:
                term = f"{c}*{mono}"
        chunks.append(term)
    out = chunks[0]
    for term in chunks[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out
