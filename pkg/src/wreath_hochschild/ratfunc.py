"""Exact rational functions in one variable q with integer coefficients.

Scalars for the q-deformed computations.  Every value is kept fully
reduced: numerator and denominator are integer polynomials with no
common factor (computed by a primitive-part Euclidean gcd), the shared
integer content is divided out, and the denominator has positive leading
coefficient.  Reducing at construction keeps Gaussian elimination chains
from blowing up in degree.
"""

from __future__ import annotations

import math
from fractions import Fraction

# polynomials: tuples of ints, lowest degree first, no trailing zeros


def _strip(t):
    n = len(t)
    while n and t[n - 1] == 0:
        n -= 1
    return tuple(t[:n])


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _strip(out)


def _neg(a):
    return tuple(-c for c in a)


def _mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def _content(a):
    return math.gcd(*a) if a else 0


def _primitive(a):
    c = _content(a)
    if c in (0, 1):
        return a
    return tuple(x // c for x in a)


def _pseudo_rem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced mod b."""
    db = len(b) - 1
    lead = b[-1]
    r = list(a)
    for i in range(len(a) - 1 - db, -1, -1):
        coef = r[db + i]
        for j in range(len(r)):
            r[j] *= lead
        if coef:
            for j, y in enumerate(b):
                r[i + j] -= coef * y
    return _strip(r)


def _pgcd(a, b):
    """gcd of integer polynomials, primitive with positive leading coeff."""
    a, b = _primitive(a), _primitive(b)
    while b:
        a, b = b, _primitive(_pseudo_rem(a, b))
    if a and a[-1] < 0:
        a = _neg(a)
    return a if a else ()


def _exact_div(a, b):
    """Exact polynomial quotient a // b (remainder must be zero)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        raise ValueError("inexact polynomial division")
    r = list(a)
    q = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        coef = r[db + i]
        if coef % b[-1]:
            raise ValueError("inexact polynomial division")
        coef //= b[-1]
        q[i] = coef
        if coef:
            for j, y in enumerate(b):
                r[i + j] -= coef * y
    if _strip(r):
        raise ValueError("inexact polynomial division")
    return _strip(q)


class RatFunc:
    """num/den as reduced integer polynomials in q."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = _strip(tuple(int(c) for c in num))
        den = _strip(tuple(int(c) for c in den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = (1,)
        else:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _exact_div(num, g)
                den = _exact_div(den, g)
            c = math.gcd(_content(num), _content(den))
            if c > 1:
                num = tuple(x // c for x in num)
                den = tuple(x // c for x in den)
            if den[-1] < 0:
                num, den = _neg(num), _neg(den)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "RatFunc":
        return cls((n,))

    @classmethod
    def from_fraction(cls, f: Fraction) -> "RatFunc":
        return cls((f.numerator,), (f.denominator,))

    @classmethod
    def q_power(cls, k: int) -> "RatFunc":
        """q^k for any integer k (negative k gives 1/q^{-k})."""
        if k >= 0:
            return cls((0,) * k + (1,))
        return cls((1,), (0,) * (-k) + (1,))

    @classmethod
    def variable(cls) -> "RatFunc":
        return cls((0, 1))

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return RatFunc.from_int(x)
        if isinstance(x, Fraction):
            return RatFunc.from_fraction(x)
        return None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(
            _add(_mul(self.num, o.den), _mul(o.num, self.den)),
            _mul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RatFunc)
        out.num = _neg(self.num)
        out.den = self.den
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(_mul(self.num, o.num), _mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(_mul(self.num, o.den), _mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(_mul(o.num, self.den), _mul(o.den, self.num))

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc((1,)) / self ** (-k)
        out = RatFunc((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ----------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, q: Fraction) -> Fraction:
        num = sum(Fraction(c) * q ** i for i, c in enumerate(self.num))
        den = sum(Fraction(c) * q ** i for i, c in enumerate(self.den))
        return num / den

    def __repr__(self):
        n, d = _poly_str(self.num), _poly_str(self.den)
        return n if self.den == (1,) else f"({n})/({d})"


def _poly_str(p) -> str:
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            mono = "q" if i == 1 else f"q^{i}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")
