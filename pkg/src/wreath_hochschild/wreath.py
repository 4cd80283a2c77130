"""Hochschild (co)homology of S_n acting on n-fold tensor powers.

Given the graded dimensions of HH of a single algebra, the wreath-product
(co)homology decomposes as a sum over partitions of n: a part of size i
contributes one tensor factor, equal parts are merged by a super symmetric
power, and in cohomology each part of size i is shifted up by d(i-1).
Summing q^n times the Poincare polynomial over n produces a bivariate
series with an infinite-product form; both routes are implemented and the
named classical cases are additionally transcribed as literal products.
"""

from __future__ import annotations

from .betti import AlgebraPreset, BettiTable, super_sym_powers
from .partitions import partitions
from .series import BiSeries

PRESETS: dict[str, AlgebraPreset] = {
    # flat polynomial-type algebras, all with duality dimension 2
    "weyl": AlgebraPreset("weyl", 2, BettiTable({0: 1})),
    "trig": AlgebraPreset("trig", 2, BettiTable({0: 1, 1: 1})),
    "qweyl": AlgebraPreset("qweyl", 2, BettiTable({0: 1, 1: 2, 2: 1})),
    # the same three after crossing with the sign involution
    "z2_weyl": AlgebraPreset("z2_weyl", 2, BettiTable({0: 1, 2: 1})),
    "z2_trig": AlgebraPreset("z2_trig", 2, BettiTable({0: 1, 2: 2})),
    "z2_qweyl": AlgebraPreset("z2_qweyl", 2, BettiTable({0: 1, 2: 5})),
}


def gamma_preset(nu: int) -> AlgebraPreset:
    """Preset for a finite-subgroup crossed product with nu conjugacy classes."""
    if nu < 1:
        raise ValueError("nu must be a positive integer")
    return AlgebraPreset(f"gamma:{nu}", 2, BettiTable({0: 1, 2: nu - 1}))


def surface_preset(b0: int, b1: int, b2: int) -> AlgebraPreset:
    """User-supplied d=2 table (the orbifold / Hilbert-scheme use case)."""
    return AlgebraPreset("surface", 2, BettiTable({0: b0, 1: b1, 2: b2}))


def _validate(coh: BettiTable, d: int):
    if d <= 0 or d % 2:
        raise ValueError("duality dimension d must be even and positive")
    if coh.max_degree > d:
        raise ValueError("table support exceeds the duality dimension")


def hh_homology_wreath(hom: BettiTable, n: int) -> BettiTable:
    """Homology table of the wreath product, from the homology table of A.

    Sum over partitions of n; a part repeated p times contributes the
    p-th super symmetric power of the table.  No degree shift appears in
    homology.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return BettiTable({0: 1})
    powers = super_sym_powers(hom, n)
    total = BettiTable({})
    for lam in partitions(n):
        term = BettiTable({0: 1})
        for _, mult in lam.multiplicities().items():
            term = term.tensor(powers[mult])
        total = total.add(term)
    return total


def hh_cohomology_wreath(coh: BettiTable, d: int, n: int) -> BettiTable:
    """Cohomology table of the wreath product, from the cohomology of A.

    Same partition sum as in homology, but a part of size i is first
    shifted up by d(i-1).  The result is supported in [0, nd].
    """
    _validate(coh, d)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return BettiTable({0: 1})
    cache: dict[int, list[BettiTable]] = {}
    total = BettiTable({})
    for lam in partitions(n):
        term = BettiTable({0: 1})
        for i, mult in lam.multiplicities().items():
            if i not in cache:
                cache[i] = super_sym_powers(coh.shift(d * (i - 1)), n // i)
            term = term.tensor(cache[i][mult])
        total = total.add(term)
    return total


def generating_series_sum(
    coh: BettiTable, d: int, q_bound: int, t_bound: int | None = None
) -> BiSeries:
    """Sum_n q^n (Poincare polynomial of the n-th wreath product in t).

    Evaluated directly from the partition decomposition; this is the
    oracle route against which the infinite product is checked.
    """
    _validate(coh, d)
    if t_bound is None:
        t_bound = d * q_bound
    out = BiSeries(q_bound, t_bound)
    for n in range(q_bound + 1):
        table = hh_cohomology_wreath(coh, d, n)
        for deg, dim in table.dims().items():
            if deg <= t_bound:
                out.coeff[n][deg] = dim
    return out


def generating_series_product(
    coh: BettiTable, d: int, q_bound: int, t_bound: int | None = None
) -> BiSeries:
    """The product form of the same series.

    prod_{m>=1} prod_k (1 - q^m t^{k+d(m-1)})^{-b_k}   for even k,
                prod_k (1 + q^m t^{k+d(m-1)})^{+b_k}   for odd k,
    truncated at q^q_bound (factors with m > q_bound cannot contribute).
    """
    _validate(coh, d)
    if t_bound is None:
        t_bound = d * q_bound
    out = BiSeries.one(q_bound, t_bound)
    dims = coh.dims()
    for m in range(1, q_bound + 1):
        for k in sorted(dims):
            b = dims[k]
            t_exp = k + d * (m - 1)
            if k % 2 == 0:
                out = out.apply_factor(-1, m, t_exp, -b)
            else:
                out = out.apply_factor(1, m, t_exp, b)
    return out


# The six classical series, transcribed literally as factor lists.
# Each factor is (sign, t_slope, t_offset, power): for every m >= 1
# multiply by (1 + sign q^m t^{t_slope*m + t_offset})^power.
_CLOSED_FORMS: dict[str, list[tuple[int, int, int, int]]] = {
    "PA": [(-1, 2, -2, -1)],
    "PA_trig": [(-1, 2, -2, -1), (1, 2, -1, 1)],
    "PA_q": [(-1, 2, -2, -1), (-1, 2, 0, -1), (1, 2, -1, 2)],
    "PB": [(-1, 2, -2, -1), (-1, 2, 0, -1)],
    "PB_trig": [(-1, 2, -2, -1), (-1, 2, 0, -2)],
    "PB_q": [(-1, 2, -2, -1), (-1, 2, 0, -5)],
}

# preset whose product formula reproduces each closed form
CLOSED_FORM_PRESETS: dict[str, str] = {
    "PA": "weyl",
    "PA_trig": "trig",
    "PA_q": "qweyl",
    "PB": "z2_weyl",
    "PB_trig": "z2_trig",
    "PB_q": "z2_qweyl",
}


def closed_form(label: str, q_bound: int, t_bound: int | None = None) -> BiSeries:
    """Expand one of the six named closed-form products."""
    if label not in _CLOSED_FORMS:
        raise ValueError(f"unknown closed form {label!r}")
    if t_bound is None:
        t_bound = 2 * q_bound
    out = BiSeries.one(q_bound, t_bound)
    for m in range(1, q_bound + 1):
        for sign, slope, offset, power in _CLOSED_FORMS[label]:
            out = out.apply_factor(sign, m, slope * m + offset, power)
    return out


def gamma_series(nu: int, q_bound: int, t_bound: int | None = None) -> BiSeries:
    """prod_m (1 - q^m t^{2(m-1)})^{-1} (1 - q^m t^{2m})^{1-nu}."""
    if nu < 1:
        raise ValueError("nu must be a positive integer")
    if t_bound is None:
        t_bound = 2 * q_bound
    out = BiSeries.one(q_bound, t_bound)
    for m in range(1, q_bound + 1):
        out = out.apply_factor(-1, m, 2 * (m - 1), -1)
        if nu > 1:
            out = out.apply_factor(-1, m, 2 * m, 1 - nu)
    return out


def hilb_poincare(surface_coh: BettiTable, n: int) -> BettiTable:
    """Orbifold Poincare polynomial of the n-th symmetric power of a d=2 table.

    For the one-point table {0:1} this reproduces the Poincare polynomials
    of Hilbert schemes of points on the affine plane.
    """
    if surface_coh.max_degree > 2:
        raise ValueError("surface table must be supported in degrees [0, 2]")
    return hh_cohomology_wreath(surface_coh, 2, n)


def deformation_parameter_count(coh: BettiTable, d: int, n: int) -> int:
    """Number of deformation parameters of the n-th wreath product.

    Defined as the degree-2 entry of the wreath cohomology table.  For
    d = 2 this works out to b2 + b1(b1-1)/2 + 1; for d > 2 the extra +1
    disappears.  Requires a one-dimensional degree-0 part.
    """
    _validate(coh, d)
    if coh[0] != 1:
        raise ValueError("degree-0 entry must be 1")
    if n < 2:
        raise ValueError("n must be at least 2")
    return hh_cohomology_wreath(coh, d, n)[2]
