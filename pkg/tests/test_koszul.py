import random
from fractions import Fraction

import pytest

from wreath_hochschild.koszul import (
    FilteredWindow,
    RankOneElement,
    build_cochain_complex,
    crossed_z2_cohomology,
    duality_check,
    epsilon,
    hh_cohomology_rank_one,
    multiply,
    window_keys,
)
from wreath_hochschild.ratfunc import RatFunc

M = RankOneElement.monomial


def test_defining_relations():
    # p x = x p - 1
    got = multiply(M("weyl", 0, 1), M("weyl", 1, 0))
    assert got == RankOneElement("weyl", {(1, 1): 1, (0, 0): -1})
    # p X = X p - X
    got = multiply(M("trig", 0, 1), M("trig", 1, 0))
    assert got == RankOneElement("trig", {(1, 1): 1, (1, 0): -1})
    # P X = q^{-1} X P
    got = multiply(M("qweyl", 0, 1), M("qweyl", 1, 0))
    assert got == RankOneElement("qweyl", {(1, 1): RatFunc.q_power(-1)})


def test_multiply_kind_mismatch():
    with pytest.raises(ValueError):
        multiply(M("weyl", 1, 0), M("trig", 1, 0))


def rand_element(kind, rng, deg=3):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        if kind == "weyl":
            a, b = rng.randint(0, deg), rng.randint(0, deg)
        elif kind == "trig":
            a, b = rng.randint(-deg, deg), rng.randint(0, deg)
        else:
            a, b = rng.randint(-deg, deg), rng.randint(-deg, deg)
        terms[(a, b)] = Fraction(rng.randint(-3, 3))
    return RankOneElement(kind, terms)


def test_multiply_associative():
    rng = random.Random(2)
    for kind in ("weyl", "trig", "qweyl"):
        for _ in range(8):
            f, g, h = (rand_element(kind, rng) for _ in range(3))
            assert multiply(multiply(f, g), h) == multiply(f, multiply(g, h))


def test_unit_and_linearity():
    rng = random.Random(5)
    one = RankOneElement.one("trig")
    f = rand_element("trig", rng)
    assert multiply(one, f) == f
    assert multiply(f, one) == f
    g = rand_element("trig", rng)
    h = rand_element("trig", rng)
    assert multiply(f + g, h) == multiply(f, h) + multiply(g, h)


def test_exponent_domains():
    with pytest.raises(ValueError):
        RankOneElement("weyl", {(-1, 0): 1})
    with pytest.raises(ValueError):
        RankOneElement("trig", {(0, -1): 1})
    RankOneElement("qweyl", {(-2, -3): 1})  # fine


def test_epsilon_is_an_involutive_automorphism():
    rng = random.Random(9)
    for kind in ("weyl", "trig", "qweyl"):
        for _ in range(6):
            f, g = rand_element(kind, rng), rand_element(kind, rng)
            assert epsilon(epsilon(f)) == f
            assert epsilon(multiply(f, g)) == multiply(epsilon(f), epsilon(g))


def test_window_counts():
    assert len(window_keys("weyl", 8)) == 45  # C(10, 2)
    assert len(window_keys("trig", 8)) == 81  # (N+1)^2
    assert len(window_keys("qweyl", 8)) == 145  # 2N^2 + 2N + 1


def test_window_too_small():
    with pytest.raises(ValueError):
        FilteredWindow(3)
    with pytest.raises(ValueError):
        hh_cohomology_rank_one("weyl", "id", 2)


def test_cochain_composite_is_zero():
    for kind in ("weyl", "trig", "qweyl"):
        for twist in ("id", "eps"):
            d0, d1, comp = build_cochain_complex(kind, twist, 4)
            assert all(not col for col in comp.values()), (kind, twist)
            assert set(d0) == set(window_keys(kind, 4))


def test_qweyl_untwisted_first_differential_is_diagonal():
    d0, _, _ = build_cochain_complex("qweyl", "id", 4)
    for (a, b), col in d0.items():
        ucomp = {k: v for (i, k), v in col.items() if i == 0}
        expect = {} if b == 0 else {(a, b): RatFunc.q_power(b) - RatFunc.from_int(1)}
        assert ucomp == expect


def test_weyl_kernel_is_constants():
    d0, _, _ = build_cochain_complex("weyl", "id", 6)
    # only the constant monomial is killed by both commutators
    zero_cols = [key for key, col in d0.items() if not col]
    assert zero_cols == [(0, 0)]


def test_cohomology_dimensions():
    assert hh_cohomology_rank_one("weyl", "id", 8) == (1, 0, 0)
    assert hh_cohomology_rank_one("trig", "id", 8) == (1, 1, 0)
    assert hh_cohomology_rank_one("qweyl", "id", 8) == (1, 2, 1)
    assert hh_cohomology_rank_one("weyl", "eps", 8) == (0, 0, 1)
    assert hh_cohomology_rank_one("trig", "eps", 8) == (0, 0, 2)
    assert hh_cohomology_rank_one("qweyl", "eps", 8) == (0, 0, 4)


def test_crossed_product_dimensions():
    assert crossed_z2_cohomology("weyl", 8) == (1, 0, 1)
    assert crossed_z2_cohomology("trig", 8) == (1, 0, 2)
    assert crossed_z2_cohomology("qweyl", 8) == (1, 0, 5)


def test_duality_reports():
    for kind in ("weyl", "trig", "qweyl"):
        rep = duality_check(kind)
        assert rep.passed, (kind, rep.lines)
        assert rep.name == f"koszul self-duality {kind}"
