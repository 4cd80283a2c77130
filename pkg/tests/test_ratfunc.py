import random
from fractions import Fraction

from wreath_hochschild.ratfunc import RatFunc


def rand_ratfunc(rng, deg=3):
    num = [rng.randint(-4, 4) for _ in range(rng.randint(1, deg + 1))]
    den = [rng.randint(-4, 4) for _ in range(rng.randint(1, deg + 1))]
    if not any(den):
        den = [1]
    return RatFunc(num, den)


def test_basic_identities():
    q = RatFunc.variable()
    one = RatFunc.from_int(1)
    zero = RatFunc.from_int(0)
    assert q - q == zero
    assert q * one == q
    assert q / q == one
    assert not zero
    assert bool(q)
    assert q + 1 == RatFunc((1, 1))
    assert 1 - q == RatFunc((1, -1))


def test_normalization():
    # 2/4 reduces, (q^2-1)/(q-1) reduces, denominator sign is fixed
    assert RatFunc((2,), (4,)) == RatFunc((1,), (2,))
    assert RatFunc((-1, 0, 1), (-1, 1)) == RatFunc((1, 1))
    r = RatFunc((1,), (-1, -1))
    assert r.den == (1, 1) and r.num == (-1,)
    assert RatFunc((2, 2), (4,)) == RatFunc((1, 1), (2,))


def test_q_power():
    q = RatFunc.variable()
    assert RatFunc.q_power(3) == q * q * q
    assert RatFunc.q_power(-2) * q * q == 1
    assert RatFunc.q_power(0) == 1


def test_pow():
    q = RatFunc.variable()
    assert (q + 1) ** 2 == q * q + 2 * q + 1
    assert (q + 1) ** 0 == 1
    assert q ** -2 == RatFunc.q_power(-2)


def test_fraction_scalars():
    q = RatFunc.variable()
    half = Fraction(1, 2)
    assert half * (q + q) == q
    assert (q + 1) * half + (q + 1) * half == q + 1
    assert RatFunc.from_fraction(Fraction(3, 6)) == RatFunc((1,), (2,))


def test_field_axioms_random():
    rng = random.Random(17)
    for _ in range(60):
        a, b, c = (rand_ratfunc(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a + b == b + a
        assert (a - b) + b == a
        if c:
            assert a * c / c == a


def _den_value(r, qv):
    return sum(Fraction(c) * qv ** i for i, c in enumerate(r.den))


def test_evaluation_is_homomorphism():
    rng = random.Random(5)
    for _ in range(40):
        a, b = rand_ratfunc(rng), rand_ratfunc(rng)
        for qv in (Fraction(2), Fraction(1, 3), Fraction(-5, 2)):
            s, p = a + b, a * b
            if any(_den_value(r, qv) == 0 for r in (a, b, s, p)):
                continue  # qv is a pole
            assert s.evaluate(qv) == a.evaluate(qv) + b.evaluate(qv)
            assert p.evaluate(qv) == a.evaluate(qv) * b.evaluate(qv)


def test_zero_denominator_rejected():
    try:
        RatFunc((1,), ())
    except ZeroDivisionError:
        pass
    else:
        assert False


def test_repr_readable():
    q = RatFunc.variable()
    assert repr(q + 1) == "1 + q"
    assert repr(1 / (1 - q)) in ("(1)/(1 - q)", "(-1)/(-1 + q)")
