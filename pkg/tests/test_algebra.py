import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pqeuler.algebra import (
    FRACTION_RING,
    LAURENT_RING,
    LaurentPoly,
    NotInvertibleError,
    RatPoly,
    RationalFunctionQ,
    TruncSeries,
    bracket,
    pq_bracket,
    q_bracket,
    q_div_exact,
    q_factorial,
    q_pochhammer,
    rising_factorial,
)

exponents = st.integers(min_value=-3, max_value=4)
coeffs = st.integers(min_value=-9, max_value=9)


@st.composite
def laurent_polys(draw):
    n_terms = draw(st.integers(min_value=0, max_value=5))
    terms = {}
    for _ in range(n_terms):
        e = tuple(draw(exponents) for _ in range(5))
        c = draw(coeffs)
        if c:
            terms[e] = c
    return LaurentPoly(terms)


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LaurentPoly() == a
    assert a * LaurentPoly.const(1) == a
    assert a - a == LaurentPoly()


@given(laurent_polys())
def test_json_round_trip(p):
    data = json.loads(json.dumps(p.to_json()))
    assert LaurentPoly.from_json(data) == p


def test_sorted_terms_ascending_lex():
    p = LaurentPoly.var("q") + LaurentPoly.var("p") + LaurentPoly.const(3)
    exps = [e for e, _ in p.sorted_terms()]
    assert exps == sorted(exps)


def test_unit_monomial_inverse():
    m = LaurentPoly.monomial(-1, q=2, s=-1)
    assert m * m.unit_inverse() == LaurentPoly.const(1)
    with pytest.raises(NotInvertibleError):
        (LaurentPoly.var("q") + 1).unit_inverse()


def test_negative_power_substitution_guard():
    p = LaurentPoly.var("q", -1)
    assert p.substitute({"q": LaurentPoly.var("s")}) == LaurentPoly.var("s", -1)
    with pytest.raises(NotInvertibleError):
        p.substitute({"q": LaurentPoly.var("s") + 1})


def test_substitute_numeric():
    p = pq_bracket(4)  # p^3 + p^2 q + p q^2 + q^3
    assert p.substitute({"p": 1, "q": 1}).as_int() == 4
    assert p.substitute({"p": 1}) == q_bracket(4)


def test_str_format():
    p = pq_bracket(2) * pq_bracket(2) + 1
    assert str(p) == "p^2 + 2*p*q + q^2 + 1"
    assert str(LaurentPoly()) == "0"
    assert str(LaurentPoly.var("q", -1, coeff=-1)) == "-q^-1"


def test_brackets():
    assert q_bracket(1) == LaurentPoly.const(1)
    assert pq_bracket(0) == LaurentPoly()
    # [n] in (q^2, q) equals q^(n-1) [n]_q
    for n in range(1, 7):
        lhs = bracket(LaurentPoly.var("q", 2), LaurentPoly.var("q"), n)
        assert lhs == LaurentPoly.var("q", n - 1) * q_bracket(n)
    assert q_factorial(3) == q_bracket(1) * q_bracket(2) * q_bracket(3)


def test_q_pochhammer_and_rising_factorial():
    # (q^2; q^2)_2 = (1 - q^2)(1 - q^4)
    want = (LaurentPoly.const(1) - LaurentPoly.var("q", 2)) * \
        (LaurentPoly.const(1) - LaurentPoly.var("q", 4))
    assert q_pochhammer(2, 2, 2) == want
    assert rising_factorial(3, 4) == Fraction(3 * 4 * 5 * 6)
    assert rising_factorial(3, 0) == 1


def test_series_recip_is_inverse():
    order = 8
    f = TruncSeries(order, [LaurentPoly.const(1), q_bracket(2), pq_bracket(3)],
                    LAURENT_RING)
    one = TruncSeries.one(order, LAURENT_RING)
    assert f * f.recip() == one


def test_series_recip_needs_unit_constant():
    # a bare monomial is a Laurent unit, so its reciprocal exists
    f = TruncSeries(4, [LaurentPoly.var("q")], LAURENT_RING)
    assert f * f.recip() == TruncSeries.one(4, LAURENT_RING)
    g = TruncSeries(4, [LaurentPoly.var("q") + 1], LAURENT_RING)
    with pytest.raises(NotInvertibleError):
        g.recip()
    with pytest.raises(NotInvertibleError):
        TruncSeries(4, [], LAURENT_RING).recip()


def test_series_shift_and_coeff():
    f = TruncSeries.const(Fraction(3), 5, FRACTION_RING).shift(2)
    assert f.coeff(2) == 3
    assert f.coeff(0) == 0
    assert f.coeff(9) == 0


def test_series_json():
    f = TruncSeries(2, [LaurentPoly.const(1), q_bracket(2)], LAURENT_RING)
    data = f.to_json()
    assert data["order"] == 2
    assert len(data["coeffs"]) == 3


def test_ratpoly_arithmetic():
    x = RatPoly.monomial(1, ex=1)
    y = RatPoly.monomial(1, ey=1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.evaluate(Fraction(2), Fraction(3)) == 4 - 9


def test_q_div_exact():
    num = q_bracket(6) * q_bracket(4)
    assert q_div_exact(num, q_bracket(4)) == q_bracket(6)
    assert q_div_exact(q_bracket(3), q_bracket(2)) is None
    shifted = num * LaurentPoly.var("q", -2)
    den = q_bracket(4) * LaurentPoly.var("q", -1)
    assert q_div_exact(shifted, den) == q_bracket(6) * LaurentPoly.var("q", -1)


def test_rational_function_q():
    a = RationalFunctionQ(q_bracket(2), q_bracket(3))
    b = RationalFunctionQ(q_bracket(2) * q_bracket(5), q_bracket(3) * q_bracket(5))
    assert a == b
    total = a - b
    assert total.normalize() == LaurentPoly()
    c = RationalFunctionQ(q_bracket(2) * q_bracket(3), q_bracket(3))
    assert c.normalize() == q_bracket(2)
