"""Euler numbers and all their q- and (p,q)-refinements.

Integer E_n, the polynomials E_n(p,q), E_n(q), E*_n(q) (by enumeration and by
continued fraction), the exponential generating function of the
(excedance, fixed point) distribution, and the closed summation formulas
(the rational series, the parity-independent double sum, and their
q-analogues).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    FRACTION_RING,
    LAURENT_RING,
    LaurentPoly,
    RATPOLY_RING,
    RatPoly,
    RationalFunctionQ,
    TruncSeries,
    q_bracket,
    q_factorial,
    q_pochhammer,
    rising_factorial,
)
from .contfrac import preset
from .permstat import EnumerationCapError, iter_family_words, stat_tuple

DEFAULT_ENUM_CAP = 9
DEFAULT_FORMULA_CAP = 12

_TOHT, _THTO, _THOT = 10, 11, 12  # indices in the stat tuple


def e_pq(n: int, method: str = "enumerate", cap: int = DEFAULT_ENUM_CAP) -> LaurentPoly:
    """(p,q)-Euler number: the (31-2, companion-pattern) enumerator of falling
    alternating permutations (2-13 for odd n, 2-31 for even n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == "cf":
        pr = preset("tangent-pq") if n % 2 else preset("secant-pq")
        return pr.expand(n).coeff(n)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    if n > cap:
        raise EnumerationCapError(f"enumeration too large: n={n} exceeds cap {cap}")
    companion = _THOT if n % 2 else _THTO
    acc: dict = {}
    for word in iter_family_words("A", n, cap=max(cap, n)):
        st = stat_tuple(word)
        e = (0, 0, st[companion], st[_TOHT], 0)
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc)


def e_q(n: int, method: str = "enumerate", cap: int = DEFAULT_ENUM_CAP) -> LaurentPoly:
    return e_pq(n, method, cap).substitute({"p": 1})


def e_star_q(n: int, method: str = "enumerate", cap: int = DEFAULT_ENUM_CAP) -> LaurentPoly:
    return e_pq(n, method, cap).substitute({"p": LaurentPoly.var("q", 2)})


def e_int(n: int, method: str = "cf", cap: int = DEFAULT_ENUM_CAP) -> int:
    return e_pq(n, method, cap).substitute({"p": 1, "q": 1}).as_int()


# ---------------------------------------------------------------------------
# the exponential generating function of (exc, fix)


def egf_exc_fix(order: int) -> TruncSeries:
    """(1-x) exp(yt) / (exp(xt) - x exp(t)) as a t-series over rational
    polynomials in x, y.

    The denominator's common factor (1-x) is cancelled symbolically:
    exp(xt) - x exp(t) = (1-x) (1 - sum over n>=2 of
    x (1 + x + ... + x^(n-2)) t^n / n!).
    """
    ring = RATPOLY_RING
    den_coeffs = [RatPoly.const(1)]
    for n in range(1, order + 1):
        if n < 2:
            den_coeffs.append(RatPoly())
            continue
        geom = RatPoly({(i + 1, 0): 1 for i in range(n - 1)})  # x * (1+...+x^(n-2))
        den_coeffs.append(geom * Fraction(-1, math.factorial(n)))
    den = TruncSeries(order, den_coeffs, ring)
    expy = TruncSeries(order,
                       [RatPoly.monomial(Fraction(1, math.factorial(k)), ey=k)
                        for k in range(order + 1)],
                       ring)
    return expy * den.recip()


# ---------------------------------------------------------------------------
# closed formulas for E_n


def rz_series(order: int) -> TruncSeries:
    """Sum over m of m! t^m / prod_k (1 + (m-2k+1)^2 t^2), truncated."""
    ring = FRACTION_RING
    total = TruncSeries(order, [], ring)
    for m in range(order + 1):
        term = TruncSeries.const(Fraction(math.factorial(m)), order, ring).shift(m)
        for k in range(m // 2 + 1):
            c = (m - 2 * k + 1) ** 2
            factor = TruncSeries(order, [Fraction(1), Fraction(0), Fraction(c)], ring)
            term = term * factor.recip()
        total = total + term
    return total


def parity_formula(n: int) -> int:
    """The parity-independent double sum for E_n, evaluated exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    total = Fraction(0)
    for m in range(n + 1):
        if (n - m) % 2:
            continue
        outer = Fraction(math.factorial(m), 4 ** (m // 2))
        inner = Fraction(0)
        for k in range(m // 2 + 1):
            sign = (-1) ** ((n - m) // 2 + k)
            num = Fraction((m - 2 * k + 1) ** (2 * (n // 2)))
            den = (math.factorial(k) * math.factorial(m // 2 - k)
                   * rising_factorial(m - 2 * k + 2, k)
                   * rising_factorial((m + 1) // 2 - k + 1, m // 2 - k))
            inner += sign * num / den
        total += outer * inner
    if total.denominator != 1:
        raise ArithmeticError(f"parity formula did not clear: {total}")
    return total.numerator


def hrz_series(order: int) -> TruncSeries:
    """q-analogue of the rational series: sum over m of
    q^(m+1) [m]! t^m / prod_k (q^(m-2k+1) + [m-2k+1]^2 t^2),
    expanded exactly over Laurent polynomials in q."""
    ring = LAURENT_RING
    total = TruncSeries(order, [], ring)
    for m in range(order + 1):
        lead = LaurentPoly.var("q", m + 1) * q_factorial(m)
        term = TruncSeries.const(lead, order, ring).shift(m)
        for k in range(m // 2 + 1):
            j = m - 2 * k + 1
            factor = TruncSeries(
                order,
                [LaurentPoly.var("q", j), LaurentPoly(), q_bracket(j) ** 2],
                ring)
            term = term * factor.recip()
        total = total + term
    return total


def _q_parity_term(n: int, m: int, k: int) -> RationalFunctionQ:
    one_minus_q = LaurentPoly.const(1) - LaurentPoly.var("q")
    a_exp = (k * k + k * (n - m + 1) - (n - m) // 2
             + (m // 2) ** 2 - m * (n // 2))
    num = (LaurentPoly.const((-1) ** ((n - m) // 2 + k))
           * one_minus_q ** (2 * (m // 2))
           * q_bracket(m - 2 * k + 1) ** (2 * (n // 2))
           * LaurentPoly.var("q", a_exp))
    den = (q_pochhammer(2, 2, k)
           * q_pochhammer(2, 2, m // 2 - k)
           * q_pochhammer(2 * (m - 2 * k + 2), 2, k)
           * q_pochhammer(2 * ((m + 1) // 2 - k + 1), 2, m // 2 - k))
    return RationalFunctionQ(num, den)


def q_parity_formula(n: int) -> LaurentPoly:
    """The parity-independent double sum for E_n(q); the per-m partial sums
    are combined over a common denominator and must clear to a polynomial."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return LaurentPoly.const(1)
    total = LaurentPoly()
    for m in range(n + 1):
        if (n - m) % 2:
            continue
        part = RationalFunctionQ(LaurentPoly())
        for k in range(m // 2 + 1):
            part = part + _q_parity_term(n, m, k)
        total = total + q_factorial(m) * part.normalize()
    return total


# ---------------------------------------------------------------------------
# the consolidated table


@dataclass
class EulerTableRow:
    n: int
    e: int
    e_pq: LaurentPoly
    e_q: LaurentPoly
    e_star_q: LaurentPoly
    methods: tuple = ("enumeration", "cf")

    def to_json(self) -> dict:
        return {"n": self.n, "E": str(self.e),
                "E_pq": self.e_pq.to_json(),
                "E_q": self.e_q.to_json(),
                "E_star_q": self.e_star_q.to_json(),
                "methods": list(self.methods)}


def euler_table(nmax: int, enum_cap: int = DEFAULT_ENUM_CAP) -> list[EulerTableRow]:
    """Rows 0..nmax; every value cross-checked between the methods available
    at that n (enumeration up to the cap, continued fraction everywhere)."""
    rows = []
    for n in range(nmax + 1):
        by_cf = e_pq(n, method="cf")
        methods = ["cf"]
        if n <= enum_cap:
            by_enum = e_pq(n, method="enumerate")
            if by_enum != by_cf:
                raise AssertionError(f"method disagreement at n={n}")
            methods.insert(0, "enumeration")
        row = EulerTableRow(
            n=n,
            e=by_cf.substitute({"p": 1, "q": 1}).as_int(),
            e_pq=by_cf,
            e_q=by_cf.substitute({"p": 1}),
            e_star_q=by_cf.substitute({"p": LaurentPoly.var("q", 2)}),
            methods=tuple(methods),
        )
        rows.append(row)
    return rows
