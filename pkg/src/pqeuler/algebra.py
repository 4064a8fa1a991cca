"""Exact arithmetic kernel.

Multivariate Laurent polynomials over the fixed variable universe
``(x, y, p, q, s)`` with big-integer coefficients, rational-coefficient
polynomials in ``(x, y)``, truncated power series in ``t`` over either ring,
single-variable rational functions in ``q``, and the small q-calculus toolbox
(brackets, factorials, Pochhammer symbols).

Everything here is immutable after construction and all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

VARS = ("x", "y", "p", "q", "s")
NVARS = len(VARS)
VAR_INDEX = {v: i for i, v in enumerate(VARS)}
ZERO_EXP = (0,) * NVARS


class NotInvertibleError(ArithmeticError):
    """Raised when a series reciprocal or substitution needs a unit that isn't one."""


def _exp_mul(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


class LaurentPoly:
    """Laurent polynomial in x, y, p, q, s with arbitrary-precision integer
    coefficients.

    ``terms`` maps an exponent vector (5 ints, negatives allowed) to a nonzero
    coefficient.  The zero polynomial has an empty map.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {e: c for e, c in terms.items() if c} if terms else {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({ZERO_EXP: c}) if c else cls()

    @classmethod
    def var(cls, name: str, exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        e = [0] * NVARS
        e[VAR_INDEX[name]] = exp
        return cls({tuple(e): coeff})

    @classmethod
    def monomial(cls, coeff: int = 1, **exps: int) -> "LaurentPoly":
        e = [0] * NVARS
        for name, k in exps.items():
            e[VAR_INDEX[name]] = k
        return cls({tuple(e): coeff})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit_monomial(self) -> bool:
        """True for +/- a single monomial (invertible in the Laurent ring)."""
        if len(self.terms) != 1:
            return False
        (c,) = self.terms.values()
        return c in (1, -1)

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit_monomial():
            raise NotInvertibleError(f"not invertible: {self}")
        ((e, c),) = self.terms.items()
        return LaurentPoly({tuple(-k for k in e): c})

    def as_int(self) -> int:
        """Value of a constant polynomial; raises if any variable remains."""
        if not self.terms:
            return 0
        if set(self.terms) != {ZERO_EXP}:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms[ZERO_EXP]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            res = LaurentPoly.__new__(LaurentPoly)
            res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _exp_mul(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.unit_inverse() ** (-k)
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution ------------------------------------------------------

    def substitute(self, assignment: dict) -> "LaurentPoly":
        """Simultaneous substitution of variables by polynomials.

        Values may be ints or LaurentPoly.  A variable occurring with a
        negative exponent may only receive a +/- monomial (so the negative
        power stays representable).
        """
        if not assignment:
            return self
        subs = {}
        for name, val in assignment.items():
            idx = VAR_INDEX[name]
            subs[idx] = LaurentPoly.const(val) if isinstance(val, int) else val
        out = LaurentPoly()
        for e, c in self.terms.items():
            term = LaurentPoly.const(c)
            rest = list(e)
            for idx, val in subs.items():
                k = e[idx]
                rest[idx] = 0
                if k == 0:
                    continue
                if k < 0 and not val.is_unit_monomial():
                    raise NotInvertibleError(
                        f"non-invertible substitution {VARS[idx]} -> {val} "
                        f"at exponent {k}"
                    )
                term = term * (val ** k)
            mono = LaurentPoly({tuple(rest): 1})
            out = out + term * mono
        return out

    # -- presentation ------------------------------------------------------

    def sorted_terms(self):
        """Terms in canonical (ascending lex on exponent vector) order."""
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        # display in descending lex order, matching conventional print order
        for e, c in sorted(self.terms.items(), reverse=True):
            factors = []
            for name, k in zip(VARS, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            parts.append(("- " if c < 0 else "+ ") + body)
        head = parts[0]
        head = "-" + head[2:] if head.startswith("- ") else head[2:]
        return " ".join([head] + parts[1:])

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self) -> list:
        return [{"e": list(e), "c": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "LaurentPoly":
        return cls({tuple(item["e"]): int(item["c"]) for item in data})


class RatPoly:
    """Polynomial in x and y with rational coefficients (nonnegative exponents).

    Used for the exponential generating function coefficients; same canonical
    form rules as LaurentPoly.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[e] = c

    @classmethod
    def const(cls, c) -> "RatPoly":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, coeff, ex: int = 0, ey: int = 0) -> "RatPoly":
        return cls({(ex, ey): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        res = RatPoly.__new__(RatPoly)
        res.terms = out
        return res

    def __neg__(self):
        res = RatPoly.__new__(RatPoly)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatPoly()
            res = RatPoly.__new__(RatPoly)
            res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        res = RatPoly.__new__(RatPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly.const(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, xv, yv) -> Fraction:
        xv, yv = Fraction(xv), Fraction(yv)
        return sum((c * xv**a * yv**b for (a, b), c in self.terms.items()),
                   Fraction(0))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            factors = []
            if a:
                factors.append("x" if a == 1 else f"x^{a}")
            if b:
                factors.append("y" if b == 1 else f"y^{b}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(("- " if c < 0 else "+ ") + body)
        head = parts[0]
        head = "-" + head[2:] if head.startswith("- ") else head[2:]
        return " ".join([head] + parts[1:])

    __repr__ = __str__

    def to_json(self) -> list:
        out = []
        for (a, b), c in sorted(self.terms.items()):
            cs = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            out.append({"e": [a, b, 0, 0, 0], "c": cs})
        return out


# ---------------------------------------------------------------------------
# coefficient-ring adapters for truncated series


class CoeffRing:
    __slots__ = ("name", "zero", "one", "is_unit", "unit_inv")

    def __init__(self, name, zero, one, is_unit, unit_inv):
        self.name = name
        self.zero = zero
        self.one = one
        self.is_unit = is_unit
        self.unit_inv = unit_inv


LAURENT_RING = CoeffRing(
    "laurent",
    LaurentPoly(),
    LaurentPoly.const(1),
    lambda c: c.is_unit_monomial(),
    lambda c: c.unit_inverse(),
)


def _ratpoly_is_unit(c: RatPoly) -> bool:
    return len(c.terms) == 1 and (0, 0) in c.terms


def _ratpoly_inv(c: RatPoly) -> RatPoly:
    if not _ratpoly_is_unit(c):
        raise NotInvertibleError(f"not invertible: {c}")
    return RatPoly.const(1 / c.terms[(0, 0)])


RATPOLY_RING = CoeffRing("ratpoly", RatPoly(), RatPoly.const(1),
                         _ratpoly_is_unit, _ratpoly_inv)

FRACTION_RING = CoeffRing("fraction", Fraction(0), Fraction(1),
                          lambda c: c != 0, lambda c: 1 / c)


class TruncSeries:
    """Power series in t truncated at a fixed order N (coefficients 0..N)."""

    __slots__ = ("order", "coeffs", "ring")

    def __init__(self, order: int, coeffs, ring: CoeffRing):
        coeffs = list(coeffs)[: order + 1]
        coeffs += [ring.zero] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs
        self.ring = ring

    @classmethod
    def const(cls, c, order: int, ring: CoeffRing) -> "TruncSeries":
        return cls(order, [c], ring)

    @classmethod
    def one(cls, order: int, ring: CoeffRing) -> "TruncSeries":
        return cls(order, [ring.one], ring)

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k <= self.order else self.ring.zero

    def _check(self, other):
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")

    def __add__(self, other):
        self._check(other)
        return TruncSeries(self.order,
                           [a + b for a, b in zip(self.coeffs, other.coeffs)],
                           self.ring)

    def __sub__(self, other):
        self._check(other)
        return TruncSeries(self.order,
                           [a - b for a, b in zip(self.coeffs, other.coeffs)],
                           self.ring)

    def __neg__(self):
        return TruncSeries(self.order, [-a for a in self.coeffs], self.ring)

    def __mul__(self, other):
        self._check(other)
        n = self.order
        out = [self.ring.zero] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if isinstance(a, (LaurentPoly, RatPoly)) and a.is_zero():
                continue
            if a == self.ring.zero:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                out[i + j] = out[i + j] + a * b
        return TruncSeries(n, out, self.ring)

    def scale(self, c):
        return TruncSeries(self.order, [c * a for a in self.coeffs], self.ring)

    def shift(self, k: int):
        """Multiply by t^k; coefficients beyond the order are dropped."""
        return TruncSeries(self.order, [self.ring.zero] * k + self.coeffs,
                           self.ring)

    def recip(self) -> "TruncSeries":
        c0 = self.coeffs[0]
        if not self.ring.is_unit(c0):
            raise NotInvertibleError(f"not invertible: constant term {c0}")
        inv0 = self.ring.unit_inv(c0)
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = self.ring.zero
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out.append(-(inv0 * acc))
        return TruncSeries(self.order, out, self.ring)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if isinstance(c, (LaurentPoly, RatPoly)):
                if c.is_zero():
                    continue
                cs = str(c)
                multi = len(c.terms) > 1
            else:
                if c == 0:
                    continue
                cs = str(c)
                multi = False
            if k == 0:
                parts.append(cs)
                continue
            tpart = "t" if k == 1 else f"t^{k}"
            if cs == "1":
                parts.append(tpart)
            elif cs == "-1":
                parts.append(f"-{tpart}")
            elif multi:
                parts.append(f"({cs})*{tpart}")
            else:
                parts.append(f"{cs}*{tpart}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"order": self.order,
                "coeffs": [c.to_json() if hasattr(c, "to_json") else str(c)
                           for c in self.coeffs]}


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    return f * g


def series_recip(f: TruncSeries) -> TruncSeries:
    return f.recip()


def series_from_fraction(num: TruncSeries, den: TruncSeries) -> TruncSeries:
    return num * den.recip()


# ---------------------------------------------------------------------------
# q-calculus

P = LaurentPoly.var("p")
Q = LaurentPoly.var("q")


def bracket(u: LaurentPoly, v: LaurentPoly, n: int) -> LaurentPoly:
    """[n] with respect to the pair (u, v): sum of u^(n-1-i) v^i."""
    acc = LaurentPoly()
    for i in range(n):
        acc = acc + u ** (n - 1 - i) * v**i
    return acc


def pq_bracket(n: int) -> LaurentPoly:
    """(p,q)-integer [n] = p^(n-1) + p^(n-2) q + ... + q^(n-1); 0 for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return bracket(P, Q, n)


def q_bracket(n: int) -> LaurentPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return LaurentPoly({(0, 0, 0, i, 0): 1 for i in range(n)})


def q_factorial(n: int) -> LaurentPoly:
    acc = LaurentPoly.const(1)
    for i in range(1, n + 1):
        acc = acc * q_bracket(i)
    return acc


def q_pochhammer(base_exponent: int, step_exponent: int, k: int) -> LaurentPoly:
    """Product over i < k of (1 - q^(base + i*step)); e.g. (q^2;q^2)_k = (2,2,k)."""
    acc = LaurentPoly.const(1)
    for i in range(k):
        acc = acc * (LaurentPoly.const(1)
                     - LaurentPoly.var("q", base_exponent + i * step_exponent))
    return acc


def rising_factorial(a, k: int) -> Fraction:
    """(a)_k = a (a+1) ... (a+k-1); 1 when k = 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = Fraction(a)
    acc = Fraction(1)
    for i in range(k):
        acc *= a + i
    return acc


# ---------------------------------------------------------------------------
# rational functions in q

_Q_IDX = VAR_INDEX["q"]


def _q_only(poly: LaurentPoly) -> dict:
    """View a q-only LaurentPoly as {exponent: coeff}; raises otherwise."""
    out = {}
    for e, c in poly.terms.items():
        if any(e[i] for i in range(NVARS) if i != _Q_IDX):
            raise ValueError(f"not a q-only polynomial: {poly}")
        out[e[_Q_IDX]] = c
    return out


def _from_q_dict(d: dict) -> LaurentPoly:
    return LaurentPoly({(0, 0, 0, k, 0): c for k, c in d.items() if c})


def q_div_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly | None:
    """Exact quotient of q-only Laurent polynomials, or None if not divisible."""
    nd, dd = _q_only(num), _q_only(den)
    if not dd:
        raise ZeroDivisionError("division by zero polynomial")
    if not nd:
        return LaurentPoly()
    nmin, nmax = min(nd), max(nd)
    dmin, dmax = min(dd), max(dd)
    a = [Fraction(nd.get(k, 0)) for k in range(nmin, nmax + 1)]
    b = [Fraction(dd.get(k, 0)) for k in range(dmin, dmax + 1)]
    qlen = len(a) - len(b) + 1
    if qlen < 1:
        return None
    quot = [Fraction(0)] * qlen
    rem = a[:]
    lead = b[-1]
    for i in range(qlen - 1, -1, -1):
        coef = rem[i + len(b) - 1] / lead
        quot[i] = coef
        if coef:
            for j, bc in enumerate(b):
                rem[i + j] -= coef * bc
    if any(rem):
        return None
    shift = nmin - dmin
    out = {}
    for i, c in enumerate(quot):
        if c:
            if c.denominator != 1:
                return None
            out[i + shift] = c.numerator
    return _from_q_dict(out)


class RationalFunctionQ:
    """Quotient of two q-only Laurent polynomials; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        den = LaurentPoly.const(1) if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunctionQ":
        return cls(p)

    def __add__(self, other):
        return RationalFunctionQ(self.num * other.den + other.num * self.den,
                                 self.den * other.den)

    def __sub__(self, other):
        return RationalFunctionQ(self.num * other.den - other.num * self.den,
                                 self.den * other.den)

    def __mul__(self, other):
        return RationalFunctionQ(self.num * other.num, self.den * other.den)

    def __neg__(self):
        return RationalFunctionQ(-self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalFunctionQ(other)
        if not isinstance(other, RationalFunctionQ):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def normalize(self) -> LaurentPoly:
        """Clear the denominator; raises if the value is not a Laurent polynomial."""
        quot = q_div_exact(self.num, self.den)
        if quot is None:
            raise ArithmeticError("rational function does not reduce to a polynomial")
        return quot

    def __str__(self):
        return f"({self.num}) / ({self.den})"


QRAT_RING = CoeffRing(
    "qrat",
    RationalFunctionQ(LaurentPoly()),
    RationalFunctionQ(LaurentPoly.const(1)),
    lambda c: not c.num.is_zero(),
    lambda c: RationalFunctionQ(c.den, c.num),
)
