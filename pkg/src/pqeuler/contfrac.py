"""J- and S-fraction expansion, the two contraction transforms, and named
presets for every continued fraction used by the library.

Expansion is by convergents: the fraction is evaluated bottom-up with series
reciprocals, which mirrors the displayed fractions directly; the lattice
transfer computation provides the independent oracle.  A path of length N
never climbs above ceil(N/2), so depth ceil(N/2)+1 suffices (tested, not
assumed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import (
    CoeffRing,
    LAURENT_RING,
    LaurentPoly,
    TruncSeries,
    bracket,
    pq_bracket,
    q_bracket,
)


def _depth_for(order: int) -> int:
    return (order + 1) // 2 + 1


@dataclass(frozen=True)
class JFraction:
    """1 / (1 - b_0 t - ac_0 t^2 / (1 - b_1 t - ac_1 t^2 / ...)).

    ``ac`` gives the level products a_h * c_(h+1); individual a and c never
    matter for the expansion.
    """

    b: Callable[[int], LaurentPoly]
    ac: Callable[[int], LaurentPoly]
    depth: int | None = None

    def expand(self, order: int, ring: CoeffRing = LAURENT_RING) -> TruncSeries:
        return expand_j(self, order, ring)


@dataclass(frozen=True)
class SFraction:
    """1 / (1 - c_1 u / (1 - c_2 u / ...)) with u = t^power (power 1 or 2)."""

    c: Callable[[int], LaurentPoly]
    power: int = 1
    depth: int | None = None

    def expand(self, order: int, ring: CoeffRing = LAURENT_RING) -> TruncSeries:
        return expand_s(self, order, ring)


def expand_j(jf: JFraction, order: int,
             ring: CoeffRing = LAURENT_RING, depth: int | None = None) -> TruncSeries:
    depth = depth if depth is not None else (jf.depth or _depth_for(order))
    f = TruncSeries.one(order, ring)
    one = TruncSeries.one(order, ring)
    for h in range(depth - 1, -1, -1):
        inner = one - TruncSeries.const(jf.b(h), order, ring).shift(1) \
            - f.scale(jf.ac(h)).shift(2)
        f = inner.recip()
    return f


def expand_s(sf: SFraction, order: int,
             ring: CoeffRing = LAURENT_RING, depth: int | None = None) -> TruncSeries:
    levels = depth if depth is not None else (sf.depth or order // sf.power + 1)
    f = TruncSeries.one(order, ring)
    one = TruncSeries.one(order, ring)
    for k in range(levels, 0, -1):
        f = (one - f.scale(sf.c(k)).shift(sf.power)).recip()
    return f


def contract_even(sf: SFraction) -> JFraction:
    """Even contraction of a power-1 S-fraction:
    b_0 = c_1, b_h = c_2h + c_(2h+1), ac_h = c_(2h+1) c_(2h+2)."""
    if sf.power != 1:
        raise ValueError("contraction applies to power-1 S-fractions")
    c = sf.c

    def b(h):
        return c(1) if h == 0 else c(2 * h) + c(2 * h + 1)

    def ac(h):
        return c(2 * h + 1) * c(2 * h + 2)

    return JFraction(b=b, ac=ac)


def contract_odd(sf: SFraction):
    """Odd contraction: the whole fraction equals 1 + c_1 t J where J has
    b_h = c_(2h+1) + c_(2h+2) and ac_h = c_(2h+2) c_(2h+3).  Returns the
    affine prefix coefficient c_1 together with J."""
    if sf.power != 1:
        raise ValueError("contraction applies to power-1 S-fractions")
    c = sf.c

    def b(h):
        return c(2 * h + 1) + c(2 * h + 2)

    def ac(h):
        return c(2 * h + 2) * c(2 * h + 3)

    return c(1), JFraction(b=b, ac=ac)


def contract(sf: SFraction, variant: str):
    if variant == "even":
        return contract_even(sf)
    if variant == "odd":
        return contract_odd(sf)
    raise ValueError(f"unknown contraction variant {variant!r}")


def expand_odd_contraction(c1: LaurentPoly, jf: JFraction, order: int,
                           ring: CoeffRing = LAURENT_RING) -> TruncSeries:
    return TruncSeries.one(order, ring) + expand_j(jf, order, ring).scale(c1).shift(1)


# ---------------------------------------------------------------------------
# presets


@dataclass(frozen=True)
class Preset:
    name: str
    fraction: JFraction | SFraction
    t_prefix: int = 0          # multiply the expansion by t^t_prefix
    s_form: SFraction | None = None  # equivalent S-fraction form, when one exists

    def expand(self, order: int, ring: CoeffRing = LAURENT_RING) -> TruncSeries:
        series = self.fraction.expand(order, ring)
        return series.shift(self.t_prefix) if self.t_prefix else series


_ONE = LaurentPoly.const(1)
_Q = LaurentPoly.var("q")
_PS = LaurentPoly.monomial(1, p=1, s=1)


def _qpow(k: int) -> LaurentPoly:
    return LaurentPoly.var("q", k)


def _tangent_pq() -> Preset:
    return Preset("tangent-pq",
                  SFraction(c=lambda k: pq_bracket(k) * pq_bracket(k + 1), power=2),
                  t_prefix=1)


def _secant_pq() -> Preset:
    return Preset("secant-pq",
                  SFraction(c=lambda k: pq_bracket(k) * pq_bracket(k), power=2))


def _tangent_q() -> Preset:
    return Preset("tangent-q",
                  SFraction(c=lambda k: q_bracket(k) * q_bracket(k + 1), power=2),
                  t_prefix=1)


def _secant_q() -> Preset:
    return Preset("secant-q",
                  SFraction(c=lambda k: q_bracket(k) * q_bracket(k), power=2))


def _tangent_qstar() -> Preset:
    return Preset("tangent-qstar",
                  SFraction(c=lambda k: _qpow(2 * k - 1) * q_bracket(k) * q_bracket(k + 1),
                            power=2),
                  t_prefix=1)


def _secant_qstar() -> Preset:
    return Preset("secant-qstar",
                  SFraction(c=lambda k: _qpow(2 * (k - 1)) * q_bracket(k) ** 2,
                            power=2))


def _thm41() -> Preset:
    def b(h):
        return (LaurentPoly.monomial(1, x=1, y=1, p=h, s=2 * h)
                + (_ONE + LaurentPoly.monomial(1, x=1, q=1))
                * LaurentPoly.var("s", h) * bracket(_Q, _PS, h))

    def ac(h):
        # a_h c_(h+1) = x s^(2h+1) [h+1]^2 in (q, ps)
        br = bracket(_Q, _PS, h + 1)
        return LaurentPoly.monomial(1, x=1, s=2 * h + 1) * br * br

    return Preset("thm4.1", JFraction(b=b, ac=ac))


def _cf_a(x_val: LaurentPoly | None = None, y_val: LaurentPoly | None = None,
          name: str = "cf-A") -> Preset:
    xm = LaurentPoly.var("x") if x_val is None else x_val
    ym = LaurentPoly.var("y") if y_val is None else y_val

    def b(h):
        return xm * ym + (_ONE + xm * _Q) * q_bracket(h)

    def ac(h):
        return xm * q_bracket(h + 1) ** 2

    return Preset(name, JFraction(b=b, ac=ac))


def _cf_sz(x_val: LaurentPoly | None = None, y_val: LaurentPoly | None = None,
           name: str = "cf-SZ") -> Preset:
    xm = LaurentPoly.var("x") if x_val is None else x_val
    ym = LaurentPoly.var("y") if y_val is None else y_val

    def b(h):
        return ym * _qpow(2 * h) + (_ONE + xm) * _qpow(h) * q_bracket(h)

    def ac(h):
        return xm * _qpow(2 * h + 1) * q_bracket(h + 1) ** 2

    return Preset(name, JFraction(b=b, ac=ac))


_MINUS_ONE = LaurentPoly.const(-1)
_MINUS_INV_Q = LaurentPoly.var("q", -1, coeff=-1)


def _jv_tangent() -> Preset:
    base = _cf_a(x_val=_MINUS_ONE, y_val=LaurentPoly.const(1), name="jv-tangent")

    # the displayed alternating level sequence: c_(2i-1) = -[i], c_2i = [i]
    def c(k):
        i = (k + 1) // 2
        return -q_bracket(i) if k % 2 else q_bracket(i)

    return Preset(base.name, base.fraction, s_form=SFraction(c=c, power=1))


def _jv_secant() -> Preset:
    base = _cf_a(x_val=_MINUS_INV_Q, y_val=LaurentPoly(), name="jv-secant")

    # all b_h vanish, so this is already an S-fraction in t^2
    def c(h):
        return _qpow(-1) * q_bracket(h) ** 2 * (-1)

    return Preset(base.name, base.fraction, s_form=SFraction(c=c, power=2))


def _sz_tangent() -> Preset:
    base = _cf_sz(x_val=_MINUS_INV_Q, y_val=LaurentPoly.const(1), name="sz-tangent")

    # c_(2i-1) = q^(i-1) [i], c_2i = -q^(i-1) [i]
    def c(k):
        i = (k + 1) // 2
        mono = _qpow(i - 1) * q_bracket(i)
        return mono if k % 2 else -mono

    return Preset(base.name, base.fraction, s_form=SFraction(c=c, power=1))


def _sz_secant() -> Preset:
    base = _cf_sz(x_val=_MINUS_ONE, y_val=LaurentPoly(), name="sz-secant")

    def c(h):
        return -(_qpow(2 * h - 1) * q_bracket(h) ** 2)

    return Preset(base.name, base.fraction, s_form=SFraction(c=c, power=2))


_PRESET_BUILDERS = {
    "tangent-pq": _tangent_pq,
    "secant-pq": _secant_pq,
    "tangent-q": _tangent_q,
    "secant-q": _secant_q,
    "tangent-qstar": _tangent_qstar,
    "secant-qstar": _secant_qstar,
    "thm4.1": _thm41,
    "cf-A": _cf_a,
    "cf-SZ": _cf_sz,
    "jv-tangent": _jv_tangent,
    "jv-secant": _jv_secant,
    "sz-tangent": _sz_tangent,
    "sz-secant": _sz_secant,
}

PRESET_NAMES = tuple(_PRESET_BUILDERS)


def preset(name: str) -> Preset:
    try:
        builder = _PRESET_BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; known: {', '.join(PRESET_NAMES)}")
    return builder()
