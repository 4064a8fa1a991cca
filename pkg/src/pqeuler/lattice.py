"""Motzkin and Dyck paths, Dyck path diagrammes, Laguerre histories.

Weighted sums come in two independent flavours: direct enumeration of the
objects (the oracle) and a transfer computation over (position, height) with
polynomial-valued state (the fast path).  The height of a step is always its
starting ordinate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .algebra import LaurentPoly

UP, LEVEL, DOWN = "U", "L", "D"
_DELTA = {UP: 1, LEVEL: 0, DOWN: -1}


def _exp_add(e1, e2):
    return (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2],
            e1[3] + e2[3], e1[4] + e2[4])

KINDS = ("motzkin", "dyck", "diagramme", "restricted_diagramme", "laguerre")

DEFAULT_LENGTH_CAP = 14


class MotzkinPath:
    """Step sequence over U, L, D staying nonnegative and ending at 0."""

    __slots__ = ("steps",)

    def __init__(self, steps):
        steps = tuple(steps)
        h = 0
        for s in steps:
            if s not in _DELTA:
                raise ValueError(f"bad step {s!r}")
            h += _DELTA[s]
            if h < 0:
                raise ValueError(f"path dips below zero: {''.join(steps)}")
        if h != 0:
            raise ValueError(f"path does not return to zero: {''.join(steps)}")
        self.steps = steps

    def __len__(self):
        return len(self.steps)

    def heights(self):
        """Starting ordinate of each step (h_1 .. h_len)."""
        out = []
        h = 0
        for s in self.steps:
            out.append(h)
            h += _DELTA[s]
        return out

    def is_dyck(self) -> bool:
        return LEVEL not in self.steps

    def __eq__(self, other):
        return isinstance(other, MotzkinPath) and self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __str__(self):
        return "".join(self.steps)

    def __repr__(self):
        return f"MotzkinPath({self})"


def dyck_path(steps) -> MotzkinPath:
    path = MotzkinPath(steps)
    if not path.is_dyck():
        raise ValueError("Dyck path may not contain level steps")
    return path


class DyckDiagramme:
    """Dyck path of length 2n with a choice sequence xi, 0 <= xi_k <= h_k.

    In the restricted form every down step additionally has xi_k < h_k.
    """

    __slots__ = ("path", "xi", "restricted")

    def __init__(self, path: MotzkinPath, xi, restricted: bool = False):
        if not path.is_dyck():
            raise ValueError("diagramme needs a Dyck path")
        xi = tuple(xi)
        if len(xi) != len(path):
            raise ValueError("xi length must match path length")
        for step, h, x in zip(path.steps, path.heights(), xi):
            hi = h - 1 if (restricted and step == DOWN) else h
            if not 0 <= x <= hi:
                raise ValueError(
                    f"xi out of range: step {step} at height {h} has xi={x}")
        self.path = path
        self.xi = xi
        self.restricted = restricted

    def __eq__(self, other):
        return (isinstance(other, DyckDiagramme)
                and self.path == other.path and self.xi == other.xi
                and self.restricted == other.restricted)

    def __hash__(self):
        return hash((self.path, self.xi, self.restricted))

    def __str__(self):
        return f"{self.path} xi={list(self.xi)}"

    __repr__ = __str__


class LaguerreHistory:
    """Motzkin path with a choice sequence xi; the ranges per step are
    0..h (up), -h..h (level), 0..h-1 (down)."""

    __slots__ = ("path", "xi")

    def __init__(self, path: MotzkinPath, xi):
        xi = tuple(xi)
        if len(xi) != len(path):
            raise ValueError("xi length must match path length")
        for step, h, x in zip(path.steps, path.heights(), xi):
            if step == UP:
                ok = 0 <= x <= h
            elif step == LEVEL:
                ok = -h <= x <= h
            else:
                ok = 0 <= x <= h - 1
            if not ok:
                raise ValueError(
                    f"xi out of range: step {step} at height {h} has xi={x}")
        self.path = path
        self.xi = xi

    def __eq__(self, other):
        return (isinstance(other, LaguerreHistory)
                and self.path == other.path and self.xi == other.xi)

    def __hash__(self):
        return hash((self.path, self.xi))

    def __str__(self):
        return f"{self.path} xi={list(self.xi)}"

    __repr__ = __str__


@dataclass(frozen=True)
class WeightSpec:
    """Height-indexed step weights plus an optional per-step valuation.

    ``up``/``level``/``down`` give the summed weight of a step at height h and
    drive the transfer computation.  ``valuation(step, h, xi)`` gives the
    weight of a single choice and drives enumeration of diagrammes and
    histories; for plain path kinds it is ignored.
    """

    up: Callable[[int], LaurentPoly] | None = None
    level: Callable[[int], LaurentPoly] | None = None
    down: Callable[[int], LaurentPoly] | None = None
    valuation: Callable[[str, int, int], LaurentPoly] | None = None


def _xi_range(kind: str, step: str, h: int) -> range:
    if kind == "laguerre":
        if step == UP:
            return range(0, h + 1)
        if step == LEVEL:
            return range(-h, h + 1)
        return range(0, h)
    if kind == "restricted_diagramme" and step == DOWN:
        return range(0, h)
    return range(0, h + 1)


def _iter_paths(length: int, allow_level: bool):
    """All nonnegative paths of the given length ending at 0, lexicographic in
    the step order U < L < D."""

    def rec(prefix, h, remaining):
        if remaining == 0:
            yield tuple(prefix)
            return
        if h + 1 <= remaining - 1:
            prefix.append(UP)
            yield from rec(prefix, h + 1, remaining - 1)
            prefix.pop()
        if allow_level and h <= remaining - 1:
            prefix.append(LEVEL)
            yield from rec(prefix, h, remaining - 1)
            prefix.pop()
        if h >= 1:
            prefix.append(DOWN)
            yield from rec(prefix, h - 1, remaining - 1)
            prefix.pop()

    yield from rec([], 0, length)


def enumerate_objects(kind: str, length: int, cap: int = DEFAULT_LENGTH_CAP):
    """Stream every object of the kind exactly once, deterministic order."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if length < 0:
        raise ValueError("length must be nonnegative")
    if kind in ("dyck", "diagramme", "restricted_diagramme") and length % 2:
        raise ValueError(f"{kind} objects have even length")
    if length > cap:
        raise ValueError(f"length {length} exceeds cap {cap}")
    allow_level = kind in ("motzkin", "laguerre")
    for steps in _iter_paths(length, allow_level):
        path = MotzkinPath(steps)
        if kind == "motzkin":
            yield path
        elif kind == "dyck":
            yield path
        else:
            heights = path.heights()
            ranges = [_xi_range(kind, s, h) for s, h in zip(steps, heights)]
            for xi in _product(ranges):
                if kind == "laguerre":
                    yield LaguerreHistory(path, xi)
                else:
                    yield DyckDiagramme(path, xi,
                                        restricted=(kind == "restricted_diagramme"))


def _product(ranges):
    if not ranges:
        yield ()
        return
    import itertools
    yield from itertools.product(*ranges)


def _step_weight(spec: WeightSpec, kind: str, step: str, h: int) -> LaurentPoly:
    fn = {UP: spec.up, LEVEL: spec.level, DOWN: spec.down}[step]
    if fn is None:
        raise ValueError(f"weight spec has no {step} weight")
    return fn(h)


def weighted_sum(kind: str, length: int, spec: WeightSpec,
                 method: str = "dp", cap: int = DEFAULT_LENGTH_CAP) -> LaurentPoly:
    """Sum of object weights over all objects of the kind and length.

    method "enumerate" walks every object (using the valuation for xi-kinds);
    method "dp" runs the height-indexed transfer computation and never touches
    individual objects.  The two agree exactly.
    """
    if method == "dp":
        return _weighted_sum_dp(kind, length, spec)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if kind in ("dyck", "diagramme", "restricted_diagramme") and length % 2:
        raise ValueError(f"{kind} objects have even length")
    if length > cap:
        raise ValueError(f"length {length} exceeds cap {cap}")
    allow_level = kind in ("motzkin", "laguerre")
    xi_kind = kind in ("diagramme", "restricted_diagramme", "laguerre")
    if xi_kind and spec.valuation is None:
        raise ValueError("xi-kind enumeration needs a valuation")

    choice_cache: dict = {}

    def choices(step, h):
        """All (exponent, coefficient) branches for one step at one height."""
        got = choice_cache.get((step, h))
        if got is None:
            out = []
            if xi_kind:
                for xi in _xi_range(kind, step, h):
                    out.extend(spec.valuation(step, h, xi).terms.items())
            else:
                out = list(_step_weight(spec, kind, step, h).terms.items())
            choice_cache[(step, h)] = got = tuple(out)
        return got

    acc: dict = {}

    def rec(pos, h, exp, coeff):
        remaining = length - pos
        if remaining == 0:
            acc[exp] = acc.get(exp, 0) + coeff
            return
        if h + 1 <= remaining - 1:
            for e, c in choices(UP, h):
                rec(pos + 1, h + 1, _exp_add(exp, e), coeff * c)
        if allow_level and h <= remaining - 1:
            for e, c in choices(LEVEL, h):
                rec(pos + 1, h, _exp_add(exp, e), coeff * c)
        if h >= 1:
            for e, c in choices(DOWN, h):
                rec(pos + 1, h - 1, _exp_add(exp, e), coeff * c)

    rec(0, 0, (0, 0, 0, 0, 0), 1)
    return LaurentPoly({e: c for e, c in acc.items() if c})


def _weighted_sum_dp(kind: str, length: int, spec: WeightSpec) -> LaurentPoly:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if kind in ("dyck", "diagramme", "restricted_diagramme") and length % 2:
        raise ValueError(f"{kind} objects have even length")
    allow_level = kind in ("motzkin", "laguerre")
    state = {0: LaurentPoly.const(1)}
    for pos in range(length):
        nxt: dict = {}
        remaining = length - pos
        for h, val in state.items():
            if h + 1 <= remaining - 1:
                w = _step_weight(spec, kind, UP, h)
                if not w.is_zero():
                    nxt[h + 1] = nxt.get(h + 1, LaurentPoly()) + val * w
            if allow_level and h <= remaining - 1:
                w = _step_weight(spec, kind, LEVEL, h)
                if not w.is_zero():
                    nxt[h] = nxt.get(h, LaurentPoly()) + val * w
            if h >= 1:
                w = _step_weight(spec, kind, DOWN, h)
                if not w.is_zero():
                    nxt[h - 1] = nxt.get(h - 1, LaurentPoly()) + val * w
        state = nxt
    return state.get(0, LaurentPoly())


# ---------------------------------------------------------------------------
# the standard weightings


def abc_weights(a=None, b=None, c=None) -> WeightSpec:
    """Plain Motzkin/Dyck weighting from height-indexed coefficients."""
    return WeightSpec(up=a, level=b, down=c)


def diagramme_pq_weights() -> WeightSpec:
    """Valuation p^(h-xi) q^xi on every step; summed weight [h+1] in (p, q)."""
    from .algebra import pq_bracket

    def val(step, h, xi):
        return LaurentPoly.monomial(1, p=h - xi, q=xi)

    return WeightSpec(up=lambda h: pq_bracket(h + 1),
                      down=lambda h: pq_bracket(h + 1),
                      valuation=val)


def restricted_diagramme_pq_weights() -> WeightSpec:
    """Down steps lose one p (xi < h there); summed weights [h+1] up, [h] down."""
    from .algebra import pq_bracket

    def val(step, h, xi):
        if step == DOWN:
            return LaurentPoly.monomial(1, p=h - 1 - xi, q=xi)
        return LaurentPoly.monomial(1, p=h - xi, q=xi)

    return WeightSpec(up=lambda h: pq_bracket(h + 1),
                      down=lambda h: pq_bracket(h),
                      valuation=val)


def laguerre_quintuple_weights() -> WeightSpec:
    """The five-case valuation carrying x^wex y^fix q^cros p^nest s^inv."""
    from .algebra import LaurentPoly as LP, bracket

    q = LP.var("q")
    ps = LP.monomial(1, p=1, s=1)

    def val(step, h, xi):
        if step == UP:
            return LP.monomial(1, x=1, q=xi) * ps ** (h - xi) * LP.var("s", 2 * h + 1)
        if step == LEVEL:
            if xi == 0:
                return LP.monomial(1, x=1, y=1) * ps**h * LP.var("s", h)
            if xi > 0:
                return LP.monomial(1, x=1, q=xi) * ps ** (h - xi) * LP.var("s", h)
            return LP.var("q", -xi - 1) * ps ** (h + xi) * LP.var("s", h)
        return LP.var("q", xi) * ps ** (h - 1 - xi)

    def up(h):
        return LP.monomial(1, x=1, s=2 * h + 1) * bracket(q, ps, h + 1)

    def level(h):
        return (LP.monomial(1, x=1, y=1, p=h, s=2 * h)
                + (LP.const(1) + LP.monomial(1, x=1, q=1))
                * LP.var("s", h) * bracket(q, ps, h))

    def down(h):
        return bracket(q, ps, h)

    return WeightSpec(up=up, level=level, down=down, valuation=val)
