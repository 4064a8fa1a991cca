"""Permutations, their statistics, and the permutation families.

Words are in one-line notation on 1..n.  The global-statistics kernel is the
compiled extension ``_statcore`` when available, with ``_statpure`` as the
pure-Python fallback; set PQEULER_PURE=1 to force the fallback.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, asdict

from .algebra import LaurentPoly, VARS
from ._statpure import STAT_FIELDS, stat_tuple as _stat_tuple_pure

if os.environ.get("PQEULER_PURE"):
    stat_tuple = _stat_tuple_pure
    BACKEND = "pure"
else:
    try:
        from ._statcore import stat_tuple  # type: ignore[no-redef]
        BACKEND = "compiled"
    except ImportError:
        stat_tuple = _stat_tuple_pure
        BACKEND = "pure"

STAT_INDEX = {name: i for i, name in enumerate(STAT_FIELDS)}

WORKERS_ENV = "PQEULER_WORKERS"
DEFAULT_CAP = 11


class EnumerationCapError(ValueError):
    """Raised when an exhaustive enumeration would exceed the configured cap."""


@dataclass(frozen=True)
class StatRecord:
    n: int
    exc: int
    wex: int
    fix: int
    des: int
    ndes: int
    maj: int
    inv: int
    cros: int
    nest: int
    toht: int
    thto: int
    thot: int
    fmax: int
    mad: int
    suc: int
    adj: int

    def to_json(self) -> dict:
        return asdict(self)


class Permutation:
    """A word on [n] in one-line notation (1-based values and positions)."""

    __slots__ = ("word",)

    def __init__(self, word):
        word = tuple(word)
        n = len(word)
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {word}")
        self.word = word

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text:
            return cls(int(tok) for tok in text.split(","))
        return cls(int(ch) for ch in text)

    def __str__(self):
        if self.n <= 9:
            return "".join(str(v) for v in self.word)
        return ",".join(str(v) for v in self.word)

    def __repr__(self):
        return f"Permutation({self})"


def basic_stats(sigma) -> StatRecord:
    word = sigma.word if isinstance(sigma, Permutation) else tuple(sigma)
    return StatRecord(*stat_tuple(word))


# ---------------------------------------------------------------------------
# per-index statistics (k is a 1-based position or a value, per each
# statistic's own definition)


def _word(sigma):
    return sigma.word if isinstance(sigma, Permutation) else tuple(sigma)


def cros_k(sigma, k: int) -> int:
    """Crossing index anchored at k: l < k <= s_l < s_k or s_k < s_l < k < l."""
    w = _word(sigma)
    n = len(w)
    sk = w[k - 1]
    count = 0
    for l in range(1, n + 1):
        sl = w[l - 1]
        if l < k <= sl < sk:
            count += 1
        elif sk < sl < k < l:
            count += 1
    return count


def nest_k(sigma, k: int) -> int:
    """Nesting index anchored at k: l < k <= s_k < s_l or s_l < s_k < k < l."""
    w = _word(sigma)
    n = len(w)
    sk = w[k - 1]
    count = 0
    for l in range(1, n + 1):
        sl = w[l - 1]
        if l < k <= sk < sl:
            count += 1
        elif sl < sk < k < l:
            count += 1
    return count


def pattern_k(sigma, k: int, which: str) -> int:
    """Embracing number of the value k: occurrences of the given vincular
    pattern whose middle (dashed) letter is k.

    which is one of "31-2" (left embracing), "2-31" (right embracing) or
    "2-13".
    """
    w = _word(sigma)
    n = len(w)
    pos = w.index(k) + 1
    count = 0
    for l in range(1, n):
        a, b = w[l - 1], w[l]
        if which == "31-2":
            if l + 1 < pos and a > k > b:
                count += 1
        elif which == "2-31":
            if pos < l and a > k > b:
                count += 1
        elif which == "2-13":
            if pos < l and a < k < b:
                count += 1
        else:
            raise ValueError(f"unknown pattern {which!r}")
    return count


def inv_parts(sigma, k: int):
    """Sizes of the four inversion classes anchored at k (positions for the
    first three, value for the fourth)."""
    w = _word(sigma)
    n = len(w)
    parts = [0, 0, 0, 0]
    for i in range(1, n + 1):
        si = w[i - 1]
        for j in range(i + 1, n + 1):
            sj = w[j - 1]
            if si <= sj:
                continue
            if j <= sj:
                if k == j:
                    parts[0] += 1
            elif sj <= i:
                if k == i:
                    if si < i:
                        parts[1] += 1
                    else:
                        parts[2] += 1
            elif i < sj:  # i < s_j < j
                if k == sj:
                    parts[3] += 1
    return tuple(parts)


def inv_k(sigma, k: int) -> int:
    return sum(inv_parts(sigma, k))


CYCLIC_TYPES = ("cyclic-valley", "cyclic-peak", "cyclic-double-ascent",
                "cyclic-double-descent", "fixed")


def cyclic_type(sigma, k: int) -> str:
    w = _word(sigma)
    sk = w[k - 1]
    if sk == k:
        return "fixed"
    ik = w.index(k) + 1
    if ik > k < sk:
        return "cyclic-valley"
    if ik < k > sk:
        return "cyclic-peak"
    if ik < k < sk:
        return "cyclic-double-ascent"
    return "cyclic-double-descent"


# ---------------------------------------------------------------------------
# permutation families

FAMILIES = ("S", "D", "Dstar", "A", "Astar", "Aprime", "Adoubleprime")


def is_falling_alternating(word) -> bool:
    """s1 > s2 < s3 > s4 ..."""
    for i in range(len(word) - 1):
        if i % 2 == 0:
            if word[i] < word[i + 1]:
                return False
        elif word[i] > word[i + 1]:
            return False
    return True


def is_alternating(word) -> bool:
    """s1 < s2 > s3 < s4 ..."""
    for i in range(len(word) - 1):
        if i % 2 == 0:
            if word[i] > word[i + 1]:
                return False
        elif word[i] < word[i + 1]:
            return False
    return True


def is_derangement(word) -> bool:
    return all(v != i for i, v in enumerate(word, start=1))


def is_coderangement(word) -> bool:
    """No foremaximum: every left-to-right maximum is a descent."""
    n = len(word)
    running_max = 0
    for i in range(n):
        v = word[i]
        if v > running_max:
            running_max = v
            if i == n - 1 or v < word[i + 1]:
                return False
    return True


def family_contains(family: str, word) -> bool:
    n = len(word)
    if family == "S":
        return True
    if family == "D":
        return is_derangement(word)
    if family == "Dstar":
        return is_coderangement(word)
    if family == "A":
        return is_falling_alternating(word)
    if family == "Astar":
        return is_alternating(word)
    if family == "Aprime":
        return n % 2 == 1 and is_falling_alternating(word)
    if family == "Adoubleprime":
        return n % 2 == 0 and is_falling_alternating(word)
    raise ValueError(f"unknown family {family!r}")


def iter_family_words(family: str, n: int, cap: int = DEFAULT_CAP):
    """Words of the family in lexicographic order (raw tuples)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise EnumerationCapError(
            f"enumeration too large: n={n} exceeds cap {cap}")
    if n == 0:
        if family in ("S", "A", "Astar"):
            yield ()
        return
    for word in itertools.permutations(range(1, n + 1)):
        if family_contains(family, word):
            yield word


def family_iter(family: str, n: int, cap: int = DEFAULT_CAP):
    for word in iter_family_words(family, n, cap):
        yield Permutation(word)


# ---------------------------------------------------------------------------
# statistic-generating polynomials

# weight: {variable: {statistic: integer exponent coefficient}}, e.g. the
# quintuple weight x^wex y^fix q^cros p^nest s^inv is
#   {"x": {"wex": 1}, "y": {"fix": 1}, "q": {"cros": 1},
#    "p": {"nest": 1}, "s": {"inv": 1}}

QUINTUPLE_WEIGHT = {"x": {"wex": 1}, "y": {"fix": 1}, "q": {"cros": 1},
                    "p": {"nest": 1}, "s": {"inv": 1}}
LINEAR_QUINTUPLE_WEIGHT = {"x": {"ndes": 1}, "y": {"fmax": 1},
                           "q": {"toht": 1}, "p": {"thto": 1}, "s": {"mad": 1}}


def _weight_plan(weight: dict):
    plan = []
    for var in VARS:
        stats = weight.get(var, {})
        for stat in stats:
            if stat not in STAT_INDEX:
                raise ValueError(f"unknown statistic {stat!r}")
        plan.append(tuple((STAT_INDEX[stat], coeff)
                          for stat, coeff in stats.items()))
    return tuple(plan)


def _accumulate(family: str, n: int, plan, firsts=None) -> dict:
    acc: dict = {}
    if n == 0:
        if family in ("S", "A", "Astar"):
            acc[(0,) * len(VARS)] = 1
        return acc
    firsts = range(1, n + 1) if firsts is None else firsts
    values = list(range(1, n + 1))
    for first in firsts:
        rest = [v for v in values if v != first]
        for tail in itertools.permutations(rest):
            word = (first,) + tail
            if not family_contains(family, word):
                continue
            st = stat_tuple(word)
            e = tuple(sum(c * st[si] for si, c in entries)
                      for entries in plan)
            acc[e] = acc.get(e, 0) + 1
    return acc


def _accumulate_task(args):
    family, n, plan, firsts = args
    return _accumulate(family, n, plan, firsts)


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def stat_polynomial(family: str, n: int, weight: dict,
                    cap: int = DEFAULT_CAP, workers: int | None = None,
                    parallel_threshold: int = 9) -> LaurentPoly:
    """Sum of the weight monomial over the family.

    Enumeration is split by first letter across processes when ``workers`` > 1
    and n >= parallel_threshold; the result is independent of the split.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n > cap:
        raise EnumerationCapError(
            f"enumeration too large: n={n} exceeds cap {cap}")
    plan = _weight_plan(weight)
    workers = default_workers() if workers is None else workers
    if workers > 1 and n >= parallel_threshold:
        chunks = [(family, n, plan, [first]) for first in range(1, n + 1)]
        acc: dict = {}
        with ProcessPoolExecutor(max_workers=min(workers, n)) as pool:
            for part in pool.map(_accumulate_task, chunks):
                for e, c in part.items():
                    acc[e] = acc.get(e, 0) + c
    else:
        acc = _accumulate(family, n, plan)
    return LaurentPoly(acc)


def family_size(family: str, n: int, cap: int = DEFAULT_CAP) -> int:
    if family == "S":
        return math.factorial(n)
    return sum(1 for _ in iter_family_words(family, n, cap))
