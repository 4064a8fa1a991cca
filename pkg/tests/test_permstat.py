import itertools

import pytest
from hypothesis import given, strategies as st

from pqeuler.permstat import (
    EnumerationCapError,
    FAMILIES,
    Permutation,
    QUINTUPLE_WEIGHT,
    basic_stats,
    cros_k,
    cyclic_type,
    family_iter,
    family_size,
    inv_k,
    inv_parts,
    is_coderangement,
    iter_family_words,
    nest_k,
    pattern_k,
    stat_polynomial,
)

# ---------------------------------------------------------------------------
# independent oracles, written directly from the definitions


def naive_exc(w):
    return sum(1 for i, v in enumerate(w, 1) if v > i)


def naive_wex(w):
    return sum(1 for i, v in enumerate(w, 1) if v >= i)


def naive_maj(w):
    return sum(i for i in range(1, len(w)) if w[i - 1] > w[i])


def naive_inv(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
               if w[i] > w[j])


def naive_cros(w):
    n = len(w)
    return sum(1 for i in range(1, n + 1) for j in range(1, n + 1)
               if (i < j <= w[i - 1] < w[j - 1])
               or (w[i - 1] < w[j - 1] < i < j))


def naive_nest(w):
    n = len(w)
    return sum(1 for i in range(1, n + 1) for j in range(1, n + 1)
               if (i < j <= w[j - 1] < w[i - 1])
               or (w[j - 1] < w[i - 1] < i < j))


def naive_toht(w):
    # 31-2: positions i < j with w[i] > w[i+1] and w[i] > w[j] > w[i+1]
    n = len(w)
    return sum(1 for i in range(n - 1) for j in range(i + 2, n)
               if w[i] > w[j] > w[i + 1])


def naive_thto(w):
    # 2-31: positions j < i with w[i] > w[i+1] and w[i] > w[j] > w[i+1]
    n = len(w)
    return sum(1 for i in range(n - 1) for j in range(i)
               if w[i] > w[j] > w[i + 1])


def naive_thot(w):
    # 2-13: positions j < i with w[i] < w[i+1] and w[i] < w[j] < w[i+1]
    n = len(w)
    return sum(1 for i in range(n - 1) for j in range(i)
               if w[i] < w[j] < w[i + 1])


def naive_fmax(w):
    count = 0
    for i, v in enumerate(w):
        if v == max(w[:i + 1]) and (i == len(w) - 1 or v < w[i + 1]):
            count += 1
    return count


def naive_suc(w):
    ext = list(w) + [len(w) + 1]
    return sum(1 for i in range(len(w)) if ext[i + 1] == ext[i] + 1)


def naive_adj(w):
    # occurrences of w[i+1] = w[i] - 1, with w[n+1] = 0
    ext = list(w) + [0]
    return sum(1 for i in range(len(w)) if ext[i + 1] == ext[i] - 1)


@pytest.mark.parametrize("n", range(0, 7))
def test_stats_against_naive(n):
    for w in itertools.permutations(range(1, n + 1)):
        st_rec = basic_stats(w)
        assert st_rec.exc == naive_exc(w)
        assert st_rec.wex == naive_wex(w)
        assert st_rec.fix == sum(1 for i, v in enumerate(w, 1) if v == i)
        assert st_rec.des == sum(1 for i in range(n - 1) if w[i] > w[i + 1])
        assert st_rec.ndes == n - st_rec.des
        assert st_rec.maj == naive_maj(w)
        assert st_rec.inv == naive_inv(w)
        assert st_rec.cros == naive_cros(w)
        assert st_rec.nest == naive_nest(w)
        assert st_rec.toht == naive_toht(w)
        assert st_rec.thto == naive_thto(w)
        assert st_rec.thot == naive_thot(w)
        assert st_rec.fmax == naive_fmax(w)
        assert st_rec.mad == st_rec.des + st_rec.toht + 2 * st_rec.thto
        assert st_rec.suc == naive_suc(w)
        assert st_rec.adj == naive_adj(w)


@pytest.mark.parametrize("n", range(1, 7))
def test_inversion_decomposition(n):
    for w in itertools.permutations(range(1, n + 1)):
        rec = basic_stats(w)
        assert rec.inv == rec.n - rec.wex + rec.cros + 2 * rec.nest
        assert sum(inv_k(w, k) for k in range(1, n + 1)) == rec.inv
        assert sum(cros_k(w, k) for k in range(1, n + 1)) == rec.cros
        assert sum(nest_k(w, k) for k in range(1, n + 1)) == rec.nest
        assert sum(pattern_k(w, k, "31-2") for k in range(1, n + 1)) == rec.toht
        assert sum(pattern_k(w, k, "2-31") for k in range(1, n + 1)) == rec.thto
        assert sum(pattern_k(w, k, "2-13") for k in range(1, n + 1)) == rec.thot


def test_inv_parts_example():
    # parts anchored at every k sum to the inversion number
    for w in itertools.permutations(range(1, 6)):
        total = sum(sum(inv_parts(w, k)) for k in range(1, 6))
        assert total == naive_inv(w)


def test_cyclic_type_small():
    assert cyclic_type((2, 1), 1) == "cyclic-valley"
    assert cyclic_type((2, 1), 2) == "cyclic-peak"
    assert cyclic_type((1, 2), 1) == "fixed"
    assert cyclic_type((2, 3, 1), 2) == "cyclic-double-ascent"
    assert cyclic_type((3, 1, 2), 2) == "cyclic-double-descent"


def test_foremaximum_example():
    # 4157368: left-to-right maxima 4, 5, 7, 8; nondescents among them 5, 8
    assert basic_stats((4, 1, 5, 7, 3, 6, 8)).fmax == 2
    assert not is_coderangement((4, 1, 5, 7, 3, 6, 8))


def test_coderangements_n4():
    got = {"".join(map(str, w)) for w in iter_family_words("Dstar", 4)}
    assert got == {"2143", "3142", "3241", "4123", "4132",
                   "4213", "4231", "4312", "4321"}


def test_family_sizes():
    assert family_size("S", 5) == 120
    assert family_size("D", 4) == 9
    assert [family_size("A", n) for n in range(7)] == [1, 1, 1, 2, 5, 16, 61]
    assert family_size("Aprime", 4) == 0
    assert family_size("Adoubleprime", 4) == 5
    assert family_size("Astar", 4) == 5


def test_empty_word_families():
    assert list(iter_family_words("S", 0)) == [()]
    assert list(iter_family_words("D", 0)) == []


def test_cap_errors():
    with pytest.raises(EnumerationCapError):
        list(iter_family_words("S", 12))
    with pytest.raises(EnumerationCapError):
        stat_polynomial("S", 12, QUINTUPLE_WEIGHT)


def test_unknown_family():
    with pytest.raises(ValueError):
        list(iter_family_words("bogus", 3))


def test_permutation_parse_and_str():
    p = Permutation.parse("231")
    assert p.word == (2, 3, 1)
    assert str(p) == "231"
    long = Permutation.parse("10,1,2,3,4,5,6,7,8,9")
    assert long.n == 10
    assert str(long) == "10,1,2,3,4,5,6,7,8,9"
    with pytest.raises(ValueError):
        Permutation.parse("221")


def test_inverse():
    p = Permutation.parse("3142")
    assert p.inverse().word == (2, 4, 1, 3)
    assert p.inverse().inverse() == p


def test_quintuple_polynomial_s2():
    poly = stat_polynomial("S", 2, QUINTUPLE_WEIGHT)
    assert str(poly) == "x^2*y^2 + x*s"


def test_stat_polynomial_parallel_matches_serial():
    poly1 = stat_polynomial("S", 5, QUINTUPLE_WEIGHT, workers=1)
    poly4 = stat_polynomial("S", 5, QUINTUPLE_WEIGHT, workers=4,
                            parallel_threshold=4)
    assert poly1 == poly4


@given(st.permutations(list(range(1, 8))))
def test_record_fields_are_nonnegative(w):
    rec = basic_stats(tuple(w))
    assert all(v >= 0 for v in rec.to_json().values())
