import pytest

from pqeuler.algebra import LaurentPoly
from pqeuler.lattice import (
    DOWN,
    DyckDiagramme,
    LaguerreHistory,
    MotzkinPath,
    UP,
    abc_weights,
    diagramme_pq_weights,
    dyck_path,
    enumerate_objects,
    laguerre_quintuple_weights,
    restricted_diagramme_pq_weights,
    weighted_sum,
)
from pqeuler.qeuler import e_pq

MOTZKIN = [1, 1, 2, 4, 9, 21, 51]
CATALAN = [1, 1, 2, 5, 14, 42]
FACT = [1, 1, 2, 6, 24, 120, 720]


def test_path_validation():
    MotzkinPath("ULD")
    with pytest.raises(ValueError):
        MotzkinPath("DU")
    with pytest.raises(ValueError):
        MotzkinPath("UU")
    with pytest.raises(ValueError):
        MotzkinPath("UX")
    with pytest.raises(ValueError):
        dyck_path("ULD")


def test_heights_are_starting_ordinates():
    assert MotzkinPath("UULDD").heights() == [0, 1, 2, 2, 1]


def test_object_counts():
    for n, want in enumerate(MOTZKIN):
        assert sum(1 for _ in enumerate_objects("motzkin", n)) == want
    for n, want in enumerate(CATALAN):
        assert sum(1 for _ in enumerate_objects("dyck", 2 * n)) == want
    for n in range(6):
        assert sum(1 for _ in enumerate_objects("laguerre", n)) == FACT[n]


def test_diagramme_counts_are_euler_numbers():
    for n in range(5):
        count = sum(1 for _ in enumerate_objects("diagramme", 2 * n))
        assert count == e_pq(2 * n + 1, "cf").substitute({"p": 1, "q": 1}).as_int()
        rcount = sum(1 for _ in enumerate_objects("restricted_diagramme", 2 * n))
        assert rcount == e_pq(2 * n, "cf").substitute({"p": 1, "q": 1}).as_int()


def test_xi_validation():
    path = dyck_path("UD")
    DyckDiagramme(path, [0, 0])
    DyckDiagramme(path, [0, 1])  # down step at height 1 allows xi <= 1
    with pytest.raises(ValueError):
        DyckDiagramme(path, [1, 0])  # up step at height 0 forces xi = 0
    with pytest.raises(ValueError):
        DyckDiagramme(path, [0, 1], restricted=True)  # down needs xi < h
    with pytest.raises(ValueError):
        LaguerreHistory(MotzkinPath("L"), [1])
    LaguerreHistory(MotzkinPath("ULD"), [0, -1, 0])


def test_dp_equals_enumeration_small():
    specs = {
        "diagramme": diagramme_pq_weights(),
        "restricted_diagramme": restricted_diagramme_pq_weights(),
        "laguerre": laguerre_quintuple_weights(),
    }
    for kind, spec in specs.items():
        step = 2 if "diagramme" in kind else 1
        for length in range(0, 7, step):
            dp = weighted_sum(kind, length, spec, method="dp")
            brute = weighted_sum(kind, length, spec, method="enumerate")
            assert dp == brute, (kind, length)


def test_abc_weights_count_paths():
    one = LaurentPoly.const(1)
    spec = abc_weights(a=lambda h: one, b=lambda h: one, c=lambda h: one)
    for n, want in enumerate(MOTZKIN):
        assert weighted_sum("motzkin", n, spec).as_int() == want
    for n, want in enumerate(CATALAN):
        assert weighted_sum("dyck", 2 * n, spec).as_int() == want


def test_diagramme_weights_give_pq_euler():
    for n in range(5):
        total = weighted_sum("diagramme", 2 * n, diagramme_pq_weights())
        assert total == e_pq(2 * n + 1, "cf")
        rtotal = weighted_sum("restricted_diagramme", 2 * n,
                              restricted_diagramme_pq_weights())
        assert rtotal == e_pq(2 * n, "cf")


def test_enumeration_cap():
    with pytest.raises(ValueError):
        list(enumerate_objects("motzkin", 15))
