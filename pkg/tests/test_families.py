import pytest

from rst_reliability.families import (
    FAMILIES,
    build_family,
    family_A,
    family_Aprime,
    family_Astar,
    family_Kn,
    family_X,
    family_Y,
    family_Z,
)


def test_deleted_edges():
    assert family_A(8, 3).deleted_edges() == ((3, 4), (3, 5), (3, 6))
    assert family_Astar(7).deleted_edges() == ((3, 4), (3, 5), (4, 5))
    assert family_Aprime(9, 3).deleted_edges() == ((3, 4), (5, 6), (7, 8))
    assert family_X(5).deleted_edges() == ((0, 1),)
    assert family_Y(5).deleted_edges() == ((0, 3),)
    assert family_Z(5).deleted_edges() == ((3, 4),)
    assert family_Kn(6).m == 15


def test_edge_counts():
    for n in (7, 8, 9):
        for l in range(2, n - 3):
            assert family_A(n, l).num_deleted == l
        for l in range(2, (n - 3) // 2 + 1):
            assert family_Aprime(n, l).num_deleted == l


@pytest.mark.parametrize(
    "ctor, args",
    [
        (family_A, (6, 2)),
        (family_A, (7, 1)),
        (family_A, (7, 4)),
        (family_Aprime, (7, 3)),
        (family_Aprime, (8, 1)),
        (family_Astar, (6,)),
        (family_X, (4,)),
        (family_Y, (4,)),
        (family_Z, (4,)),
    ],
)
def test_out_of_range(ctor, args):
    with pytest.raises(ValueError):
        ctor(*args)


def test_build_family():
    assert build_family("Aprime", 8, 2) == family_Aprime(8, 2)
    assert build_family("Kn", 5) == family_Kn(5)
    assert set(FAMILIES) == {"A", "Astar", "Aprime", "X", "Y", "Z", "Kn"}
    with pytest.raises(ValueError):
        build_family("A", 8)
    with pytest.raises(ValueError):
        build_family("B", 8)
