import pytest

from src.errors import DomainError
from src.lie.rootsys import (
    CartanType, bilinear_form, build, check_convex, dim_g, dim_l, highest_root, psi, reflect,
    support, to_json,
)


@pytest.mark.parametrize("letter,rank,count,dim_g", [
    ("A", 1, 1, 3), ("A", 2, 3, 8), ("A", 3, 6, 15), ("A", 4, 10, 24),
    ("B", 2, 4, 10), ("B", 3, 9, 21), ("C", 3, 9, 21), ("D", 4, 12, 28),
    ("G", 2, 6, 14), ("F", 4, 24, 52), ("E", 6, 36, 78),
])
def test_positive_root_counts(letter, rank, count, dim_g):
    rs = build(letter, rank)
    assert len(rs.positive_roots) == count
    assert rs.dim_g == dim_g


@pytest.mark.slow
@pytest.mark.parametrize("rank,count", [(7, 63), (8, 120)])
def test_large_exceptional(rank, count):
    assert len(build("E", rank).positive_roots) == count


@pytest.mark.parametrize("letter,rank", [("D", 3), ("E", 5), ("H", 2), ("B", 1), ("G", 3)])
def test_invalid_types(letter, rank):
    with pytest.raises(DomainError):
        CartanType(letter, rank)


def test_a2_roots_sorted_by_height():
    rs = build("A", 2)
    assert rs.positive_roots == ((1, 0), (0, 1), (1, 1))
    assert highest_root(rs) == (1, 1)


@pytest.mark.parametrize("letter,rank", [("A", 3), ("B", 2), ("C", 3), ("G", 2), ("F", 4), ("D", 4)])
def test_symmetrizable(letter, rank):
    rs = build(letter, rank)
    n = rs.n
    for i in range(n):
        assert rs.cartan[i][i] == 2
        for j in range(n):
            assert rs.d[i] * rs.cartan[i][j] == rs.d[j] * rs.cartan[j][i]


def test_root_lengths():
    assert build("B", 2).d == (2, 1)
    assert build("C", 3).d == (1, 1, 2)
    assert build("G", 2).d == (1, 3)
    assert highest_root(build("G", 2)) == (3, 2)


@pytest.mark.parametrize("letter,rank", [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("C", 2), ("C", 3), ("C", 4),
    ("D", 4), ("F", 4), ("G", 2),
])
def test_convex_order(letter, rank):
    rs = build(letter, rank)
    order = rs.convex
    assert len(order.reduced_word) == len(rs.positive_roots)
    assert sorted(order.beta) == sorted(rs.positive_roots)
    assert order.beta[0] == rs.simple_root(order.reduced_word[0])
    check_convex(order, rs.positive_roots)


def test_convex_order_a2():
    rs = build("A", 2)
    assert rs.convex.reduced_word == (1, 2, 1)
    assert rs.convex.beta == ((1, 0), (1, 1), (0, 1))


def test_reflections_and_form():
    rs = build("A", 2)
    assert reflect(rs, 1, (1, 0)) == (-1, 0)
    assert reflect(rs, 1, (0, 1)) == (1, 1)
    assert bilinear_form(rs, (1, 0), (1, 0)) == 2
    assert bilinear_form(rs, (1, 0), (0, 1)) == -1
    b2 = build("B", 2)
    assert bilinear_form(b2, (1, 0), (1, 0)) == 4
    assert bilinear_form(b2, (0, 1), (0, 1)) == 2


def test_psi_and_support():
    rs = build("A", 3)
    assert psi(rs, ()) == []
    assert psi(rs, {1, 2}) == [(1, 0, 0), (0, 1, 0), (1, 1, 0)]
    assert len(psi(rs, {1, 3})) == 2
    assert dim_l(rs, {1}, {1, 2, 3}) == 3 + 1 + 6
    assert support(rs, (0, 1, 1)) == frozenset({2, 3})
    with pytest.raises(DomainError):
        support(rs, (2, 1, 0))
    with pytest.raises(DomainError):
        psi(rs, {4})


def test_to_json():
    data = to_json(build("A", 2))
    assert data["dims"] == {"rank": 2, "positive_roots": 3, "dim_g": 8}
    assert data["convex_order"]["reduced_word"] == [1, 2, 1]
    assert dim_g(build("E", 6)) == 78
