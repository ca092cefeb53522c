import pytest

from oracles import brute_isomorphic
from polyfew import (
    canonical_key,
    crude_k_bound,
    d_bracket,
    lower_f,
    marcus_limit,
    polar,
    upper_F,
    verify_witness,
    witness,
)
from polyfew.bounds import bounds_table
from polyfew.errors import OutOfDomain, UndefinedForZero


@pytest.mark.parametrize("x, y, want", [(2, 3, 7), (0, 9, 0), (6, 2, 20), (9, 0, 0), (1, 1, 2)])
def test_upper_F(x, y, want):
    assert upper_F(x, y) == want


@pytest.mark.parametrize("x, y, want", [(1, 7, 8), (3, 2, 6), (2, 3, 6), (0, 4, 0), (4, 4, 11)])
def test_lower_f(x, y, want):
    assert lower_f(x, y) == want


@pytest.mark.parametrize("a, want", [(1, 2), (5, 14), (6, 19), (2, 5)])
def test_marcus_limit(a, want):
    assert marcus_limit(a) == want


def test_marcus_zero():
    with pytest.raises(UndefinedForZero):
        marcus_limit(0)


def test_branches_agree():
    # both formulas for the upper bound meet at x = 5, and so do Marcus's
    for y in range(1, 30):
        assert 3 * 5 + y - 2 == 10 + y + 3 == upper_F(5, y)
    assert 3 * 5 - 1 == 10 + 4 == marcus_limit(5)


@pytest.mark.parametrize(
    "a, b, lo, up", [(1, 1, 2, 2), (2, 3, 6, 7), (0, 5, 0, 0), (2, 2, 5, 6)]
)
def test_d_bracket(a, b, lo, up):
    br = d_bracket(a, b)
    assert (br.alpha, br.beta, br.lower, br.upper) == (a, b, lo, up)


def test_bracket_grid():
    for a in range(65):
        for b in range(65):
            assert lower_f(a, b) == lower_f(b, a)
            br = d_bracket(a, b)
            assert br.lower <= br.upper


@pytest.mark.parametrize("a, b, exp", [(1, 1, 16), (0, 0, 1), (2, 2, 81)])
def test_crude_k(a, b, exp):
    assert crude_k_bound(a, b) == 2**exp


def test_bounds_table_rows():
    rows = bounds_table(2, 2)
    assert len(rows) == 9
    assert rows[-1] == (2, 2, 5, 6, 81)


def test_witness_square(square):
    w = witness(1, 1)
    assert (w.dim, w.num_vertices, w.num_facets) == (2, 4, 4)
    assert brute_isomorphic(w, square)


@pytest.mark.parametrize(
    "a, b, dim, nv, nf", [(3, 2, 6, 10, 9), (2, 5, 8, 11, 14), (4, 1, 5, 10, 7), (1, 4, 5, 7, 10)]
)
def test_witness_counts(a, b, dim, nv, nf):
    w = witness(a, b)
    assert (w.dim, w.num_vertices, w.num_facets) == (dim, nv, nf)


def test_witness_domain():
    for a, b in [(0, 1), (1, 0), (0, 0)]:
        with pytest.raises(OutOfDomain):
            witness(a, b)


@pytest.mark.parametrize(
    "a, b, dim, nv, nf", [(1, 1, 2, 4, 4), (4, 2, 7, 12, 10), (1, 6, 7, 9, 14)]
)
def test_verify_witness(a, b, dim, nv, nf):
    r = verify_witness(a, b)
    assert (r.dim, r.num_vertices, r.num_facets) == (dim, nv, nf)
    assert not r.is_pyramid
    assert r.matches
    assert r.dim == lower_f(a, b)


def test_witness_grid():
    for a in range(1, 13):
        for b in range(1, 13):
            assert verify_witness(a, b).matches, (a, b)


def test_polar_pairs():
    for a in range(1, 9):
        for b in range(1, 9):
            assert canonical_key(witness(a, b)) == canonical_key(polar(witness(b, a)))


def test_diagonal_branches_coincide():
    # at alpha = beta > 1 the two families give the same type
    from polyfew.polytope import free_sum, iterated_join, product, simplex

    sq = product(simplex(1), simplex(1))
    for a in range(2, 6):
        other = iterated_join([sq] * (a - 1) + [free_sum(simplex(1), simplex(1))])
        assert canonical_key(other) == canonical_key(witness(a, a))
