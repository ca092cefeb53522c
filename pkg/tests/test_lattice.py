import pytest

from polyfew import face_lattice, make_polytope, simplex
from polyfew.errors import LatticeNotGraded, OracleLimitExceeded
from polyfew.polytope import IncidencePolytope


def test_triangle_boolean():
    lat = face_lattice(simplex(2))
    assert len(lat) == 8
    assert lat.height == 3
    assert lat.f_vector() == [1, 3, 3, 1]


def test_square(square):
    lat = face_lattice(square)
    assert lat.f_vector() == [1, 4, 4, 1]
    assert lat.height == 3


def test_prism(prism):
    lat = face_lattice(prism)
    assert lat.f_vector() == [1, 6, 9, 5, 1]
    assert len(lat) == 22
    assert lat.height == 4


def test_point():
    assert face_lattice(simplex(0)).f_vector() == [1, 1]


def test_limit():
    with pytest.raises(OracleLimitExceeded):
        face_lattice(simplex(16))
    with pytest.raises(OracleLimitExceeded):
        face_lattice(simplex(9), limit=9)
    assert face_lattice(simplex(9), limit=10).height == 10


def test_wrong_dimension(prism):
    lie = IncidencePolytope(4, prism.num_vertices, prism.masks)
    with pytest.raises(LatticeNotGraded):
        face_lattice(lie)


def test_not_graded():
    # passes the cheap checks, but vertices 2 and 3 lie on the same facets
    bad = make_polytope(3, [[0, 1, 2, 3], [0, 1, 4], [0, 2, 3, 4], [1, 2, 3, 4]], 5)
    with pytest.raises(LatticeNotGraded):
        face_lattice(bad)
