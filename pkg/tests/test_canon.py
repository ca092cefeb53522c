import random

from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import random_polytope
from oracles import brute_isomorphic
from polyfew import (
    POINT,
    canonical_key,
    join,
    make_polytope,
    polar,
    polytope_from_key,
    product,
    simplex,
    witness,
)
from polyfew.canon import is_isomorphic
from polyfew.polytope import relabel


def test_square_relabelings(square):
    key = canonical_key(square)
    rng = random.Random(7)
    for _ in range(20):
        perm = list(range(4))
        rng.shuffle(perm)
        fperm = list(range(4))
        rng.shuffle(fperm)
        assert canonical_key(relabel(square, perm, fperm)) == key


def test_square_pyramid_two_routes(square):
    by_hand = make_polytope(3, [[0, 1, 2, 3], [0, 1, 4], [1, 2, 4], [2, 3, 4], [0, 3, 4]], 5)
    assert canonical_key(join(POINT, square)) == canonical_key(by_hand)


def test_prism_not_self_dual(prism):
    assert canonical_key(prism) != canonical_key(polar(prism))
    assert not brute_isomorphic(prism, polar(prism))


def test_cube_octahedron_sides_not_swapped(cube):
    # same bipartite graph with the sides exchanged must give different keys
    assert canonical_key(cube) != canonical_key(polar(cube))


def test_self_dual_pyramid(square_pyramid):
    assert canonical_key(square_pyramid) == canonical_key(polar(square_pyramid))


def test_key_roundtrip(prism):
    q = polytope_from_key(canonical_key(prism))
    assert brute_isomorphic(q, prism)
    assert canonical_key(q) == canonical_key(prism)
    assert polytope_from_key(canonical_key(POINT)) == POINT


def test_deterministic_bytes():
    # frozen so that any change in the encoding is noticed
    assert canonical_key(simplex(2)).hex() == "000200030003060503"


def test_symmetric_witness_fast():
    # eight joined squares: a large automorphism group
    w = witness(8, 8)
    assert canonical_key(w) == canonical_key(polar(witness(8, 8)))


_seeds = st.integers(min_value=0, max_value=2**32 - 1)


@settings(max_examples=150, deadline=None)
@given(_seeds, st.randoms(use_true_random=False))
def test_relabel_invariance(seed, rnd):
    p = random_polytope(random.Random(seed), max_dim=8, max_size=60)
    perm = list(range(p.num_vertices))
    rnd.shuffle(perm)
    fperm = list(range(p.num_facets))
    rnd.shuffle(fperm)
    assert canonical_key(relabel(p, perm, fperm)) == canonical_key(p)


@settings(max_examples=60, deadline=None)
@given(_seeds, _seeds)
def test_agrees_with_brute_force(s1, s2):
    p = random_polytope(random.Random(s1), max_dim=4, max_size=7)
    q = random_polytope(random.Random(s2), max_dim=4, max_size=7)
    assert is_isomorphic(p, q) == brute_isomorphic(p, q)


def test_distinguishes_small_types():
    # all 3-polytopes from products/joins of small simplices; brute force decides ties
    shapes = [
        simplex(3),
        join(POINT, product(simplex(1), simplex(1))),
        product(simplex(2), simplex(1)),
        polar(product(simplex(2), simplex(1))),
        join(simplex(1), simplex(1)),
    ]
    for a in shapes:
        for b in shapes:
            assert (canonical_key(a) == canonical_key(b)) == brute_isomorphic(a, b)
