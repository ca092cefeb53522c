# coding: utf-8

# # A census of polytopes with d+3 vertices
#
# A d-polytope with d+3 vertices has a planar Gale diagram. Up to
# combinatorial equivalence that diagram is a wheel: 2k rays around the
# origin, ray i opposite ray i+k, each holding some number of points.
# Enumerating wheels gives every such polytope exactly once.

from polyfew import (
    Wheel, census, compute_D2, count_types, dplus2_types,
    enumerate_wheels, marcus_scan, wheel_is_polytopal, wheel_to_polytope,
)

# A wheel with one point on each of five rays is the pentagon's diagram.

pentagon = wheel_to_polytope(Wheel.from_rays([1, 0, 1, 0, 1, 0, 1, 0, 1, 0]))
print(pentagon.dim, pentagon.num_vertices, pentagon.num_facets)

# Not every wheel is polytopal: a sparse run of rays leaves a point stuck
# inside.

print(wheel_is_polytopal(Wheel.from_rays([3, 0, 1, 0, 1, 0])))

# Reduced wheels on n points, one per combinatorial type.

for n in range(5, 10):
    print(n, sum(1 for _ in enumerate_wheels(n, reduced=True)))

# The d+2 vertex types are classical and number floor(d^2 / 4).

print([len(list(dplus2_types(d))) for d in range(2, 11)])

# The census at dimension 4 with at most two extra vertices, and how many
# of those types are not pyramids.

recs = census(2, 4)
print(len(recs), sum(r.nonpyramid for r in recs))

# Counts with a facet cap stop growing once d is large enough.

print([count_types(d, 2, 2) for d in range(4, 9)])

# The maximal non-pyramid dimension with alpha = 2 and a few values of beta.

print([compute_D2(beta) for beta in range(2, 6)])

# Unneighborly polytopes with d+3 vertices stop at dimension five.

print(marcus_scan(2, 7))
