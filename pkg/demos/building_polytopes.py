# coding: utf-8

# # Building polytopes from incidences
#
# A polytope here is only its vertex-facet incidence: a dimension, a vertex
# count and one bitmask per facet. Everything else (edges, faces, duality)
# is derived from that table, so no coordinates are ever needed.

from polyfew import (
    canonical_key, edges, face_lattice, free_sum, is_isomorphic, join,
    polar, product, pyramid, simplex, strip_core, vertex_figure,
)

# Start from simplices. The product of two segments is a square.

segment = simplex(1)
square = product(segment, segment)
print(square.dim, square.num_vertices, square.num_facets)
print(square.facets)

# The polar swaps vertices and facets. Polar of a cube is the octahedron,
# which is also the free sum of three segments.

cube = product(square, segment)
octahedron = polar(cube)
print(octahedron.num_vertices, octahedron.num_facets)
print(is_isomorphic(octahedron, free_sum(free_sum(segment, segment), segment)))

# Joining with a point is the same as taking a pyramid.

apex = simplex(0)
print(is_isomorphic(join(square, apex), pyramid(square)))

# Edges come straight from the incidences, and they agree with the rank 2
# faces of the brute-force face lattice.

print(sorted(edges(cube)))
lattice = face_lattice(cube)
print(lattice.f_vector())
print(lattice.edge_pairs() == set(edges(cube)))

# The vertex figure at a cube vertex is a triangle.

print(is_isomorphic(vertex_figure(cube, 0), simplex(2)))

# Stripping apexes recovers the core of an iterated pyramid.

tower = pyramid(pyramid(pyramid(square)))
core = strip_core(tower)
print(core.apex_count, is_isomorphic(core.core, square))

# Canonical keys are bytes that identify a combinatorial type.

print(canonical_key(square).hex())
print(canonical_key(polar(square)) == canonical_key(square))
