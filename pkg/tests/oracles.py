"""Independent checks used to freeze expected values.

None of these reuse the code paths they check: isomorphism is tested by
trying vertex permutations, Gale diagrams are realized with coordinates and
a linear program, and 3-polytopes come from planar graphs via Steinitz.
"""

from __future__ import annotations

import itertools
import math

import networkx as nx
import numpy as np
from scipy.optimize import linprog


def facet_sets(p) -> set[frozenset[int]]:
    return {frozenset(f) for f in p.facets}


def brute_isomorphic(p, q) -> bool:
    """Search for a vertex bijection mapping the facets of ``p`` onto those of ``q``."""
    if (p.dim, p.num_vertices, p.num_facets) != (q.dim, q.num_vertices, q.num_facets):
        return False
    fp, fq = list(facet_sets(p)), facet_sets(q)
    n = p.num_vertices
    deg_p = [sum(v in f for f in fp) for v in range(n)]
    deg_q = [sum(v in f for f in fq) for v in range(n)]
    if sorted(deg_p) != sorted(deg_q):
        return False
    for perm in itertools.permutations(range(n)):
        if any(deg_p[v] != deg_q[perm[v]] for v in range(n)):
            continue
        if {frozenset(perm[v] for v in f) for f in fp} == fq:
            return True
    return False


def brute_distinct_types(polys) -> list:
    reps = []
    for p in polys:
        if not any(brute_isomorphic(p, r) for r in reps):
            reps.append(p)
    return reps


def gale_points(multiplicities) -> np.ndarray:
    """Unit vectors on the rays of a regular 2k-gon, numbered ray by ray."""
    L = len(multiplicities)
    pts = []
    for i, m in enumerate(multiplicities):
        ang = math.pi * i / (L // 2)
        pts.extend([(math.cos(ang), math.sin(ang))] * m)
    return np.array(pts)


def _zero_in_relint(vectors: np.ndarray) -> bool:
    # strictly positive coefficients summing the vectors to zero
    k = len(vectors)
    res = linprog(
        np.zeros(k),
        A_eq=vectors.T,
        b_eq=np.zeros(2),
        bounds=[(1, None)] * k,
        method="highs",
    )
    return res.status == 0


def gale_facets_by_lp(multiplicities) -> set[frozenset[int]]:
    """Complements of the minimal point sets with the origin in their relative interior."""
    pts = gale_points(multiplicities)
    n = len(pts)
    circuits: list[frozenset[int]] = []
    for size in range(1, n + 1):
        for s in itertools.combinations(range(n), size):
            fs = frozenset(s)
            if any(c <= fs for c in circuits):
                continue
            if _zero_in_relint(pts[list(s)]):
                circuits.append(fs)
    full = frozenset(range(n))
    return {full - c for c in circuits}


def halfplane_counts_ok(multiplicities) -> bool:
    """Sample open halfplanes between all critical directions and count points."""
    pts = gale_points(multiplicities)
    L = len(multiplicities)
    # normals at every ray angle and halfway between consecutive rays
    for t in range(2 * L):
        ang = math.pi * t / L
        normal = np.array([math.cos(ang), math.sin(ang)])
        if int(np.sum(pts @ normal > 1e-9)) < 2:
            return False
    return True


def steinitz_types(n: int) -> list[nx.Graph]:
    """Graphs of 3-polytopes with ``n`` vertices: 3-connected planar graphs, up to isomorphism."""
    pairs = list(itertools.combinations(range(n), 2))
    reps: list[nx.Graph] = []
    for size in range(3 * n // 2, 3 * n - 6 + 1):
        for es in itertools.combinations(pairs, size):
            g = nx.Graph(es)
            if g.number_of_nodes() != n or min(d for _, d in g.degree) < 3:
                continue
            if not nx.check_planarity(g)[0] or nx.node_connectivity(g) < 3:
                continue
            if not any(nx.is_isomorphic(g, r) for r in reps):
                reps.append(g)
    return reps


def graph_is_pyramid(g: nx.Graph) -> bool:
    n = g.number_of_nodes()
    for v in g:
        if g.degree[v] == n - 1:
            rest = g.subgraph(set(g) - {v})
            if all(d == 2 for _, d in rest.degree) and nx.is_connected(rest):
                return True
    return False
