"""Canonical form of a vertex-facet incidence structure.

The incidence structure is treated as a bipartite graph whose two sides
(vertices, facets) are never exchanged. We run individualization-refinement:
equitable partition refinement, then branching on the first non-singleton
cell. Each leaf of the search tree is a discrete ordering, which gives an
incidence matrix; the canonical form is the lexicographically smallest matrix
over the explored leaves.

Two prunings keep highly symmetric inputs (iterated joins of squares, say)
cheap, both in the style of nauty:

* a leaf equal to the first or best leaf yields an automorphism, and the
  search jumps back to the common ancestor of the two leaves;
* children of a node lying in one orbit of the automorphisms found so far
  that fix the node's path are explored once.
"""

from __future__ import annotations

from collections import deque

from .polytope import POINT, IncidencePolytope, bits

CanonicalKey = bytes


def _refine(cells: list[list[int]], adj: list[int], queue: deque[int]) -> list[list[int]]:
    # Every decision below depends only on cell positions and neighbour
    # counts, never on element labels, so the result is isomorphism-invariant.
    while queue:
        splitter = queue.popleft()
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for x in cell:
                groups.setdefault((adj[x] & splitter).bit_count(), []).append(x)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for c in sorted(groups):
                frag = groups[c]
                out.append(frag)
                m = 0
                for x in frag:
                    m |= 1 << x
                queue.append(m)
        if changed:
            cells = out
    return cells


class _Search:
    def __init__(self, n: int, m: int, adj: list[int]):
        self.n = n
        self.m = m
        self.adj = adj
        self.first: tuple | None = None
        self.best: tuple | None = None
        self.autos: list[tuple[int, ...]] = []

    def encode(self, order: list[int]) -> tuple[int, ...]:
        n = self.n
        vpos = {}
        facets = []
        for e in order:
            if e < n:
                vpos[e] = len(vpos)
            else:
                facets.append(e)
        rows = []
        for f in facets:
            r = 0
            for v in bits(self.adj[f]):
                r |= 1 << vpos[v]
            rows.append(r)
        return tuple(rows)

    def leaf(self, cells: list[list[int]], path: list[int]) -> int | None:
        order = [c[0] for c in cells]
        enc = self.encode(order)
        if self.first is None:
            self.first = self.best = (enc, list(path), order)
            return None
        for ref in (self.first, self.best):
            if enc == ref[0]:
                perm = [0] * (self.n + self.m)
                for a, b in zip(ref[2], order):
                    perm[a] = b
                self.autos.append(tuple(perm))
                level = 0
                for a, b in zip(path, ref[1]):
                    if a != b:
                        break
                    level += 1
                return level
        if enc < self.best[0]:
            self.best = (enc, list(path), order)
        return None

    def _orbit_roots(self, path: list[int]) -> list[int]:
        parent = list(range(self.n + self.m))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[x] == x for x in path):
                for x, y in enumerate(g):
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
        return [find(x) for x in range(self.n + self.m)]

    def run(self, cells: list[list[int]], path: list[int]) -> int | None:
        t = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if t is None:
            return self.leaf(cells, path)
        depth = len(path)
        target = sorted(cells[t])
        done: list[int] = []
        seen_autos = -1
        roots: list[int] = []
        for x in target:
            if done:
                if len(self.autos) != seen_autos:
                    roots = self._orbit_roots(path)
                    seen_autos = len(self.autos)
                done_roots = {roots[y] for y in done}
                if roots[x] in done_roots:
                    continue
            child = cells[:t] + [[x], [y for y in cells[t] if y != x]] + cells[t + 1 :]
            child = _refine(child, self.adj, deque([1 << x]))
            path.append(x)
            r = self.run(child, path)
            path.pop()
            done.append(x)
            if r is not None and r < depth:
                return r
        return None


def canonical_form(p: IncidencePolytope) -> tuple[int, ...]:
    """Lexicographically minimal facet-row encoding over the search tree."""
    n, m = p.num_vertices, p.num_facets
    if m == 0:
        return ()
    adj = [vm << n for vm in p.vertex_masks] + list(p.masks)
    cells = [list(range(n)), list(range(n, n + m))]
    init = deque([(1 << n) - 1, ((1 << m) - 1) << n])
    cells = _refine(cells, adj, init)
    s = _Search(n, m, adj)
    s.run(cells, [])
    return s.best[0]


def _row_bytes(n: int) -> int:
    return max(1, (n + 7) // 8)


def canonical_key(p: IncidencePolytope) -> CanonicalKey:
    """Deterministic byte key; equal keys iff combinatorially equivalent.

    Layout: dim, vertex count, facet count (two bytes each, big-endian),
    then one fixed-width big-endian row per facet in canonical order.
    """
    rows = canonical_form(p)
    n = p.num_vertices
    w = _row_bytes(n)
    out = bytearray()
    for x in (p.dim, n, p.num_facets):
        out += x.to_bytes(2, "big")
    for r in rows:
        out += r.to_bytes(w, "big")
    return bytes(out)


def polytope_from_key(key: CanonicalKey) -> IncidencePolytope:
    """Decode a key back into a (canonically labelled) polytope."""
    dim = int.from_bytes(key[0:2], "big")
    n = int.from_bytes(key[2:4], "big")
    m = int.from_bytes(key[4:6], "big")
    if dim == 0:
        return POINT
    w = _row_bytes(n)
    rows = tuple(int.from_bytes(key[6 + i * w : 6 + (i + 1) * w], "big") for i in range(m))
    return IncidencePolytope(dim, n, rows)


def is_isomorphic(p: IncidencePolytope, q: IncidencePolytope) -> bool:
    if (p.dim, p.num_vertices, p.num_facets) != (q.dim, q.num_vertices, q.num_facets):
        return False
    return canonical_key(p) == canonical_key(q)
