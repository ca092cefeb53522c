"""Combinatorial polytopes stored as vertex-facet incidences.

A polytope is a dimension, a vertex count and a tuple of facets. Each facet
is kept as an integer bitmask over the vertex indices, so containment and
intersection are single machine operations for small polytopes and fall back
to Python's arbitrary precision integers for large ones.

All values are immutable; every operation returns a new polytope.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, InvariantViolation, UndefinedForPoint

# Set POLYFEW_VALIDATE=1 to re-check invariants after every construction.
_VALIDATE = bool(os.environ.get("POLYFEW_VALIDATE"))


def set_validation(flag: bool) -> None:
    global _VALIDATE
    _VALIDATE = bool(flag)


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class IncidencePolytope:
    """A polytope given by its dimension and facet vertex sets.

    ``masks[j]`` has bit ``i`` set iff vertex ``i`` lies on facet ``j``.
    Facet order is carried along by the operations (``polar`` relies on it)
    but carries no combinatorial meaning.
    """

    dim: int
    num_vertices: int
    masks: tuple[int, ...]

    @property
    def num_facets(self) -> int:
        return len(self.masks)

    @property
    def alpha(self) -> int:
        return self.num_vertices - self.dim - 1

    @property
    def beta(self) -> int:
        # the point has no listed facets but is its own simplex
        if self.dim == 0:
            return 0
        return self.num_facets - self.dim - 1

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(bits(m)) for m in self.masks)

    @property
    def vertex_set(self) -> int:
        return (1 << self.num_vertices) - 1

    @cached_property
    def vertex_masks(self) -> tuple[int, ...]:
        """``vertex_masks[v]`` has bit ``j`` set iff facet ``j`` contains ``v``."""
        out = [0] * self.num_vertices
        for j, m in enumerate(self.masks):
            bit = 1 << j
            for v in bits(m):
                out[v] |= bit
        return tuple(out)

    def is_point(self) -> bool:
        return self.dim == 0

    def __repr__(self) -> str:
        return (
            f"IncidencePolytope(dim={self.dim}, num_vertices={self.num_vertices}, "
            f"facets={[list(f) for f in self.facets]})"
        )


POINT = IncidencePolytope(0, 1, ())


def _check(p: IncidencePolytope) -> IncidencePolytope:
    if _VALIDATE:
        validate(p)
    return p


def validate(p: IncidencePolytope) -> None:
    """Check the structural invariants of an incidence polytope.

    These are necessary conditions only; realizability is never tested.
    """
    d, n, masks = p.dim, p.num_vertices, p.masks
    if d < 0:
        raise InvariantViolation("negative dimension")
    if n < 1:
        raise InvariantViolation("vertex count", "a polytope has at least one vertex")
    full = (1 << n) - 1
    for m in masks:
        if m < 0 or m > full:
            raise IndexOutOfRange(f"facet {bits(m) if m >= 0 else m} outside 0..{n - 1}")
    if d == 0:
        if n != 1 or masks:
            raise InvariantViolation(
                "point convention", "dim 0 requires exactly one vertex and no facets"
            )
        return
    if n < d + 1:
        raise InvariantViolation("vertex count", f"{n} vertices in dimension {d}")
    if len(masks) < d + 1:
        raise InvariantViolation("facet count", f"{len(masks)} facets in dimension {d}")
    for m in masks:
        if m == 0:
            raise InvariantViolation("empty facet")
        if m == full:
            raise InvariantViolation("improper facet", "a facet contains every vertex")
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j and a & b == a:
                raise InvariantViolation(
                    "facet containment", f"facet {bits(a)} contained in {bits(b)}"
                )
    for v, vm in enumerate(p.vertex_masks):
        if vm.bit_count() < d:
            raise InvariantViolation(
                "vertex on fewer than dim facets", f"vertex {v} lies on {vm.bit_count()}"
            )
    common = full
    for m in masks:
        if m.bit_count() < d:
            raise InvariantViolation(
                "facet with fewer than dim vertices", f"facet {bits(m)}"
            )
        common &= m
    if common:
        raise InvariantViolation("common vertex on all facets", f"vertices {bits(common)}")


def make_polytope(
    dim: int, facets: Sequence[Iterable[int]], num_vertices: int
) -> IncidencePolytope:
    """Build a polytope from facet vertex lists, checking every invariant.

    >>> make_polytope(2, [[0, 1], [1, 2], [0, 2]], 3).alpha
    0
    """
    masks = []
    for f in facets:
        f = list(f)
        for i in f:
            if not 0 <= i < num_vertices:
                raise IndexOutOfRange(f"vertex index {i} outside 0..{num_vertices - 1}")
        masks.append(mask_of(f))
    p = IncidencePolytope(dim, num_vertices, tuple(masks))
    validate(p)
    return p


def simplex(d: int) -> IncidencePolytope:
    if d < 0:
        raise InvariantViolation("negative dimension")
    if d == 0:
        return POINT
    full = (1 << (d + 1)) - 1
    return _check(IncidencePolytope(d, d + 1, tuple(full ^ (1 << i) for i in range(d + 1))))


def polar(p: IncidencePolytope) -> IncidencePolytope:
    """Transpose the incidences: facets become vertices and vice versa.

    Vertex ``j`` of the result is facet ``j`` of ``p``, and facet ``i`` of the
    result is the set of facets through vertex ``i``. Applying it twice gives
    back ``p`` with identical indexing.
    """
    if p.dim == 0:
        raise UndefinedForPoint("the point has no polar in this representation")
    return _check(IncidencePolytope(p.dim, p.num_facets, p.vertex_masks))


def _faces_for_join(p: IncidencePolytope) -> tuple[int, ...]:
    # the point's only facet is the empty face
    return p.masks if p.dim > 0 else (0,)


def join(p: IncidencePolytope, q: IncidencePolytope) -> IncidencePolytope:
    """Join: vertices of ``p`` first, then those of ``q`` shifted."""
    shift = p.num_vertices
    vp = p.vertex_set
    vq = q.vertex_set << shift
    masks = tuple(f | vq for f in _faces_for_join(p)) + tuple(
        vp | (g << shift) for g in _faces_for_join(q)
    )
    return _check(IncidencePolytope(p.dim + q.dim + 1, p.num_vertices + q.num_vertices, masks))


def pyramid(p: IncidencePolytope) -> IncidencePolytope:
    """Pyramid over ``p``; the apex is vertex 0."""
    return join(POINT, p)


def product(p: IncidencePolytope, q: IncidencePolytope) -> IncidencePolytope:
    """Cartesian product; vertex ``(i, j)`` gets index ``i * |V(q)| + j``."""
    nq = q.num_vertices
    row = q.vertex_set
    masks = []
    for f in p.masks:
        m = 0
        for i in bits(f):
            m |= row << (i * nq)
        masks.append(m)
    for g in q.masks:
        m = 0
        for i in range(p.num_vertices):
            m |= g << (i * nq)
        masks.append(m)
    return _check(IncidencePolytope(p.dim + q.dim, p.num_vertices * nq, tuple(masks)))


def free_sum(p: IncidencePolytope, q: IncidencePolytope) -> IncidencePolytope:
    if p.dim == 0 or q.dim == 0:
        raise UndefinedForPoint("free sum needs both summands of dimension at least 1")
    return polar(product(polar(p), polar(q)))


def iterated_join(parts: Sequence[IncidencePolytope]) -> IncidencePolytope:
    if not parts:
        raise ValueError("iterated_join needs at least one polytope")
    out = parts[0]
    for q in parts[1:]:
        out = join(out, q)
    return out


def relabel(
    p: IncidencePolytope, vertex_perm: Sequence[int], facet_perm: Sequence[int] | None = None
) -> IncidencePolytope:
    """Rename vertex ``i`` to ``vertex_perm[i]`` and move facet ``j`` to slot ``facet_perm[j]``."""
    masks = [0] * p.num_facets
    order = facet_perm if facet_perm is not None else range(p.num_facets)
    for j, m in zip(order, p.masks):
        masks[j] = mask_of(vertex_perm[i] for i in bits(m))
    return IncidencePolytope(p.dim, p.num_vertices, tuple(masks))


def edges(p: IncidencePolytope) -> set[tuple[int, int]]:
    """Graph of ``p``.

    ``{u, w}`` is an edge iff no third vertex lies on every facet through
    both, i.e. the smallest face containing ``u`` and ``w`` has two vertices.
    """
    if p.dim == 0:
        raise UndefinedForPoint("the point has no graph")
    vm = p.vertex_masks
    n = p.num_vertices
    out = set()
    for u in range(n):
        for w in range(u + 1, n):
            common = vm[u] & vm[w]
            for x in range(n):
                if x != u and x != w and common & vm[x] == common:
                    break
            else:
                out.add((u, w))
    return out


def neighbors(p: IncidencePolytope) -> list[set[int]]:
    nb: list[set[int]] = [set() for _ in range(p.num_vertices)]
    for u, w in edges(p):
        nb[u].add(w)
        nb[w].add(u)
    return nb


def vertex_figure(p: IncidencePolytope, v: int) -> IncidencePolytope:
    """Vertex figure at ``v``.

    Its vertices are the edges ``vw`` (ordered by ``w``) and its facets are the
    facets of ``p`` through ``v``, in their original order.
    """
    if p.dim == 0:
        raise UndefinedForPoint("the point has no vertex figures")
    if not 0 <= v < p.num_vertices:
        raise IndexOutOfRange(f"vertex {v} outside 0..{p.num_vertices - 1}")
    nbrs = sorted(neighbors(p)[v])
    vbit = 1 << v
    masks = []
    for f in p.masks:
        if f & vbit:
            masks.append(mask_of(i for i, w in enumerate(nbrs) if f >> w & 1))
    if p.dim == 1:
        return POINT
    return _check(IncidencePolytope(p.dim - 1, len(nbrs), tuple(masks)))


def apexes(p: IncidencePolytope) -> list[int]:
    """Vertices lying on all facets but exactly one."""
    if p.dim == 0:
        return []
    m = p.num_facets
    return [v for v, vm in enumerate(p.vertex_masks) if vm.bit_count() == m - 1]


def is_pyramid(p: IncidencePolytope) -> bool:
    return bool(apexes(p))


@dataclass(frozen=True)
class StripResult:
    apex_count: int
    core: IncidencePolytope


def strip_core(p: IncidencePolytope) -> StripResult:
    """Peel off apexes until none is left.

    Returns how many pyramid layers were removed and the remaining
    non-pyramidal core. The smallest-index apex is removed first.
    """
    count = 0
    while p.dim > 0:
        tops = apexes(p)
        if not tops:
            break
        a = tops[0]
        abit = 1 << a
        base = next(f for f in p.masks if not f & abit)
        keep = bits(base)
        pos = {v: i for i, v in enumerate(keep)}
        if p.dim == 1:
            p = POINT
        else:
            masks = tuple(
                mask_of(pos[v] for v in bits(f & ~abit)) for f in p.masks if f != base
            )
            p = _check(IncidencePolytope(p.dim - 1, len(keep), masks))
        count += 1
    return StripResult(count, p)


def is_unneighborly(p: IncidencePolytope) -> bool:
    """True iff every vertex has at least one non-neighbor."""
    if p.dim == 0:
        raise UndefinedForPoint("unneighborliness is undefined for the point")
    n = p.num_vertices
    return all(len(nb) < n - 1 for nb in neighbors(p))
