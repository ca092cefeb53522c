"""Brute-force face lattice, used as an oracle on small polytopes."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import LatticeNotGraded, OracleLimitExceeded
from .polytope import IncidencePolytope, bits

DEFAULT_ORACLE_LIMIT = 16


@dataclass(frozen=True)
class FaceLattice:
    """Faces as vertex bitmasks, with rank = dimension + 1 (empty face has rank 0)."""

    num_vertices: int
    rank: dict[int, int]
    covers: dict[int, tuple[int, ...]] = field(repr=False)

    @property
    def height(self) -> int:
        return max(self.rank.values())

    def __len__(self) -> int:
        return len(self.rank)

    def faces_of_rank(self, r: int) -> list[int]:
        return sorted(f for f, k in self.rank.items() if k == r)

    def f_vector(self) -> list[int]:
        counts = [0] * (self.height + 1)
        for k in self.rank.values():
            counts[k] += 1
        return counts

    def edge_pairs(self) -> set[tuple[int, int]]:
        out = set()
        for f in self.faces_of_rank(2):
            u, w = bits(f)
            out.add((u, w))
        return out


def face_lattice(p: IncidencePolytope, limit: int = DEFAULT_ORACLE_LIMIT) -> FaceLattice:
    """Close the facets under intersection and check the result is graded."""
    if p.num_vertices > limit:
        raise OracleLimitExceeded(f"{p.num_vertices} vertices exceeds oracle limit {limit}")
    top = p.vertex_set
    faces = {0, top}
    frontier = list(p.masks)
    faces.update(frontier)
    while frontier:
        new = []
        for a in frontier:
            for f in p.masks:
                b = a & f
                if b not in faces:
                    faces.add(b)
                    new.append(b)
        frontier = new

    def closure(s: int) -> int:
        out = top
        for f in p.masks:
            if f & s == s:
                out &= f
        return out

    # an upper cover of A is a minimal closure of A plus one vertex
    ordered = sorted(faces, key=lambda f: (f.bit_count(), f))
    covers: dict[int, list[int]] = {}
    for a in ordered:
        cands = {closure(a | 1 << v) for v in range(p.num_vertices) if not a >> v & 1}
        covers[a] = sorted(
            c for c in cands if not any(o != c and o & c == o for o in cands)
        )

    rank = {0: 0}
    for a in ordered:
        for b in covers[a]:
            rank[b] = max(rank.get(b, 0), rank[a] + 1)
    for a in ordered:
        for b in covers[a]:
            if rank[b] != rank[a] + 1:
                raise LatticeNotGraded(f"cover {bits(a)} < {bits(b)} skips a rank")
    if rank[top] != p.dim + 1:
        raise LatticeNotGraded(f"top has rank {rank[top]}, expected {p.dim + 1}")
    atoms = {f for f, k in rank.items() if k == 1}
    if atoms != {1 << v for v in range(p.num_vertices)}:
        raise LatticeNotGraded("atoms are not exactly the vertices")
    return FaceLattice(p.num_vertices, rank, {a: tuple(c) for a, c in covers.items()})
