"""Planar Gale diagrams ("wheels") of polytopes with d + 3 vertices.

A wheel places points on ``2k`` rays in circular order, where rays ``i`` and
``i + k`` point in opposite directions. Only the circular order and the
multiplicities matter: the angle between rays ``i < j`` is less than a
half-turn iff ``j - i < k``. No coordinates are ever used.

The positive circuits of such a configuration are the antipodal pairs and
the triples of rays that surround the origin. Their complements are the
facets of the polytope, which has ``n`` vertices and dimension ``n - 3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterator, Sequence

from .errors import NotPolytopal, PolytopeError
from .polytope import IncidencePolytope, _check


@dataclass(frozen=True)
class Wheel:
    num_diameters: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        k, m = self.num_diameters, self.multiplicities
        if k < 1 or len(m) != 2 * k:
            raise PolytopeError(f"wheel with {k} diameters needs {2 * k} multiplicities")
        if any(x < 0 for x in m):
            raise PolytopeError("negative multiplicity")
        for i in range(k):
            if m[i] + m[i + k] == 0:
                raise PolytopeError(f"diameter {i} is unused")

    @property
    def num_points(self) -> int:
        return sum(self.multiplicities)

    @classmethod
    def from_rays(cls, multiplicities: Sequence[int]) -> "Wheel":
        m = tuple(multiplicities)
        return cls(len(m) // 2, m)


@lru_cache(maxsize=None)
def surrounding_triples(k: int) -> tuple[tuple[int, int, int], ...]:
    """Ray triples ``p < q < r`` whose three circular gaps are all below a half-turn."""
    L = 2 * k
    out = []
    for p in range(L):
        for q in range(p + 1, L):
            if q - p >= k:
                break
            for r in range(q + 1, L):
                if r - q >= k:
                    break
                if p + L - r < k:
                    out.append((p, q, r))
    return tuple(out)


def wheel_is_polytopal(w: Wheel) -> bool:
    """Every open halfplane through the origin holds at least two points."""
    k, m = w.num_diameters, w.multiplicities
    L = 2 * k
    for i in range(L):
        if sum(m[(i + t) % L] for t in range(1, k)) < 2:
            return False
    return True


def wheel_facet_count(w: Wheel) -> int:
    k, m = w.num_diameters, w.multiplicities
    total = sum(m[i] * m[i + k] for i in range(k))
    for p, q, r in surrounding_triples(k):
        total += m[p] * m[q] * m[r]
    return total


def wheel_to_polytope(w: Wheel) -> IncidencePolytope:
    """Polytope whose Gale diagram is ``w``; points are numbered ray by ray."""
    if not wheel_is_polytopal(w):
        raise NotPolytopal(f"wheel {w.multiplicities} is not positively 2-spanning")
    k, m = w.num_diameters, w.multiplicities
    n = sum(m)
    start = [0] * (2 * k)
    for i in range(1, 2 * k):
        start[i] = start[i - 1] + m[i - 1]
    rays = [[1 << (start[i] + j) for j in range(m[i])] for i in range(2 * k)]
    full = (1 << n) - 1
    masks = []
    for i in range(k):
        for a, b in cartesian(rays[i], rays[i + k]):
            masks.append(full ^ (a | b))
    for p, q, r in surrounding_triples(k):
        for a, b, c in cartesian(rays[p], rays[q], rays[r]):
            masks.append(full ^ (a | b | c))
    return _check(IncidencePolytope(n - 3, n, tuple(masks)))


def _dihedral_min(t: tuple[int, ...]) -> bool:
    L = len(t)
    rev = tuple(t[-i % L] for i in range(L))
    for r in range(L):
        if t[r:] + t[:r] < t or rev[r:] + rev[:r] < t:
            return False
    return True


def work_units(n: int) -> list[tuple[int, int, int]]:
    """Independent slices ``(k, a0, b0)`` of the search: diameter count and first diameter."""
    return [
        (k, a0, s - a0)
        for k in range(2, n + 1)
        for s in range(1, n - k + 2)
        for a0 in range(s + 1)
    ]


def _unit_wheels(
    n: int, k: int, a0: int, b0: int, reduced: bool, max_facets: int | None
) -> Iterator[Wheel]:
    L = 2 * k
    m = [0] * L
    m[0], m[k] = a0, b0
    by_last: list[list[tuple[int, int, int]]] = [[] for _ in range(k)]
    for tri in surrounding_triples(k):
        by_last[max(x % k for x in tri)].append(tri)
    start_facets = a0 * b0
    cap = max_facets

    def rec(i: int, rem: int, fc: int) -> Iterator[Wheel]:
        if i == k:
            if rem:
                return
            if reduced:
                ak, bk = m[k - 1], m[L - 1]
                if ak and m[k] and not bk and not m[0]:
                    return
                if bk and m[0] and not ak and not m[k]:
                    return
            t = tuple(m)
            w = Wheel(k, t)
            if wheel_is_polytopal(w) and _dihedral_min(t):
                yield w
            return
        left = k - 1 - i
        pa, pb = m[i - 1], m[i - 1 + k]
        for s in range(1, rem - left + 1):
            for a in range(s + 1):
                b = s - a
                # a lex-minimal sequence starts with its smallest entry
                if a < a0 or b < a0:
                    continue
                if reduced:
                    if a and pa and not b and not pb:
                        continue
                    if b and pb and not a and not pa:
                        continue
                m[i], m[i + k] = a, b
                add = a * b
                for p, q, r in by_last[i]:
                    add += m[p] * m[q] * m[r]
                if cap is None or fc + add <= cap:
                    yield from rec(i + 1, rem - s, fc + add)
                m[i] = m[i + k] = 0

    if a0 + b0 > n or (cap is not None and start_facets > cap):
        return
    if b0 < a0:
        return
    yield from rec(1, n - a0 - b0, start_facets)


def enumerate_wheels(
    n: int,
    reduced: bool = False,
    max_facets: int | None = None,
    units: Sequence[tuple[int, int, int]] | None = None,
) -> Iterator[Wheel]:
    """One wheel per dihedral class of polytopal wheels with ``n`` points.

    ``reduced=True`` skips wheels with two neighbouring rays that could be
    merged without changing any positive circuit: both occupied while both
    their opposite rays are empty. Every combinatorial type still appears.
    ``max_facets`` prunes wheels whose polytope has more facets.
    """
    if n < 5:
        return
    for k, a0, b0 in units if units is not None else work_units(n):
        yield from _unit_wheels(n, k, a0, b0, reduced, max_facets)
