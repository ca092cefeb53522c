"""Exhaustive census of polytopes with at most d + 3 vertices.

Types are assembled from three generators, each complete for its excess:

* ``alpha = 0``: the simplex;
* ``alpha = 1``: repeated pyramids over a free sum of two simplices;
* ``alpha = 2``: wheels (planar Gale diagrams) for the non-pyramids, plus
  pyramids over lower-dimensional types.

A pyramid has the same vertex and facet excess as its base, so every type
in dimension d is a tower of pyramids over a unique non-pyramidal core of
dimension at most d. The census builds the cores and stacks the towers.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .bounds import d_bracket
from .canon import CanonicalKey, canonical_key, polytope_from_key
from .errors import PolytopeError, UnsupportedAlpha
from .gale import enumerate_wheels, wheel_to_polytope, work_units
from .polytope import (
    POINT,
    IncidencePolytope,
    free_sum,
    is_unneighborly,
    pyramid,
    simplex,
)

SOURCES = ("wheel", "dplus2", "constructor")


@dataclass(frozen=True)
class DPlusTwoSpec:
    """``k``-fold pyramid over the free sum of simplices of dimensions ``m <= n``."""

    k: int
    m: int
    n: int

    @property
    def dim(self) -> int:
        return self.k + self.m + self.n

    @property
    def num_facets(self) -> int:
        return (self.m + 1) * (self.n + 1) + self.k

    def polytope(self) -> IncidencePolytope:
        p = free_sum(simplex(self.m), simplex(self.n))
        for _ in range(self.k):
            p = pyramid(p)
        return p


def dplus2_types(d: int) -> Iterator[tuple[DPlusTwoSpec, IncidencePolytope]]:
    """All types of d-polytopes with d + 2 vertices; there are ``d*d // 4`` of them."""
    if d < 2:
        raise PolytopeError("d-polytopes with d+2 vertices need d >= 2")
    for m in range(1, d // 2 + 1):
        for n in range(m, d - m + 1):
            spec = DPlusTwoSpec(d - m - n, m, n)
            yield spec, spec.polytope()


@dataclass(frozen=True)
class CensusRecord:
    key: CanonicalKey
    dim: int
    num_vertices: int
    num_facets: int
    alpha: int
    beta: int
    nonpyramid: bool
    source: str

    @classmethod
    def of(cls, p: IncidencePolytope, nonpyramid: bool, source: str) -> "CensusRecord":
        return cls(
            canonical_key(p),
            p.dim,
            p.num_vertices,
            p.num_facets,
            p.alpha,
            p.beta,
            nonpyramid,
            source,
        )

    @property
    def polytope(self) -> IncidencePolytope:
        return polytope_from_key(self.key)

    def sort_key(self) -> tuple:
        return (self.dim, self.num_vertices, self.num_facets, self.key)

    def to_json(self) -> str:
        return json.dumps(
            {
                "key": self.key.hex(),
                "dim": self.dim,
                "v": self.num_vertices,
                "f": self.num_facets,
                "alpha": self.alpha,
                "beta": self.beta,
                "nonpyramid": self.nonpyramid,
                "source": self.source,
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, line: str) -> "CensusRecord":
        d = json.loads(line)
        return cls(
            bytes.fromhex(d["key"]),
            d["dim"],
            d["v"],
            d["f"],
            d["alpha"],
            d["beta"],
            d["nonpyramid"],
            d["source"],
        )


class CensusCache:
    """Append-only JSONL store, one file per (source, size).

    A sidecar ``.meta.json`` records the largest facet cap the file is known
    to be complete for (``null`` means complete without a cap).
    """

    def __init__(self, root: str | Path):
        self.root = Path(root)

    def _paths(self, source: str, size: int) -> tuple[Path, Path]:
        stem = f"{source}-{size}"
        return self.root / f"{stem}.jsonl", self.root / f"{stem}.meta.json"

    def _coverage(self, meta: Path):
        if not meta.exists():
            return False
        return json.loads(meta.read_text())["complete_up_to_facets"]

    def load(self, source: str, size: int, max_facets: int | None) -> list[CensusRecord] | None:
        data, meta = self._paths(source, size)
        cov = self._coverage(meta)
        if cov is False:
            return None
        if cov is not None and (max_facets is None or max_facets > cov):
            return None
        recs = [CensusRecord.from_json(line) for line in data.read_text().splitlines() if line]
        if max_facets is not None:
            recs = [r for r in recs if r.num_facets <= max_facets]
        return recs

    def store(
        self, source: str, size: int, max_facets: int | None, records: Iterable[CensusRecord]
    ) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        data, meta = self._paths(source, size)
        known = set()
        if data.exists():
            known = {json.loads(line)["key"] for line in data.read_text().splitlines() if line}
        new = [r for r in sorted(records, key=CensusRecord.sort_key) if r.key.hex() not in known]
        with data.open("a") as fh:
            for r in new:
                fh.write(r.to_json() + "\n")
        old = self._coverage(meta)
        if old is False or old is not None and (max_facets is None or max_facets > old):
            tmp = meta.with_suffix(".tmp")
            tmp.write_text(json.dumps({"complete_up_to_facets": max_facets}))
            os.replace(tmp, meta)


def default_cache() -> CensusCache | None:
    root = os.environ.get("POLYFEW_CACHE")
    return CensusCache(root) if root else None


def _wheel_records(
    n: int, max_facets: int | None, units: list[tuple[int, int, int]]
) -> list[CensusRecord]:
    out = []
    for w in enumerate_wheels(n, reduced=True, max_facets=max_facets, units=units):
        out.append(CensusRecord.of(wheel_to_polytope(w), True, "wheel"))
    return out


def wheel_types(
    n: int,
    max_facets: int | None = None,
    cache: CensusCache | None = None,
    jobs: int = 1,
) -> list[CensusRecord]:
    """Non-pyramidal types with ``n`` vertices in dimension ``n - 3``."""
    if n < 5:
        return []
    if cache is not None:
        hit = cache.load("wheel", n, max_facets)
        if hit is not None:
            return sorted(hit, key=CensusRecord.sort_key)
    units = work_units(n)
    if jobs > 1:
        chunks = [units[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as ex:
            parts = ex.map(_wheel_records, [n] * jobs, [max_facets] * jobs, chunks)
            recs = [r for part in parts for r in part]
    else:
        recs = _wheel_records(n, max_facets, units)
    by_key = {r.key: r for r in recs}
    out = sorted(by_key.values(), key=CensusRecord.sort_key)
    if cache is not None:
        cache.store("wheel", n, max_facets, out)
    return out


def nonpyramidal_types(
    d: int,
    alpha: int,
    beta_cap: int | None = None,
    cache: CensusCache | None = None,
    jobs: int = 1,
) -> list[CensusRecord]:
    """Non-pyramidal types of dimension ``d`` with exactly ``d + 1 + alpha`` vertices."""
    if alpha > 2:
        raise UnsupportedAlpha("complete generators exist only for alpha <= 2")
    max_facets = None if beta_cap is None else d + 1 + beta_cap
    if alpha == 0:
        return [CensusRecord.of(POINT, True, "constructor")] if d == 0 else []
    if alpha == 1:
        if d < 2:
            return []
        out = []
        for m in range(1, d // 2 + 1):
            spec = DPlusTwoSpec(0, m, d - m)
            if max_facets is None or spec.num_facets <= max_facets:
                out.append(CensusRecord.of(spec.polytope(), True, "dplus2"))
        return sorted(out, key=CensusRecord.sort_key)
    return wheel_types(d + 3, max_facets, cache, jobs)


def census(
    alpha_cap: int,
    d: int,
    beta_cap: int | None = None,
    cache: CensusCache | None = None,
    jobs: int = 1,
) -> list[CensusRecord]:
    """All types of d-polytopes with at most ``d+1+alpha_cap`` vertices.

    With ``beta_cap`` only types with at most ``d+1+beta_cap`` facets are
    kept. Records are sorted and unique by canonical key.
    """
    if alpha_cap > 2:
        raise UnsupportedAlpha("complete generators exist only for alpha <= 2")
    if alpha_cap < 0 or d < 0:
        raise PolytopeError("alpha_cap and d must be nonnegative")
    found: dict[CanonicalKey, CensusRecord] = {}
    for alpha in range(alpha_cap + 1):
        for e in range(d + 1):
            for core in nonpyramidal_types(e, alpha, beta_cap, cache, jobs):
                if e == d:
                    found.setdefault(core.key, core)
                    continue
                p = core.polytope
                for _ in range(d - e):
                    p = pyramid(p)
                rec = CensusRecord.of(p, False, "constructor" if alpha == 0 else core.source)
                found.setdefault(rec.key, rec)
    return sorted(found.values(), key=CensusRecord.sort_key)


def count_types(
    d: int,
    alpha_cap: int,
    beta_cap: int,
    cache: CensusCache | None = None,
    jobs: int = 1,
) -> int:
    """Number of types with at most ``d+1+alpha_cap`` vertices and ``d+1+beta_cap`` facets.

    When only the facet cap is small, the count is taken over polars.
    """
    if alpha_cap <= 2:
        return len(census(alpha_cap, d, beta_cap, cache, jobs))
    if beta_cap <= 2:
        return len(census(beta_cap, d, alpha_cap, cache, jobs))
    raise UnsupportedAlpha("need alpha_cap <= 2 or beta_cap <= 2")


def compute_D2(
    beta: int,
    d_max: int | None = None,
    cache: CensusCache | None = None,
    jobs: int = 1,
) -> int:
    """Largest d admitting a non-pyramid with at most d+3 vertices and d+1+beta facets.

    The default search ceiling is the proven upper bound for ``(2, beta)``,
    so the answer is exact.
    """
    if beta < 2:
        raise PolytopeError("compute_D2 expects beta >= 2")
    if d_max is None:
        d_max = d_bracket(2, beta).upper
    for d in range(d_max, -1, -1):
        for alpha in (2, 1, 0):
            if nonpyramidal_types(d, alpha, beta, cache, jobs):
                return d
    return 0


def unneighborly_types(
    alpha: int, d: int, cache: CensusCache | None = None, jobs: int = 1
) -> list[CensusRecord]:
    """Unneighborly types of dimension ``d`` with exactly ``d + alpha + 1`` vertices.

    Pyramids are skipped: the apex is adjacent to every other vertex.
    """
    if alpha not in (1, 2):
        raise UnsupportedAlpha("marcus scan supports alpha in {1, 2}")
    return [
        r
        for r in nonpyramidal_types(d, alpha, None, cache, jobs)
        if r.dim >= 1 and is_unneighborly(r.polytope)
    ]


def marcus_scan(
    alpha: int = 2,
    d_max: int = 7,
    cache: CensusCache | None = None,
    jobs: int = 1,
) -> int:
    """Largest d <= d_max with an unneighborly type on d + alpha + 1 vertices (0 if none)."""
    if alpha not in (1, 2):
        raise UnsupportedAlpha("marcus scan supports alpha in {1, 2}")
    for d in range(d_max, 0, -1):
        if unneighborly_types(alpha, d, cache, jobs):
            return d
    return 0
