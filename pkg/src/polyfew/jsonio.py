"""Reading and writing the ``polyfew/1`` polytope JSON format."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import PolytopeError
from .polytope import IncidencePolytope, make_polytope

SCHEMA = "polyfew/1"


def to_dict(p: IncidencePolytope, sort_facets: bool = True) -> dict[str, Any]:
    """Facets are always written with sorted vertices; ``sort_facets`` also sorts the list."""
    facets = [list(f) for f in p.facets]
    if sort_facets:
        facets.sort()
    return {"schema": SCHEMA, "dim": p.dim, "num_vertices": p.num_vertices, "facets": facets}


def from_dict(data: dict[str, Any]) -> IncidencePolytope:
    if data.get("schema") != SCHEMA:
        raise PolytopeError(f"unsupported schema {data.get('schema')!r}, expected {SCHEMA!r}")
    try:
        dim = int(data["dim"])
        n = int(data["num_vertices"])
        facets = [[int(i) for i in f] for f in data["facets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise PolytopeError(f"malformed polytope JSON: {exc}") from exc
    return make_polytope(dim, facets, n)


def dumps(p: IncidencePolytope, sort_facets: bool = True) -> str:
    return json.dumps(to_dict(p, sort_facets), separators=(",", ":"))


def loads(text: str) -> IncidencePolytope:
    return from_dict(json.loads(text))


def read_polytope(path: str | Path) -> IncidencePolytope:
    return loads(Path(path).read_text())


def write_polytope(p: IncidencePolytope, path: str | Path) -> None:
    Path(path).write_text(dumps(p) + "\n")
