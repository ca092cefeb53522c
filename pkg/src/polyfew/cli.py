"""Command-line front end: ``polyfew <subcommand> ...``.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bounds import bounds_table, d_bracket, marcus_limit, verify_witness, witness
from .canon import canonical_key
from .census import CensusCache, census, compute_D2, count_types, marcus_scan
from .errors import PolytopeError
from .jsonio import dumps, read_polytope, to_dict
from .lattice import face_lattice
from .polytope import polar, strip_core


def _cache(args) -> CensusCache | None:
    if getattr(args, "no_cache", False):
        return None
    if getattr(args, "cache", None):
        return CensusCache(args.cache)
    root = os.environ.get("POLYFEW_CACHE")
    if root:
        return CensusCache(root)
    return CensusCache(Path.home() / ".cache" / "polyfew")


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_bounds(args) -> int:
    rows = bounds_table(args.alpha_max, args.beta_max)
    if args.csv:
        print("alpha,beta,lower,upper,crude_k_log2")
        for r in rows:
            print(",".join(map(str, r)))
    else:
        print(f"{'alpha':>5} {'beta':>5} {'lower':>6} {'upper':>6} {'log2 K':>8}")
        for a, b, lo, up, k in rows:
            print(f"{a:>5} {b:>5} {lo:>6} {up:>6} {k:>8}")
    return 0


def cmd_witness(args) -> int:
    _emit(dumps(witness(args.alpha, args.beta)), args.out)
    return 0


def cmd_verify_witness(args) -> int:
    print("alpha,beta,dim,vertices,facets,pyramid,matches")
    bad = 0
    for a in range(1, args.alpha_max + 1):
        for b in range(1, args.beta_max + 1):
            r = verify_witness(a, b)
            bad += not r.matches
            print(
                f"{a},{b},{r.dim},{r.num_vertices},{r.num_facets},"
                f"{str(r.is_pyramid).lower()},{str(r.matches).lower()}"
            )
    total = args.alpha_max * args.beta_max
    print(f"# {total - bad}/{total} witnesses match", file=sys.stderr)
    return 1 if bad else 0


def cmd_enumerate(args) -> int:
    recs = census(args.alpha, args.dim, args.beta_cap, _cache(args), args.jobs)
    for r in recs:
        print(r.to_json())
    nonpyr = sum(r.nonpyramid for r in recs)
    print(f"# {len(recs)} types ({nonpyr} non-pyramidal)", file=sys.stderr)
    return 0


def cmd_compute_d(args) -> int:
    cache = _cache(args)
    print("beta,D2")
    bad = False
    for beta in range(2, args.beta_max + 1):
        d = compute_D2(beta, cache=cache, jobs=args.jobs)
        br = d_bracket(2, beta)
        if not br.lower <= d <= br.upper:
            bad = True
            print(f"# D(2,{beta})={d} outside [{br.lower},{br.upper}]", file=sys.stderr)
        print(f"{beta},{d}")
    return 1 if bad else 0


def cmd_marcus_scan(args) -> int:
    d = marcus_scan(args.alpha, args.dmax, _cache(args), args.jobs)
    print(d)
    limit = marcus_limit(args.alpha)
    if d > limit:
        print(f"# unneighborly type in dimension {d} exceeds limit {limit}", file=sys.stderr)
        return 1
    return 0


def cmd_count(args) -> int:
    print(count_types(args.dim, args.alpha, args.beta, _cache(args), args.jobs))
    return 0


def cmd_strip(args) -> int:
    res = strip_core(read_polytope(args.file))
    data = to_dict(res.core)
    data["apex_count"] = res.apex_count
    print(json.dumps(data, separators=(",", ":")))
    return 0


def cmd_polar(args) -> int:
    # facet i of the output belongs to input vertex i, so polar twice is exact
    _emit(dumps(polar(read_polytope(args.file)), sort_facets=False), args.out)
    return 0


def cmd_lattice(args) -> int:
    p = read_polytope(args.file)
    lat = face_lattice(p, limit=args.limit)
    print(json.dumps({"rank": lat.height, "graded": True, "f_vector": lat.f_vector()}))
    return 0


def cmd_isomorphic(args) -> int:
    p, q = read_polytope(args.file1), read_polytope(args.file2)
    same = (p.dim, p.num_vertices, p.num_facets) == (q.dim, q.num_vertices, q.num_facets)
    print(str(same and canonical_key(p) == canonical_key(q)).lower())
    return 0


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyfew", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def with_cache(p):
        p.add_argument("--cache", metavar="DIR", help="census cache directory")
        p.add_argument("--no-cache", action="store_true", help="do not read or write the cache")
        p.add_argument("--jobs", type=_positive, default=1, help="enumeration worker processes")
        return p

    p = sub.add_parser("bounds", help="bracket and crude K table")
    p.add_argument("--alpha-max", type=_nonneg, required=True)
    p.add_argument("--beta-max", type=_nonneg, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("witness", help="extremal non-pyramid as polytope JSON")
    p.add_argument("alpha", type=_positive)
    p.add_argument("beta", type=_positive)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify-witness", help="check every witness on a grid")
    p.add_argument("--alpha-max", type=_positive, default=12)
    p.add_argument("--beta-max", type=_positive, default=12)
    p.set_defaults(func=cmd_verify_witness)

    p = with_cache(sub.add_parser("enumerate", help="census records as JSONL"))
    p.add_argument("--alpha", type=int, choices=(0, 1, 2), required=True)
    p.add_argument("--dim", type=_nonneg, required=True)
    p.add_argument("--beta-cap", type=_nonneg)
    p.set_defaults(func=cmd_enumerate)

    p = with_cache(sub.add_parser("compute-d", help="D(2, beta) for beta = 2..B"))
    p.add_argument("--beta-max", type=int, required=True)
    p.set_defaults(func=cmd_compute_d)

    p = with_cache(sub.add_parser("marcus-scan", help="largest unneighborly dimension"))
    p.add_argument("--alpha", type=int, choices=(1, 2), default=2)
    p.add_argument("--dmax", type=_nonneg, required=True)
    p.set_defaults(func=cmd_marcus_scan)

    p = with_cache(sub.add_parser("count", help="number of combinatorial types"))
    p.add_argument("--dim", type=_nonneg, required=True)
    p.add_argument("--alpha", type=_nonneg, required=True)
    p.add_argument("--beta", type=_nonneg, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("strip", help="remove pyramid apexes")
    p.add_argument("file")
    p.set_defaults(func=cmd_strip)

    p = sub.add_parser("polar", help="polar polytope")
    p.add_argument("file")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_polar)

    p = sub.add_parser("lattice", help="face lattice summary")
    p.add_argument("file")
    p.add_argument("--limit", type=_positive, default=16)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("isomorphic", help="compare two polytopes combinatorially")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_isomorphic)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PolytopeError, OSError, json.JSONDecodeError) as exc:
        print(f"polyfew: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
