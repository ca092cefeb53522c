"""Bounds on the largest dimension of a non-pyramid with few vertices and facets.

For excesses ``alpha`` (vertices beyond a simplex) and ``beta`` (facets
beyond a simplex), ``D(alpha, beta)`` is the largest dimension in which a
polytope that is not a pyramid fits both limits. This module evaluates the
piecewise lower and upper bounds on it, the unneighborliness limit used in
the upper-bound argument, the resulting crude bound on the number of types,
and the extremal polytopes that realize the lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import OutOfDomain, UndefinedForZero
from .polytope import (
    IncidencePolytope,
    free_sum,
    iterated_join,
    product,
    simplex,
    strip_core,
)


def _nonneg(*xs: int) -> None:
    for x in xs:
        if not isinstance(x, int) or x < 0:
            raise OutOfDomain(f"expected a nonnegative integer, got {x!r}")


def upper_F(x: int, y: int) -> int:
    """Upper bound on D(x, y) from the unneighborliness induction.

    >>> upper_F(2, 3), upper_F(6, 2)
    (7, 20)
    """
    _nonneg(x, y)
    if x == 0 or y == 0:
        return 0
    if x <= 5:
        return 3 * x + y - 2
    return comb(x, 2) + y + 3


def lower_f(x: int, y: int) -> int:
    """Dimension of the extremal non-pyramid; symmetric in its arguments."""
    _nonneg(x, y)
    if x == 0 or y == 0:
        return 0
    if x == 1 or y == 1:
        return x + y
    if x >= y:
        return x + 2 * y - 1
    return 2 * x + y - 1


def marcus_limit(a: int) -> int:
    """Largest possible dimension of an unneighborly polytope with ``d + a + 1`` vertices."""
    _nonneg(a)
    if a == 0:
        raise UndefinedForZero("a polytope with d+1 vertices is a simplex, never unneighborly")
    if a <= 5:
        return 3 * a - 1
    return comb(a, 2) + 4


@dataclass(frozen=True)
class BoundsBracket:
    alpha: int
    beta: int
    lower: int
    upper: int


def d_bracket(alpha: int, beta: int) -> BoundsBracket:
    return BoundsBracket(
        alpha,
        beta,
        lower_f(alpha, beta),
        min(upper_F(alpha, beta), upper_F(beta, alpha)),
    )


def crude_k_exponent(alpha: int, beta: int) -> int:
    d = d_bracket(alpha, beta).upper
    return (d + alpha + 1) * (d + beta + 1)


def crude_k_bound(alpha: int, beta: int) -> int:
    """``2 ** ((D + alpha + 1) * (D + beta + 1))`` with D replaced by its upper bound.

    Any incidence matrix of a type within the limits fits in a
    ``(D + alpha + 1) x (D + beta + 1)`` grid once pyramids are stripped.
    """
    return 1 << crude_k_exponent(alpha, beta)


def bounds_table(alpha_max: int, beta_max: int) -> list[tuple[int, int, int, int, int]]:
    """Rows ``(alpha, beta, lower, upper, crude_k_log2)``."""
    rows = []
    for a in range(alpha_max + 1):
        for b in range(beta_max + 1):
            br = d_bracket(a, b)
            rows.append((a, b, br.lower, br.upper, crude_k_exponent(a, b)))
    return rows


SQUARE = product(simplex(1), simplex(1))


def witness(alpha: int, beta: int) -> IncidencePolytope:
    """Non-pyramid of dimension ``lower_f(alpha, beta)`` within the limits.

    * ``alpha >= beta == 1``: prism over a simplex, ``Δα × Δ1``
    * ``beta >= alpha == 1``: ``Δβ ⊕ Δ1``
    * ``alpha >= beta > 1``: ``beta - 1`` squares joined with ``Δ(α-β+1) × Δ1``
    * ``beta > alpha > 1``: ``alpha - 1`` squares joined with ``Δ(β-α+1) ⊕ Δ1``

    At ``alpha == beta`` the first matching branch is taken.
    """
    if not (isinstance(alpha, int) and isinstance(beta, int)) or alpha < 1 or beta < 1:
        raise OutOfDomain("witness needs alpha >= 1 and beta >= 1")
    seg = simplex(1)
    if beta == 1:
        return product(simplex(alpha), seg)
    if alpha == 1:
        return free_sum(simplex(beta), seg)
    if alpha >= beta:
        tail = product(simplex(alpha - beta + 1), seg)
        return iterated_join([SQUARE] * (beta - 1) + [tail])
    tail = free_sum(simplex(beta - alpha + 1), seg)
    return iterated_join([SQUARE] * (alpha - 1) + [tail])


@dataclass(frozen=True)
class WitnessReport:
    alpha: int
    beta: int
    witness: IncidencePolytope
    dim: int
    num_vertices: int
    num_facets: int
    is_pyramid: bool
    matches: bool


def verify_witness(alpha: int, beta: int) -> WitnessReport:
    w = witness(alpha, beta)
    d, nv, nf = w.dim, w.num_vertices, w.num_facets
    pyr = strip_core(w).apex_count > 0
    ok = nv == d + 1 + alpha and nf == d + 1 + beta and not pyr and d == lower_f(alpha, beta)
    return WitnessReport(alpha, beta, w, d, nv, nf, pyr, ok)
