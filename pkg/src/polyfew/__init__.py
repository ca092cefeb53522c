"""Polytopes with few vertices and few facets.

Combinatorial polytopes as vertex-facet incidences, the operations that
build them, bounds on the dimension of non-pyramids with small vertex and
facet excess, and an exhaustive census of polytopes with at most d + 3
vertices driven by planar Gale diagrams.
"""

from .bounds import (
    BoundsBracket,
    WitnessReport,
    crude_k_bound,
    d_bracket,
    lower_f,
    marcus_limit,
    upper_F,
    verify_witness,
    witness,
)
from .canon import CanonicalKey, canonical_key, is_isomorphic, polytope_from_key
from .census import (
    CensusCache,
    CensusRecord,
    DPlusTwoSpec,
    census,
    compute_D2,
    count_types,
    dplus2_types,
    marcus_scan,
)
from .errors import *  # noqa: F401,F403
from .gale import Wheel, enumerate_wheels, wheel_is_polytopal, wheel_to_polytope
from .jsonio import dumps, loads, read_polytope, write_polytope
from .lattice import FaceLattice, face_lattice
from .polytope import (
    POINT,
    IncidencePolytope,
    StripResult,
    edges,
    free_sum,
    is_pyramid,
    is_unneighborly,
    join,
    make_polytope,
    polar,
    product,
    pyramid,
    simplex,
    strip_core,
    vertex_figure,
)

__version__ = "0.1.0"
