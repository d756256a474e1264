"""Exact computations with the truncated point schemes of the degenerate
Sklyanin algebra S(1,1,1) and their point parameter rings."""

__version__ = "0.1.0"

from .scalars import EisensteinScalar, ParamPoly, MPoly, ZETA, ZETA2  # noqa: E402
from .geometry import (  # noqa: E402
    ProjPoint, LinearForm, WHOLE_PLANE, GenericPoint, PA, PB, PC, LA, LB, LC,
    incident, meet, join, normalize_point, param_point,
)
from .relations import (  # noqa: E402
    QuadraticRelationSet, default_relations, successor_matrix, successor_locus,
    det_cubic, factor_check, multilinearize, validate_relations,
)
from .quiver import Vertex, build_q, build_qprime, enumerate_paths, count_paths  # noqa: E402
from .schemes import (  # noqa: E402
    ComponentProduct, SchemeUnion, build_scheme, contains, intersect, oracle_extend,
    path_to_component, verify_vanishing,
)
from .sections import (  # noqa: E402
    ambient_image_dim, claim_checks, dim_B, dim_P, gamma_dim, h0_union, intersection_census,
)
from .hilbert import dim_S  # noqa: E402
