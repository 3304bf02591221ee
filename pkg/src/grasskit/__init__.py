"""grasskit: exact decomposability toolkit for sparse exterior-power elements.

Builds the classical exchange relations and the rank-6 relation family for
the cone of decomposable p-vectors, the cone-preserving maps generating the
latter, a parameter-dependent criterion polynomial, and a five-method
decision front-end with independently checkable certificates.  All
arithmetic is exact: arbitrary-precision rationals or a prime field GF(q),
q > 3.
"""

from .decide import METHOD_ORDER, Verdict, decide, recheck_certificate
from .errors import (
    ConsistencyError,
    GrasskitError,
    LoadError,
    PullbackIdentityError,
    ShapeError,
)
from .exterior import (
    Multivector,
    dual_iso,
    induced_map,
    normalize_indices,
    pushforward,
    wedge,
)
from .field import Field, GFElement, is_prime
from .gcp import GcpMap, apply_gcp, build_X, build_Z, gcp_map, k4_relation_value, pullback_check
from .linalg import Matrix, det_rows, kernel_basis, mat_rank
from .multipoly import MultiPoly, poly_eval, poly_mul
from .param import (
    HVerdict,
    ParamImage,
    generic_rank_check,
    h_poly,
    h_probabilistic,
    param_X,
    param_image,
)
from .relations import (
    FormBatch,
    PlueckerIndex,
    QuadraticForm,
    RelationTriple,
    count_pluecker,
    count_rank6,
    enumerate_pluecker,
    enumerate_rank6,
    evaluate_form,
    expand_rank6,
    expand_rank6_check,
    expand_rank6_signed,
    form_rank,
    pluecker_batch,
    pluecker_form,
    pluecker_form_raw,
    rank6_batch,
    rank6_form,
    threeterm_identity_check,
)
from .witness import (
    Subspace,
    WitnessResult,
    brute_force_decomposable,
    intersect,
    q_dim,
    span_of_decomposable,
    witness_from_pair,
    witness_search,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "Field",
    "FormBatch",
    "GFElement",
    "GcpMap",
    "GrasskitError",
    "HVerdict",
    "LoadError",
    "METHOD_ORDER",
    "Matrix",
    "MultiPoly",
    "Multivector",
    "ParamImage",
    "PlueckerIndex",
    "PullbackIdentityError",
    "QuadraticForm",
    "RelationTriple",
    "ShapeError",
    "Subspace",
    "Verdict",
    "WitnessResult",
    "apply_gcp",
    "brute_force_decomposable",
    "build_X",
    "build_Z",
    "count_pluecker",
    "count_rank6",
    "decide",
    "det_rows",
    "dual_iso",
    "enumerate_pluecker",
    "enumerate_rank6",
    "evaluate_form",
    "expand_rank6",
    "expand_rank6_check",
    "expand_rank6_signed",
    "form_rank",
    "gcp_map",
    "generic_rank_check",
    "h_poly",
    "h_probabilistic",
    "induced_map",
    "intersect",
    "is_prime",
    "k4_relation_value",
    "kernel_basis",
    "mat_rank",
    "normalize_indices",
    "param_X",
    "param_image",
    "pluecker_batch",
    "pluecker_form",
    "pluecker_form_raw",
    "poly_eval",
    "poly_mul",
    "pullback_check",
    "pushforward",
    "q_dim",
    "rank6_batch",
    "rank6_form",
    "recheck_certificate",
    "span_of_decomposable",
    "threeterm_identity_check",
    "wedge",
    "witness_from_pair",
    "witness_search",
]
