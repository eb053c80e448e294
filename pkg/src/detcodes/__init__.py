"""Exact computation of weight tables, weight distributions, minimum
distances and generalized Hamming weights of determinantal codes over
finite fields, cross-verified against brute-force enumeration."""

from .codes import (
    Code,
    GhwEntry,
    build_code,
    dual_min_distance,
    export_document,
    ghw,
    ghw_table,
    min_distance,
    min_weight_count,
    weight_distribution,
)
from .errors import (
    InternalConsistencyError,
    InvalidParameterError,
    ResourceLimitError,
)
from .gfield import (
    FieldTables,
    GfMatrix,
    canonical_rep,
    field_new,
    matrices_iter,
    partial_trace,
    rank,
)
from .qcombin import (
    Params,
    binom2,
    gaussian_binomial,
    gaussian_factorial,
    mu,
    nu,
    projective_count,
)
from .spectrum import (
    ConjectureVerdict,
    WeightTable,
    a_quantity,
    check_identity_sum,
    check_keyrec,
    check_slice_recursions,
    conjecture_report,
    conjecture_report_rank_counts,
    p_alternative,
    p_delsarte,
    slice_cardinality,
    slice_weight,
    w_hat,
    weight_table,
    wfrak_hat,
)

__version__ = "0.1.0"
