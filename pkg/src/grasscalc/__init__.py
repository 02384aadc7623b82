"""Schubert calculus on Grassmannians G(k,n), projective convention.

The package computes in the cohomology ring H*(G(k,n)) with its
Schubert basis, builds explicit Littlewood-Richardson certificates for
nonvanishing products, certifies effective good divisibility by
exhaustive pair scan, and searches the Chern-series conditions that any
morphism between Grassmannians would have to satisfy.
"""

from .errors import (
    ContainmentError,
    ContextMismatch,
    DegreeError,
    DomainError,
    InternalError,
    PreconditionError,
    SearchBudgetExceeded,
    ShapeError,
)
from .partitions import (
    GrassContext,
    Partition,
    SkewShape,
    dual_context,
    fits_in_box,
    skew,
)
from .tableaux import (
    SkewFilling,
    count_lr_tableaux,
    enumerate_lr_tableaux,
    first_lr_tableau,
    has_lr_tableau,
    is_lr_tableau,
    reading_word,
    render_filling,
)
from .cohomology import (
    CohomologyClass,
    betti_number,
    duality_pairing,
    pieri_product,
    product,
    schubert_basis,
    schubert_class,
    total_rank,
    unit,
    zero,
)
from .witness import (
    CaseTag,
    MarkingStep,
    WitnessCertificate,
    witness,
    witness_marking,
    witness_simple,
)
from .divisibility import (
    EdReport,
    ZeroDivisorWitness,
    check_pair_nonvanishing,
    effective_good_divisibility,
    gd_upper_bound_witness,
)
from .tango import (
    ChernSearchResult,
    ChernSeries,
    ChernSystem,
    TargetSpec,
    chern_system_search,
    constancy_for_flag_target,
    constancy_forced,
    max_nonzero_degrees,
    series_from_terms,
    series_inverse,
    series_product,
)

__version__ = "0.1.0"

__all__ = [
    "CaseTag",
    "ChernSearchResult",
    "ChernSeries",
    "ChernSystem",
    "CohomologyClass",
    "ContainmentError",
    "ContextMismatch",
    "DegreeError",
    "DomainError",
    "EdReport",
    "GrassContext",
    "InternalError",
    "MarkingStep",
    "Partition",
    "PreconditionError",
    "SearchBudgetExceeded",
    "ShapeError",
    "SkewFilling",
    "SkewShape",
    "TargetSpec",
    "WitnessCertificate",
    "ZeroDivisorWitness",
    "betti_number",
    "check_pair_nonvanishing",
    "chern_system_search",
    "constancy_for_flag_target",
    "constancy_forced",
    "count_lr_tableaux",
    "duality_pairing",
    "dual_context",
    "effective_good_divisibility",
    "enumerate_lr_tableaux",
    "first_lr_tableau",
    "fits_in_box",
    "gd_upper_bound_witness",
    "has_lr_tableau",
    "is_lr_tableau",
    "max_nonzero_degrees",
    "pieri_product",
    "product",
    "reading_word",
    "render_filling",
    "schubert_basis",
    "schubert_class",
    "series_from_terms",
    "series_inverse",
    "series_product",
    "skew",
    "total_rank",
    "unit",
    "witness",
    "witness_marking",
    "witness_simple",
    "zero",
]
