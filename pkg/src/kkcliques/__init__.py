"""Exact clique-counting machinery for bounded-degree uniform hypergraphs.

Kruskal-Katona shadow/clique extremal functions via cascade representations,
three signpost upper bounds on clique counts (vertex / edge / clique-count
constrained), jumping and uniqueness predicates, Steiner and packing shadow
constructions with recognition, and a brute-force oracle that re-derives all
of it at desk scale.
"""

from .bounds import (
    BoundReport,
    clique_bound,
    edge_bound,
    graph_clique_bound,
    jung_scan,
    neighborhood_ratio_bound,
    vertex_bound,
)
from .cascade import (
    Cascade,
    binom_exact,
    binom_inverse,
    binom_real,
    cascade_eval,
    cascade_of,
    complement_cascade,
    k_colex,
    k_via_complement,
    lovasz_clique_bound,
    shadow_colex,
)
from .designs import (
    BlockDesign,
    DesignCertificate,
    RecognitionResult,
    builtin_design,
    check_neighborhood_clique_criterion,
    recognize_packing_shadow,
    shadow_of_design,
    steiner_divisibility,
    verify_design,
)
from .errors import InternalCheckError, KKError, UnsupportedError
from .families import (
    SetFamily,
    clique_graph,
    cliques,
    colex_compare,
    colex_segment,
    complement_family,
    degree,
    from_text,
    mask_of,
    max_degree,
    neighborhood,
    relabel,
    retlex_compare,
    retlex_segment,
    shadow,
    support,
    to_text,
    upshadow,
    vertices_of,
)
from .oracle import (
    SearchResult,
    SearchSpec,
    canonical_form,
    exhaustive_search,
    tightness_sweep,
    verify_equality_theorems,
    verify_kkt,
    verify_uniqueness,
)
from .uniqueness import (
    UniquenessVerdict,
    is_clique_jumping,
    is_clique_unique,
    is_colex_unique,
    is_jumping,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDesign",
    "BoundReport",
    "Cascade",
    "DesignCertificate",
    "InternalCheckError",
    "KKError",
    "RecognitionResult",
    "SearchResult",
    "SearchSpec",
    "SetFamily",
    "UniquenessVerdict",
    "UnsupportedError",
    "binom_exact",
    "binom_inverse",
    "binom_real",
    "builtin_design",
    "canonical_form",
    "cascade_eval",
    "cascade_of",
    "check_neighborhood_clique_criterion",
    "clique_bound",
    "clique_graph",
    "cliques",
    "colex_compare",
    "colex_segment",
    "complement_cascade",
    "complement_family",
    "degree",
    "edge_bound",
    "exhaustive_search",
    "from_text",
    "graph_clique_bound",
    "is_clique_jumping",
    "is_clique_unique",
    "is_colex_unique",
    "is_jumping",
    "jung_scan",
    "k_colex",
    "k_via_complement",
    "lovasz_clique_bound",
    "mask_of",
    "max_degree",
    "neighborhood",
    "neighborhood_ratio_bound",
    "recognize_packing_shadow",
    "relabel",
    "retlex_compare",
    "retlex_segment",
    "shadow",
    "shadow_colex",
    "shadow_of_design",
    "steiner_divisibility",
    "support",
    "tightness_sweep",
    "to_text",
    "upshadow",
    "verify_design",
    "verify_equality_theorems",
    "verify_kkt",
    "verify_uniqueness",
    "vertex_bound",
    "vertices_of",
]
