"""Exact solvers and an audit harness for the vertex-numbering strength
parameter and its domination, covering, and independence bounds."""

from .errors import (
    CapacityError,
    EmptyEdgeSetError,
    Graph6Error,
    Graph6HeaderError,
    Graph6TrailingError,
    Graph6TruncatedError,
    GraphInputError,
    IsolatedVertexError,
    LoopEdgeError,
    NumberingError,
    OrderRangeError,
    VertexRangeError,
)
from .graphs import (
    FAMILIES,
    MAX_ORDER,
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    fk_graph,
    generate,
    graph_from_edges,
    min_degree,
    path_graph,
    star_graph,
)
from .graph6 import emit_graph6, parse_graph6
from .invariants import (
    InvariantBundle,
    brute_invariant,
    compute_bundle,
    domination_number,
    edge_cover_number,
    independence_number,
    is_dominating_set,
    is_edge_cover,
    is_independent_set,
    is_matching,
    is_vertex_cover,
    matching_number,
    vertex_cover_number,
)
from .strength import (
    StrengthCertificate,
    fk_embed,
    is_fk_embedding,
    max_fk,
    strength_exact,
    strength_of_numbering,
    strength_oracle,
    strength_via_fk,
    validate_certificate,
    validate_numbering,
)
from .claims import CLAIM_IDS, Claim, ClaimOutcome, evaluate_all, evaluate_claim
from .corpus import (
    AuditReport,
    CorpusSpec,
    audit_corpus,
    canonical_code,
    dedup_nonisomorphic,
    enumerate_labeled,
    find_isomorphism,
)

__version__ = "0.1.0"
