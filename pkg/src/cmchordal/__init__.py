"""Cohen-Macaulay classification of chordal graphs with algebraic cross-checks."""

from .chordal import (
    EliminationOrder,
    FacetList,
    FreeVertexReport,
    free_vertex_facets,
    is_chordal,
    is_perfect_elimination,
    maximal_cliques,
    mcs_order,
    quasi_forest_leaf_order,
)
from .classify import (
    ClassificationReport,
    SocleComputation,
    all_free_vertex_types,
    classify,
    cm_partition,
    cm_type,
    is_gorenstein,
    socle_computation,
    socle_type_oracle,
)
from .complex import SimplicialComplex, link
from .covers import CoverList, is_unmixed, maximal_independent_sets, minimal_vertex_covers
from .errors import (
    GraphFormatError,
    IsolatedVertexError,
    NotAFaceError,
    NotChordalError,
    NotCohenMacaulayError,
    VoidComplexError,
)
from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    format_graph,
    incomparability_graph_of_face_poset,
    induced_subgraph,
    parse_graph,
    path_graph,
    random_chordal,
)
from .oracle import (
    ALL_FIELDS,
    F2,
    F3,
    Q,
    BettiProfile,
    FieldSpec,
    independence_complex,
    reduced_betti,
    reisner_is_cm,
)

__version__ = "0.1.0"
