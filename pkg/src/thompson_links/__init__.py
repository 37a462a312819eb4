"""Thompson group F, positive Thompson links and bipartite arborescent tangles."""

from thompson_links.diagram import (
    DiagramError,
    LinkDiagram,
    TangleDiagram,
    arborescent_link,
    arborescent_tangle,
    close_numerator,
    export,
    link_from_pair,
    link_from_positive,
    parse_pd,
    simplify,
    to_pd,
    to_svg,
)
from thompson_links.invariants import (
    GuardExceeded,
    InvariantReport,
    Verdict,
    bracket,
    component_count,
    invariant_report,
    normalized_invariant,
    same_link_evidence,
    writhes,
)
from thompson_links.laurent import LaurentPolynomial
from thompson_links.trees import (
    PlaneBinaryTree,
    ThompsonElement,
    TreeSyntaxError,
    enumerate_trees,
    generator,
    inverse,
    is_positive,
    multiply,
    parse_tree,
    reduce_pair,
)
from thompson_links.weighted import (
    MoveError,
    WeightedPlaneTree,
    WeightedSyntaxError,
    bipartite_to_thompson,
    expand_vertex,
    is_bipartite,
    parse_weighted,
    positive_to_bipartite,
    subdivide_edge,
    tail_reduce,
    thompson_to_bipartite,
)

__version__ = "0.1.0"
