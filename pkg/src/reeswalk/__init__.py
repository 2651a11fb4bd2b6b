"""Even walks, structural linear-type certificates, and an exact
Groebner oracle for squarefree monomial ideals given by their facet
complexes."""

from .complexes import Complex, Facet, Subcollection, dimension, is_connected, validate
from .monomials import (
    IndexTuple,
    Monomial,
    TaylorBinomial,
    alpha_degree,
    facet_monomial,
    gcd_normalize,
    taylor_binomial,
    taylor_binomial_gens,
    tuple_monomial,
)
from .structure import (
    CycleOrder,
    ForestCertificate,
    LinearTypeCertificate,
    LineGraph,
    exists_simplicial_cycle,
    good_leaf,
    graph_has_even_cycle,
    is_extended_trail_order,
    is_forest,
    is_simplicial_cycle_order,
    is_special_cycle_order,
    line_graph,
    linear_type_structural,
)
from .oracle import (
    GroebnerBasis,
    ReesRing,
    SymMonomial,
    SymPolynomial,
    expand_taylor,
    groebner,
    is_redundant,
    relation_generators,
    split_through_facet,
    linear_type_verify,
    decompose_non_walk,
    normal_form,
    rees_ring,
    vanishes_under_rees_map,
)
from .walks import (
    EnumerationResult,
    Side,
    WalkPair,
    WalkVerdict,
    Witness,
    enumerate_even_walks,
    extract_even_extended_trail,
    graph_closed_even_walk_check,
    is_even_walk,
    is_minimal_even_walk,
    support_neighbor_filter,
)

__version__ = "0.1.0"
