"""Colouring within chi-bounds, and Betti numbers of edge ideals."""

__version__ = "0.1.0"

from .bounds import (
    BOUND_KINDS,
    BoundFn,
    asym_bound,
    betti_family,
    closed_form_bound,
    const_f,
    const_f_bound,
    degree_bound,
    diamond_bound,
    double_bump,
    g_eval,
    is_parabolic,
    k2_transform,
    main_cor_bound,
    perfect_join_bound,
    perfectly_divisible_bound,
    pk2_bound,
    pk2_transform,
    sharpness_predicate,
    single_bump,
    triangle_free_bound,
    wagon,
)
from .clique import (
    Clique,
    CliqueLevel,
    check_conditions,
    clique_level,
    find_1_improvement,
    find_2_improvement,
    two_maximal_clique,
)
from .coloring import (
    PartitionResult,
    color,
    color_for_betti,
    is_triangle_free,
    partition_by_clique,
    refined_bound,
)
from .estimators import BettiColoring, BettiTransformer, CliqueColoring
from .exceptions import CapacityError, ChiboundError, ContractError, DomainError, GraphFormatError
from .family import (
    FamilyIndex,
    canonical_form,
    decompose,
    enumerate_family,
    family_witness,
    is_family_free,
    is_isomorphic,
    is_member,
    nonisomorphic_graphs,
)
from .generators import gnp_random_graph
from .graph import (
    ColoringResult,
    Graph,
    complement,
    disjoint_union,
    exact_chromatic_number,
    exact_clique_number,
    first_fit_coloring,
    induced,
    is_chordal,
    is_proper_coloring,
    join,
)
from .homology import (
    GF2,
    RATIONALS,
    BettiIndex,
    HomologyField,
    Vanishing,
    betti,
    betti_table,
    betti_vanishes,
    has_linear_resolution,
    homology_dim,
    matrix_rank,
    reduced_homology,
)
from .io import dumps, format_dimacs, format_edgelist, loads, parse_dimacs, parse_edgelist, read_graph, write_graph
from .validation import check_graph
