"""Clique counts in graphs without long paths or long cycles.

Exact formulas, constructions of the extremal graphs, structural
recognizers, and an exhaustive brute-force oracle that checks them against
each other on small graphs.
"""

from .analysis import (
    FreenessProfile,
    circumference,
    count_cliques,
    count_cliques_at,
    freeness_profile,
    is_ck_free,
    is_pk_free,
    longest_path_order,
)
from .blocks import BlockDecomposition, blocks
from .canon import CanonicalForm, canonical_form, canonical_g6, is_isomorphic
from .constructions import (
    GlueRecipe,
    classical_extremal_family,
    colex_graph,
    enumerate_family,
    exceptional_classical,
    glue,
    split_graph,
    union_cliques,
)
from .enumerate import enumerate_edge_cores, enumerate_graphs
from .formulas import (
    ExtremalQuery,
    colex_decompose,
    ex_cycle_edges,
    ex_path_edges,
    f_t_bound,
    formula_value,
    kk_value,
    lemma_convexity,
    lemma_team_identity,
    luo_bound,
    majorizes,
    max_kt_edge,
    max_kt_vertex,
    split_sequence,
)
from .graph import Graph, from_edges, strip_isolated
from .graph6 import Graph6Error, decode, encode
from .recognizers import (
    FamilyInconsistencyWarning,
    ForestOfCliquesWitness,
    decompose_forest_of_cliques,
    in_family_C,
    in_family_L,
    is_extremal_edge,
    is_extremal_vertex_cycle,
    is_extremal_vertex_path,
)
from .verify import VerificationReport, brute_force_max, verify_cell, verify_suite

__version__ = "0.1.0"
