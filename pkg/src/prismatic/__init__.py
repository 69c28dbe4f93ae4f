"""prismatic: computational structure theory of complementary prisms.

The complementary prism of a graph G glues G and its complement along a
perfect matching.  This package constructs the graphs the theory revolves
around, computes their automorphisms, antimorphisms, homomorphisms, cores,
spectra, Cheeger numbers and Hamiltonian witnesses, and cross-checks every
structural shortcut against an independent brute-force oracle.
"""

from .graphs import (
    Graph,
    build_graph,
    complementary_prism,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_adjacency,
    lexicographic_product,
    path_graph,
    prism_index,
    prism_vertex,
    star_graph,
)
from .graphio import load_fixture, parse_graph6, write_dot, write_graph6
from .fields import get_field
from .families import (
    FamilySpec,
    Mysterious505,
    apex_pair_graph,
    cay_f49xf4,
    colex_subsets,
    exa1_antimorphism,
    exa1_graph,
    exa1_prism_retraction,
    family_graph,
    figure_f9,
    kneser_graph,
    mysterious505,
    mysterious505_prism_retraction,
    named_graph,
    paley_graph,
    pendant_pair_graph,
    petersen_graph,
)
from .morphisms import (
    BudgetExhausted,
    CoreReport,
    GroupDescription,
    Permutation,
    SearchBudget,
    VertexMap,
    antimorphism_facts,
    automorphism_group,
    close_under_composition,
    compute_core,
    find_antimorphisms,
    find_homomorphism,
    find_isomorphisms,
    group_tools,
    has_regular_subgroup,
    is_antimorphism_map,
    is_homomorphism,
    is_isomorphism_map,
    is_self_complementary,
    is_vertex_transitive,
    verify_retraction,
    wreath_map,
)
from .prisms import (
    CoreCase,
    CoreCaseViolation,
    FamilyMatch,
    PrismPredicates,
    RatioClass,
    classify_core_case,
    detect_family,
    not_lex_product_check,
    prism_predicates,
    ratio_class,
    reconstruct_from_match,
    special_automorphism,
    structured_prism_aut,
)
from .spectral import (
    EigenvalueBoundReport,
    SpectrumReport,
    SrgAnalysis,
    SrgParams,
    WalkRegularityWitness,
    eigenvalue_bound_checks,
    is_one_walk_regular,
    numeric_spectrum,
    prism_extreme_eigenvalues,
    prism_spectrum_closed_form,
    srg_analysis,
    theta_bounds,
    thm_strg_inequality_check,
)
from .structural import (
    BoundCheckReport,
    CheegerReport,
    InvariantReport,
    KneserFactsReport,
    PrismHamReport,
    bound_checks,
    cheeger_brute_force,
    cheeger_closed_form,
    chromatic_number,
    hamiltonian,
    invariants,
    kneser_facts,
    max_clique,
    max_independent_set,
    prism_ham_constructions,
    vertex_connectivity,
    vertex_connectivity_brute,
)

__version__ = "0.1.0"
