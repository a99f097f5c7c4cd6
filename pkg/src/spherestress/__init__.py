"""Exact face enumeration and affine stress spaces of simplicial spheres."""

from .complex_core import (
    EMPTY,
    InadmissibleContraction,
    MissingFace,
    SimplicialComplex,
    antistar,
    are_isomorphic,
    boundary_simplex,
    complex_from_json,
    complex_to_json,
    cone,
    contract_edge,
    cycle,
    from_facets,
    in_class_S,
    induced,
    is_flag,
    is_z2_homology_sphere,
    join,
    link,
    max_missing_dim,
    missing_face_counts,
    missing_faces,
    relabel,
    skeleton,
    star,
    suspension,
)
from .enumeration import (
    InvariantVectors,
    check_dehn_sommerville,
    corollary_S_k_2k_bound,
    f_from_h,
    f_vector,
    g2_linear,
    g_from_h,
    g_vector,
    gamma_from_h,
    gamma_mcmullen_residual,
    gamma_vector,
    guaranteed_level_degree,
    h_from_f,
    h_vector,
    invariants,
    mcmullen_residual,
)
from .graphs import (
    Graph,
    InequalityCheck,
    VertexCapExceeded,
    gk_ratio_sweep,
    graph_of,
    independence_number,
    turan_bound,
    verify_alpha_inequalities,
)
from .sequences import (
    SequenceVerdict,
    corollary_level_g_check,
    is_M_sequence,
    is_sum_of_M_sequences,
    level_necessary_conditions,
    macaulay_expansion,
    macaulay_upper,
)
from .stress import (
    DegenerateEmbeddingError,
    Embedding,
    StressBasis,
    StressPolynomial,
    certified_stress_dims,
    cone_lift_check,
    derivative,
    derivative_span_dim,
    face_monomials,
    generic_embedding,
    is_level,
    is_stress,
    natural_embedding,
    socle_dims,
    star_stress_witness,
    stress_dim,
    stress_space,
    theta_forms,
)
from .catalog import (
    NamedSphere,
    build,
    build_K,
    build_counterexample_polytope,
    build_family,
    catalog_names,
    cross_polytope,
    cyclejoin,
    example_g_formula,
    support_stress_polynomial,
    verify_counterexample_level,
    verify_counterexample_support,
)
from .s24 import (
    NotInS24,
    ReductionReport,
    admissible_contractions,
    classify_g2_one,
    contraction_identity_check,
    find_induced_gamma,
    in_s24,
    probe_nevo,
    reduction_report,
    split_along_gamma,
    verify_theorem_main_s24,
)

__version__ = "0.1.0"
