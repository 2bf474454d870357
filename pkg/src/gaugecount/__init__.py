"""Exact dimension counting for gauge-invariant Hilbert spaces of lattice
gauge theories with a finite gauge group and scalar or fermionic matter."""

from .autos import (
    AutReport,
    AutomorphismSearch,
    GroupEndomorphism,
    analyze_automorphisms,
    class_image,
    compose,
    constant_identity_endo,
    endo_from_image,
    endo_from_text,
    endo_to_text,
    enumerate_automorphisms,
    greedy_generating_set,
    hamiltonian_symmetry_check,
    identity_endo,
    inner_automorphism,
    inversion_endo,
    is_ambivalent,
    is_automorphism,
    is_class_inverting,
    is_endomorphism,
    is_inner,
    is_involutory,
)
from .counting import (
    CountReport,
    IntegralityWitness,
    ParitySplit,
    count,
    count_fermion,
    count_fermion_parity_split,
    count_general,
    count_pure_gauge,
    count_scalar,
    count_scalar_per_site,
    count_zn_closed_form,
    fermion_sector_character,
    fermion_site_characters,
    staggered_vacuum_character,
    total_hilbert_dim,
    zn_site_characters,
)
from .cyclo import Cyclotomic, cyclotomic_poly, euler_phi, snap_to_root_of_unity
from .errors import (
    BadCharge,
    BadDims,
    BadParams,
    BudgetExceeded,
    BulkDisconnected,
    ClassInconsistency,
    ClosureOverflow,
    DimTooLarge,
    GaugeCountError,
    GroupMismatch,
    InvalidGammaSet,
    NonIntegralResult,
    NotAGroup,
    NotAHomomorphism,
    NotAnAutomorphism,
    NotASubgroup,
    NotFree,
    NotTransitive,
    OddSitesForStaggered,
    ParseError,
    SnapFailure,
    UnknownFamily,
)
from .groups import (
    ConjugacyClassTable,
    CosetSpace,
    FiniteGroup,
    SubgroupHandle,
    binary_icosahedral_group,
    binary_octahedral_group,
    binary_tetrahedral_group,
    build_from_generators,
    builtin_group,
    center,
    centralizer_order,
    conjugacy_classes,
    coset_space,
    cyclic_group,
    dihedral_group,
    direct_product,
    first_proper_subgroup,
    generated_subgroup,
    group_from_table,
    group_from_text,
    group_to_text,
    normalizer,
    quaternion_group,
    subgroup_as_group,
    subgroup_from_elements,
    symmetric_group,
    trivial_group,
    validate_table,
)
from .lattice import (
    LatticeGraph,
    TwistSpec,
    connected_components,
    dangling_boundary_extension,
    emit_edge_list,
    is_connected,
    lattice_chain,
    lattice_hypercubic,
    make_twist,
    parse_edge_list,
    twist_on_wrap_edges,
)
from .matter import (
    ClassFunction,
    FermionMatter,
    GroupAction,
    MatterSpec,
    OneDimRep,
    PureGauge,
    ScalarMatter,
    ScalarMatterPerSite,
    UnitaryRep,
    action_coset,
    action_from_text,
    action_left_mult,
    action_principal_chiral,
    action_product,
    action_to_text,
    action_trivial,
    constant_class_function,
    det_character,
    det_rep,
    dihedral_rotation_rep,
    fermion_site_character,
    fixed_point_character,
    fixed_point_count,
    mat_det_exact,
    mat_mul_exact,
    one_dim_class_values,
    one_dim_from_values,
    one_dim_to_rep,
    orbits,
    permutation_rep,
    rep_character,
    rep_direct_sum,
    rep_from_exact,
    rep_from_generator_images,
    rep_from_numeric,
    rep_from_text,
    rep_restrict,
    rep_to_text,
    spinor_components_for_dirac,
    su2_fundamental_rep,
    trivial_one_dim,
    trivial_rep,
    validate_action,
    zn_charge_rep,
)
from .oracle import (
    burnside_count,
    fermion_element_weight,
    fock_site_matrix,
    fock_site_trace,
    free_action_closed_form,
    free_orbit_decomposition,
    free_to_product,
    oracle_count,
    pair_count_table,
    transitive_to_coset,
)

__version__ = "0.1.0"
