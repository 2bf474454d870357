"""Exact counting engine: hand values, twists, boundaries, integrality."""

from fractions import Fraction

import pytest

from gaugecount import (
    BadParams,
    BulkDisconnected,
    ClassFunction,
    Cyclotomic,
    FermionMatter,
    GroupMismatch,
    LatticeGraph,
    NonIntegralResult,
    OddSitesForStaggered,
    OneDimRep,
    PureGauge,
    ScalarMatter,
    ScalarMatterPerSite,
    action_coset,
    action_left_mult,
    action_trivial,
    conjugacy_classes,
    constant_class_function,
    constant_identity_endo,
    count,
    count_fermion,
    count_fermion_parity_split,
    count_general,
    count_pure_gauge,
    count_scalar,
    count_scalar_per_site,
    count_zn_closed_form,
    cyclic_group,
    dangling_boundary_extension,
    dihedral_group,
    dihedral_rotation_rep,
    fermion_site_characters,
    first_proper_subgroup,
    identity_endo,
    inversion_endo,
    lattice_chain,
    lattice_hypercubic,
    make_twist,
    one_dim_to_rep,
    quaternion_group,
    su2_fundamental_rep,
    symmetric_group,
    total_hilbert_dim,
    twist_on_wrap_edges,
    zn_charge_rep,
    zn_site_characters,
)


def test_pure_gauge_periodic_chain_counts_classes():
    # E - V = 0 on a periodic chain, so the sum collapses to one per class
    for G, n_cls in ((symmetric_group(3), 3), (cyclic_group(4), 4),
                     (dihedral_group(4), 5)):
        r = count_pure_gauge(G, lattice_chain(2, periodic=True))
        assert r.total == n_cls
        assert conjugacy_classes(G).n_classes == n_cls
        assert r.witness.passed and r.twist_kind == "none"


def test_pure_gauge_tree_is_one():
    for G in (symmetric_group(3), dihedral_group(4)):
        for L in (lattice_chain(3), lattice_chain(5),
                  lattice_hypercubic((2, 2), periodic=False)):
            if L.edge_count == L.site_count - 1:
                assert count_pure_gauge(G, L).total == 1


def test_pure_gauge_torus_values():
    assert count_pure_gauge(cyclic_group(2),
                            lattice_hypercubic((2, 2))).total == 32
    assert count_pure_gauge(symmetric_group(3),
                            lattice_hypercubic((1, 1))).total == 11


def test_empty_lattice_counts_one():
    r = count_pure_gauge(symmetric_group(3), LatticeGraph(0, ()))
    assert r.total == 1 and r.bulk_site_count == 0


def test_scalar_left_mult_chain():
    S3 = symmetric_group(3)
    r = count_scalar(S3, lattice_chain(2), ScalarMatter(action_left_mult(S3)))
    assert r.total == 6


def test_scalar_coset_chain():
    D4 = dihedral_group(4)
    H = first_proper_subgroup(D4)
    r = count_scalar(D4, lattice_chain(2), ScalarMatter(action_coset(D4, H)))
    assert r.total == 2


def test_scalar_per_site():
    S3 = symmetric_group(3)
    m = ScalarMatterPerSite((action_left_mult(S3), action_trivial(S3, 2)))
    assert count_scalar_per_site(S3, lattice_chain(2), m).total == 2
    with pytest.raises(BadParams):
        count(S3, lattice_chain(3), m)


def test_fermion_hand_values():
    L = lattice_chain(2, periodic=True)
    Q8 = quaternion_group()
    m8 = FermionMatter(flavours=(su2_fundamental_rep(Q8),),
                       spinor_count=1, vacuum="trivial")
    assert count_fermion(Q8, L, m8).total == 28
    s8 = count_fermion_parity_split(Q8, L, m8)
    assert (s8.dim_even, s8.dim_odd) == (28, 0)

    D4 = dihedral_group(4)
    m4 = FermionMatter(flavours=(dihedral_rotation_rep(D4, 4),),
                       spinor_count=1, vacuum="trivial")
    assert count_fermion(D4, L, m4).total == 20
    s4 = count_fermion_parity_split(D4, L, m4)
    assert (s4.dim_even, s4.dim_odd) == (20, 0)
    assert s4.trace_plain == 20 and s4.trace_weighted == 20
    assert total_hilbert_dim(D4, L, m4) == 1024


def test_fermion_staggered_vacuum():
    D4 = dihedral_group(4)
    m = FermionMatter(flavours=(dihedral_rotation_rep(D4, 4),),
                      spinor_count=1, vacuum="staggered")
    assert count(D4, lattice_chain(2, periodic=True), m).total == 20
    with pytest.raises(OddSitesForStaggered):
        count(D4, lattice_chain(3), m)


def test_fermion_signed_trace_on_isolated_site():
    # a charged one-dimensional vacuum flips the sign of the weighted trace
    Z2 = cyclic_group(2)
    iso = LatticeGraph(1, ())
    m = FermionMatter(flavours=(one_dim_to_rep(zn_charge_rep(Z2, 1)),),
                      spinor_count=1, vacuum=zn_charge_rep(Z2, 1))
    assert count_fermion(Z2, iso, m, parity_sign=1).total == 1
    assert count_fermion(Z2, iso, m, parity_sign=-1).total == -1
    sp = count_fermion_parity_split(Z2, iso, m)
    assert (sp.dim_even, sp.dim_odd) == (0, 1)
    assert (sp.trace_plain, sp.trace_weighted) == (1, -1)


def test_parity_split_sums_to_plain_trace():
    Q8 = quaternion_group()
    m = FermionMatter(flavours=(su2_fundamental_rep(Q8),),
                      spinor_count=2, vacuum="trivial")
    L = lattice_hypercubic((2,), periodic=True)
    sp = count_fermion_parity_split(Q8, L, m)
    assert sp.dim_even + sp.dim_odd == sp.trace_plain
    assert sp.dim_even - sp.dim_odd == sp.trace_weighted
    assert sp.dim_even >= 0 and sp.dim_odd >= 0


def test_fermion_site_characters_shapes():
    D4 = dihedral_group(4)
    cls = conjugacy_classes(D4)
    m = FermionMatter(flavours=(dihedral_rotation_rep(D4, 4),),
                      spinor_count=1, vacuum="staggered")
    chars = fermion_site_characters(m, cls, 4)
    assert len(chars) == 4
    assert chars[0].values == chars[2].values
    assert chars[1].values == chars[3].values
    with pytest.raises(OddSitesForStaggered):
        fermion_site_characters(m, cls, 3)

    # on a charged flavour the filled odd sites carry a visibly different weight
    Z4 = cyclic_group(4)
    cls4 = conjugacy_classes(Z4)
    mz = FermionMatter(flavours=(one_dim_to_rep(zn_charge_rep(Z4, 1)),),
                       spinor_count=1, vacuum="staggered")
    even, odd = fermion_site_characters(mz, cls4, 2)
    assert even.values != odd.values


def test_identity_twist_is_normalized():
    S3 = symmetric_group(3)
    L = lattice_chain(2, periodic=True)
    tw = make_twist(L, identity_endo(S3), [1])
    r = count_pure_gauge(S3, L, twist=tw)
    assert r.total == 3 and r.twist_kind == "none"
    assert any("identity twist" in w for w in r.warnings)


def test_sink_twist_frees_head_site():
    Z3 = cyclic_group(3)
    L = lattice_chain(2)
    tw = make_twist(L, constant_identity_endo(Z3), [0])
    r = count_pure_gauge(Z3, L, twist=tw)
    assert r.total == 1
    assert r.twist_kind == "sink" and r.free_sites == (1,)


def test_dangling_attach_equals_manual_extension():
    Z3 = cyclic_group(3)
    L = lattice_chain(2)
    via_arg = count(Z3, L, PureGauge(), dangling_attach=[1])
    L2, tw = dangling_boundary_extension(L, (1,), Z3)
    manual = count(Z3, L2, PureGauge(), twist=tw)
    assert via_arg.total == manual.total == 1
    with pytest.raises(BadParams):
        count(Z3, L, PureGauge(), twist=tw, dangling_attach=[1])


def test_inversion_twist_alpha_and_total():
    Z4 = cyclic_group(4)
    L = lattice_chain(2, periodic=True)
    tw = twist_on_wrap_edges(L, inversion_endo(Z4), 0)
    r = count_pure_gauge(Z4, L, twist=tw)
    assert r.total == 2
    assert r.twist_kind == "proper" and r.twisted_head_count == 1
    assert r.alpha == (Fraction(1), Fraction(0), Fraction(1), Fraction(0))


def test_twisted_self_loop_warns():
    Z3 = cyclic_group(3)
    L = lattice_hypercubic((1,), periodic=True)
    tw = make_twist(L, inversion_endo(Z3), [0])
    r = count_pure_gauge(Z3, L, twist=tw)
    assert r.total == 1
    assert any("self-loop" in w for w in r.warnings)


def test_disconnected_bulk_is_rejected():
    Z4 = cyclic_group(4)
    L = lattice_chain(2)
    tw = make_twist(L, inversion_endo(Z4), [0])
    with pytest.raises(BulkDisconnected):
        count_pure_gauge(Z4, L, twist=tw)


def test_zn_closed_forms_match_engine():
    for N in (2, 3, 4):
        G = cyclic_group(N)
        cls = conjugacy_classes(G)
        for charges in ((0, 0, 0), (1, 0, 0), (1, 1, 1), (2, 1, 0)):
            L = lattice_chain(3, periodic=True)
            chars = zn_site_characters(N, charges, cls)
            closed = count_zn_closed_form(N, charges, L)
            if closed == 0:
                total = count_general(G, cls, L, chars).total
                assert total == 0
            else:
                assert count_general(G, cls, L, chars).total == closed

            open3 = lattice_chain(3)
            ext, tw = dangling_boundary_extension(open3, (2,), G)
            padded = chars + [constant_class_function(cls, 1)]
            assert (count_general(G, cls, ext, padded, twist=tw).total
                    == count_zn_closed_form(N, charges, ext, boundary="dangling"))

            ctw = twist_on_wrap_edges(L, inversion_endo(G), 0)
            assert (count_general(G, cls, L, chars, twist=ctw).total
                    == count_zn_closed_form(N, charges, L, boundary="cperiodic"))


def test_zn_closed_form_parameter_errors():
    L = lattice_chain(3, periodic=True)
    with pytest.raises(BadParams):
        count_zn_closed_form(0, (0, 0, 0), L)
    with pytest.raises(BadParams):
        count_zn_closed_form(3, (0, 0), L)
    with pytest.raises(BadParams):
        count_zn_closed_form(3, (0, 0, 0), L, boundary="moebius")
    with pytest.raises(BadParams):
        count_zn_closed_form(3, (), LatticeGraph(1, ()), boundary="dangling")


def test_fractional_class_sum_is_rejected():
    Z2 = cyclic_group(2)
    cls = conjugacy_classes(Z2)
    bad = constant_class_function(cls, Fraction(1, 3))
    with pytest.raises(NonIntegralResult) as e:
        count_general(Z2, cls, lattice_chain(2), bad)
    assert "denominator" in str(e.value)


def test_irrational_class_sum_is_rejected():
    Z3 = cyclic_group(3)
    cls = conjugacy_classes(Z3)
    z = Cyclotomic.root_of_unity(3)
    lopsided = ClassFunction(Z3, (Cyclotomic.one(), z, z))
    with pytest.raises(NonIntegralResult) as e:
        count_general(Z3, cls, LatticeGraph(1, ()), lopsided)
    assert "rational=False" in str(e.value)


def test_negative_total_needs_explicit_opt_in():
    Z2 = cyclic_group(2)
    cls = conjugacy_classes(Z2)
    minus = constant_class_function(cls, -1)
    L = LatticeGraph(1, ())
    with pytest.raises(NonIntegralResult):
        count_general(Z2, cls, L, minus)
    r = count_general(Z2, cls, L, minus, require_nonnegative=False)
    assert r.total == -1 and not r.witness.nonnegative


def test_group_mismatch_is_rejected():
    S3 = symmetric_group(3)
    Z3 = cyclic_group(3)
    cls3 = conjugacy_classes(Z3)
    with pytest.raises(GroupMismatch):
        count_general(S3, cls3, lattice_chain(2),
                      constant_class_function(cls3, 1))
    clsS = conjugacy_classes(S3)
    with pytest.raises(GroupMismatch):
        count_general(S3, clsS, lattice_chain(2),
                      constant_class_function(cls3, 1))
    tw = make_twist(lattice_chain(2, periodic=True), inversion_endo(Z3), [1])
    with pytest.raises(GroupMismatch):
        count_pure_gauge(S3, lattice_chain(2, periodic=True), twist=tw)


def test_site_character_count_must_match():
    Z2 = cyclic_group(2)
    cls = conjugacy_classes(Z2)
    with pytest.raises(BadParams):
        count_general(Z2, cls, lattice_chain(3),
                      [constant_class_function(cls, 1)] * 2)


def test_unknown_matter_is_rejected():
    with pytest.raises(BadParams):
        count(cyclic_group(2), lattice_chain(2), object())


def test_count_dispatch_matches_direct_entry_points():
    D4 = dihedral_group(4)
    L = lattice_chain(2, periodic=True)
    assert count(D4, L, PureGauge()).total == count_pure_gauge(D4, L).total
    sm = ScalarMatter(action_coset(D4, first_proper_subgroup(D4)))
    assert count(D4, L, sm).total == count_scalar(D4, L, sm).total
    fm = FermionMatter(flavours=(dihedral_rotation_rep(D4, 4),),
                       spinor_count=1, vacuum="trivial")
    assert count(D4, L, fm).total == count_fermion(D4, L, fm).total


def test_report_structure():
    S3 = symmetric_group(3)
    r = count_pure_gauge(S3, lattice_chain(2, periodic=True))
    assert len(r.per_class) == len(r.class_sizes) == 3
    assert r.free_factor == Cyclotomic.one()
    assert r.site_count == 2 and r.edge_count == 2 and r.bulk_site_count == 2
    assert r.alpha is None and r.free_sites == ()
    assert r.witness.ring_order >= 1 and r.witness.denominator == 1


def test_total_hilbert_dim_values():
    S3 = symmetric_group(3)
    L = lattice_chain(2)
    assert total_hilbert_dim(S3, L, PureGauge()) == 6
    assert total_hilbert_dim(S3, L, ScalarMatter(action_left_mult(S3))) == 216
    per = ScalarMatterPerSite((action_left_mult(S3), action_trivial(S3, 2)))
    assert total_hilbert_dim(S3, L, per) == 72
