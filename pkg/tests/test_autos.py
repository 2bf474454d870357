"""Endomorphisms, automorphism enumeration, ambivalence, symmetry checks."""

from fractions import Fraction

import pytest

from gaugecount import (
    BadParams,
    InvalidGammaSet,
    NotAHomomorphism,
    NotAnAutomorphism,
    ParseError,
    analyze_automorphisms,
    binary_tetrahedral_group,
    class_image,
    compose,
    conjugacy_classes,
    constant_identity_endo,
    cyclic_group,
    dihedral_group,
    direct_product,
    endo_from_image,
    endo_from_text,
    endo_to_text,
    enumerate_automorphisms,
    generated_subgroup,
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
    quaternion_group,
    symmetric_group,
)


def test_basic_endomorphisms():
    G = cyclic_group(4)
    assert identity_endo(G).is_identity_map()
    assert constant_identity_endo(G).is_constant_identity()
    inv = inversion_endo(G)
    assert inv.apply(1) == 3
    assert is_involutory(inv)
    with pytest.raises(BadParams):
        inversion_endo(symmetric_group(3))


def test_endo_from_image_validates():
    G = cyclic_group(4)
    sq = endo_from_image(G, [G.mul(g, g) for g in range(4)])
    assert not is_automorphism(sq)  # squaring is 2-to-1 on Z4
    with pytest.raises(NotAHomomorphism):
        endo_from_image(G, [0, 2, 1, 3])
    assert not is_endomorphism(G, [0, 2, 1, 3])


def test_inner_automorphisms():
    G = symmetric_group(3)
    t = next(g for g in range(G.order) if G.element_order(g) == 2)
    phi = inner_automorphism(G, t)
    assert is_automorphism(phi)
    assert is_inner(phi)
    assert is_involutory(phi)
    Z4 = cyclic_group(4)
    assert inner_automorphism(Z4, 2).is_identity_map()


def test_compose():
    G = cyclic_group(5)
    two = endo_from_image(G, [(2 * g) % 5 for g in range(5)])
    four = compose(two, two)
    assert four.image == tuple((4 * g) % 5 for g in range(5))


def test_enumeration_counts():
    assert len(enumerate_automorphisms(cyclic_group(5)).automorphisms) == 4
    assert len(enumerate_automorphisms(cyclic_group(6)).automorphisms) == 2
    assert len(enumerate_automorphisms(symmetric_group(3)).automorphisms) == 6
    assert len(enumerate_automorphisms(dihedral_group(4)).automorphisms) == 8
    assert len(enumerate_automorphisms(quaternion_group()).automorphisms) == 24
    klein = direct_product(cyclic_group(2), cyclic_group(2))
    assert len(enumerate_automorphisms(klein).automorphisms) == 6


def test_enumeration_is_deterministic_and_identity_first():
    G = dihedral_group(4)
    search = enumerate_automorphisms(G)
    assert search.complete
    assert search.work > 0
    assert search.automorphisms[0].is_identity_map()
    again = enumerate_automorphisms(G)
    assert [p.image for p in again.automorphisms] == [p.image for p in search.automorphisms]


def test_enumeration_budget_truncation():
    G = dihedral_group(4)
    search = enumerate_automorphisms(G, budget=10)
    assert not search.complete
    assert len(search.automorphisms) < 8


def test_analyze_cyclic():
    G = cyclic_group(3)
    rep = analyze_automorphisms(G, conjugacy_classes(G))
    assert rep.aut_order == 2
    assert rep.inner_order == 1
    assert rep.outer_order == 2
    assert not rep.ambivalent
    assert rep.quasi_ambivalent is True  # inversion is an involutory class inverter
    assert rep.class_inverting_witness is not None
    assert all(is_involutory(cc) for cc in rep.charge_conjugations)


def test_analyze_ambivalent_group():
    G = symmetric_group(3)
    cls = conjugacy_classes(G)
    rep = analyze_automorphisms(G, cls)
    assert rep.ambivalent
    assert rep.quasi_ambivalent is True
    assert rep.class_inverting_witness.is_identity_map()
    assert rep.outer_order == 1


def test_analyze_binary_tetrahedral():
    G = binary_tetrahedral_group()
    cls = conjugacy_classes(G)
    rep = analyze_automorphisms(G, cls)
    assert rep.aut_order == 24
    assert rep.inner_order == 12
    assert rep.outer_order == 2
    assert not rep.ambivalent
    assert rep.quasi_ambivalent is True
    assert len(rep.charge_conjugations) == 6
    inverting = [phi for phi in enumerate_automorphisms(G).automorphisms
                 if is_class_inverting(phi, cls)]
    assert len(inverting) == 12
    assert all(not is_inner(phi) for phi in inverting)


def test_analyze_truncated_budget_gives_unknown():
    G = dihedral_group(4)
    rep = analyze_automorphisms(G, conjugacy_classes(G), budget=10)
    assert not rep.complete
    assert rep.quasi_ambivalent is None
    assert rep.outer_order == 0


def test_is_class_inverting_requires_automorphism():
    G = cyclic_group(4)
    with pytest.raises(NotAnAutomorphism):
        is_class_inverting(constant_identity_endo(G), conjugacy_classes(G))


def test_ambivalence_matches_identity_class_inversion():
    for G in (cyclic_group(2), cyclic_group(5), symmetric_group(3),
              dihedral_group(4), quaternion_group()):
        cls = conjugacy_classes(G)
        assert is_ambivalent(cls) == is_class_inverting(identity_endo(G), cls)


def test_class_image():
    G = cyclic_group(4)
    cls = conjugacy_classes(G)
    cmap = class_image(inversion_endo(G), cls)
    assert cmap == (0, 3, 2, 1)


def test_hamiltonian_symmetry_check():
    G = cyclic_group(4)
    cls = conjugacy_classes(G)
    inv = inversion_endo(G)
    assert hamiltonian_symmetry_check(inv, cls, {1: Fraction(1), 3: Fraction(1)})
    assert hamiltonian_symmetry_check(identity_endo(G), cls, {2: 1})
    with pytest.raises(InvalidGammaSet):
        hamiltonian_symmetry_check(inv, cls, {1: 1, 3: 2})
    with pytest.raises(InvalidGammaSet):
        hamiltonian_symmetry_check(inv, cls, {1: 1})
    with pytest.raises(InvalidGammaSet):
        hamiltonian_symmetry_check(inv, cls, {9: 1})
    with pytest.raises(NotAnAutomorphism):
        hamiltonian_symmetry_check(constant_identity_endo(G), cls, {0: 1})


def test_hamiltonian_symmetry_check_detects_breaking():
    G = dihedral_group(4)
    cls = conjugacy_classes(G)
    outer = next(phi for phi in enumerate_automorphisms(G).automorphisms
                 if class_image(phi, cls)[3] == 4)
    # couple only one reflection class: the outer automorphism moves it
    assert not hamiltonian_symmetry_check(outer, cls, {3: 1})
    inner = inner_automorphism(G, 1)
    assert hamiltonian_symmetry_check(inner, cls, {3: 1})


def test_greedy_generating_set():
    for G in (symmetric_group(4), dihedral_group(6), binary_tetrahedral_group()):
        gens = greedy_generating_set(G)
        assert generated_subgroup(G, gens).order == G.order


def test_endo_text_roundtrip():
    G = cyclic_group(4)
    inv = inversion_endo(G)
    back = endo_from_text(endo_to_text(inv), G)
    assert back.image == inv.image
    with pytest.raises(ParseError):
        endo_from_text("endo 5\n0 4 3 2 1\n", G)
    with pytest.raises(ParseError):
        endo_from_text("", G)
