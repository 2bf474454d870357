"""Group construction, validation, conjugacy classes, subgroups, cosets."""

import pytest

from gaugecount import (
    BadParams,
    ClosureOverflow,
    NotAGroup,
    NotASubgroup,
    ParseError,
    UnknownFamily,
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

# latin square with identity 0 but no associativity: (1*1)*2 = 2, 1*(1*2) = 4
LOOP5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


def test_builtin_orders_and_flags():
    assert trivial_group().order == 1
    assert cyclic_group(6).order == 6 and cyclic_group(6).is_abelian()
    assert dihedral_group(4).order == 8 and not dihedral_group(4).is_abelian()
    assert symmetric_group(3).order == 6 and not symmetric_group(3).is_abelian()
    assert symmetric_group(4).order == 24
    assert quaternion_group().order == 8
    assert binary_tetrahedral_group().order == 24
    assert binary_octahedral_group().order == 48
    assert binary_icosahedral_group().order == 120


def test_exponents():
    assert cyclic_group(6).exponent() == 6
    assert symmetric_group(3).exponent() == 6
    assert dihedral_group(4).exponent() == 4
    assert quaternion_group().exponent() == 4
    assert binary_tetrahedral_group().exponent() == 12


def test_builtin_group_dispatch():
    assert builtin_group("cyclic", (5,)).order == 5
    assert builtin_group("quaternion").order == 8
    with pytest.raises(UnknownFamily):
        builtin_group("sporadic")
    with pytest.raises(BadParams):
        builtin_group("cyclic")
    with pytest.raises(BadParams):
        builtin_group("quaternion", (3,))


def test_validate_table_rejects_nonassociative_loop():
    with pytest.raises(NotAGroup):
        validate_table(LOOP5)


def test_validate_table_rejects_broken_latin_square():
    bad = [[0, 1], [1, 1]]
    with pytest.raises(NotAGroup):
        validate_table(bad)
    with pytest.raises(NotAGroup):
        validate_table([])


def test_validate_table_rejects_missing_identity():
    # subtraction mod 3: a latin square with a right identity but no left one
    sub3 = [[(a - b) % 3 for b in range(3)] for a in range(3)]
    with pytest.raises(NotAGroup):
        validate_table(sub3)


def test_group_from_table_roundtrip():
    z3 = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    G = group_from_table(z3, name="Z3manual")
    assert G.identity == 0
    assert G.inv(1) == 2
    assert G.name == "Z3manual"
    with pytest.raises(BadParams):
        group_from_table(z3, labels=("a", "b"))


def test_dihedral_relations():
    n = 4
    G = dihedral_group(n)
    r, s = 1, n
    assert G.element_order(r) == n
    assert G.element_order(s) == 2
    assert G.mul(G.mul(s, r), s) == G.inv(r)
    rk = G.identity
    for _ in range(n):
        rk = G.mul(rk, r)
    assert rk == G.identity


def test_symmetric_group_bounds():
    with pytest.raises(BadParams):
        symmetric_group(7)
    with pytest.raises(BadParams):
        symmetric_group(0)
    assert symmetric_group(1).order == 1


def test_quaternion_structure():
    G = quaternion_group()
    order2 = [g for g in range(G.order) if G.element_order(g) == 2]
    assert len(order2) == 1
    minus_one = order2[0]
    order4 = [g for g in range(G.order) if G.element_order(g) == 4]
    assert len(order4) == 6
    for g in order4:
        assert G.mul(g, g) == minus_one


def test_binary_groups_have_unique_involution():
    for G in (binary_tetrahedral_group(), binary_octahedral_group(),
              binary_icosahedral_group()):
        assert sum(1 for g in range(G.order) if G.element_order(g) == 2) == 1
        assert center(G).order == 2


def test_conjugacy_classes_cyclic():
    cls = conjugacy_classes(cyclic_group(5))
    assert cls.n_classes == 5
    assert cls.sizes == (1,) * 5
    assert cls.reps == (0, 1, 2, 3, 4)
    assert cls.inverse_class == (0, 4, 3, 2, 1)


def test_conjugacy_classes_s3():
    G = symmetric_group(3)
    cls = conjugacy_classes(G)
    assert sorted(cls.sizes) == [1, 2, 3]
    assert cls.sizes[0] == 1
    assert cls.class_of[G.identity] == 0
    assert sum(cls.sizes) == 6


def test_conjugacy_classes_d4():
    cls = conjugacy_classes(dihedral_group(4))
    assert cls.sizes == (1, 2, 1, 2, 2)
    assert cls.reps == (0, 1, 2, 4, 5)


def test_class_ordering_contract():
    for G in (symmetric_group(4), dihedral_group(6), quaternion_group()):
        cls = conjugacy_classes(G)
        assert cls.reps[0] == G.identity
        assert list(cls.reps[1:]) == sorted(cls.reps[1:])
        for c in range(cls.n_classes):
            assert min(cls.members(c)) == cls.reps[c]


def test_centralizer_product_law():
    for G in (symmetric_group(4), dihedral_group(5), binary_tetrahedral_group()):
        cls = conjugacy_classes(G)
        for c in range(cls.n_classes):
            assert cls.sizes[c] * cls.centralizer_sizes[c] == G.order
            assert centralizer_order(G, cls.reps[c]) == cls.centralizer_sizes[c]


def test_inverse_class_is_involution():
    for G in (symmetric_group(4), quaternion_group(), cyclic_group(7)):
        cls = conjugacy_classes(G)
        for c in range(cls.n_classes):
            assert cls.inverse_class[cls.inverse_class[c]] == c
            g = cls.reps[c]
            assert cls.class_of[G.inv(g)] == cls.inverse_class[c]


def test_center_and_normalizer():
    D4 = dihedral_group(4)
    Z = center(D4)
    assert Z.order == 2
    assert 2 in Z  # r^2
    assert normalizer(D4, Z).order == 8
    assert center(symmetric_group(3)).order == 1


def test_subgroup_from_elements():
    Z6 = cyclic_group(6)
    H = subgroup_from_elements(Z6, [0, 2, 4])
    assert H.order == 3
    assert H.elements == (0, 2, 4)
    with pytest.raises(NotASubgroup):
        subgroup_from_elements(Z6, [0, 1, 3])
    with pytest.raises(NotASubgroup):
        subgroup_from_elements(Z6, [2, 4])  # identity missing
    with pytest.raises(NotASubgroup):
        subgroup_from_elements(Z6, [])


def test_generated_subgroup():
    D4 = dihedral_group(4)
    assert generated_subgroup(D4, [1]).order == 4
    assert generated_subgroup(D4, [1, 4]).order == 8
    assert generated_subgroup(D4, []).order == 1


def test_coset_space():
    D4 = dihedral_group(4)
    H = generated_subgroup(D4, [1])
    cs = coset_space(D4, H)
    assert cs.n_cosets == 2
    assert cs.reps == (0, 4)
    for cid, members in enumerate(cs.cosets):
        assert members[0] == cs.reps[cid]
        for g in members:
            assert cs.coset_of[g] == cid


def test_subgroup_as_group():
    Z4 = cyclic_group(4)
    H = subgroup_from_elements(Z4, [0, 2])
    sub, embed = subgroup_as_group(Z4, H)
    assert sub.order == 2
    assert sub.mul_table == ((0, 1), (1, 0))
    assert embed == (0, 2)


def test_first_proper_subgroup():
    assert first_proper_subgroup(cyclic_group(4)).order == 2
    assert first_proper_subgroup(cyclic_group(5)).order == 1  # fallback
    assert first_proper_subgroup(dihedral_group(4)).order == 4


def test_direct_product():
    G = direct_product(cyclic_group(2), cyclic_group(3))
    assert G.order == 6
    assert G.is_abelian()
    assert G.exponent() == 6


def test_group_text_roundtrip():
    G = symmetric_group(3)
    text = group_to_text(G)
    H = group_from_text(text, name="roundtrip")
    assert H.mul_table == G.mul_table
    assert H.labels == G.labels


def test_group_text_parse_errors():
    with pytest.raises(ParseError):
        group_from_text("")
    with pytest.raises(ParseError) as e:
        group_from_text("order x\n")
    assert e.value.line == 1
    with pytest.raises(ParseError) as e:
        group_from_text("order 2\n0 1\n1 9\n")
    assert e.value.line == 3
    with pytest.raises(ParseError):
        group_from_text("order 3\n0 1 2\n")  # missing rows


def test_build_from_generators():
    def mul(p, q):
        return tuple(p[q[x]] for x in range(3))

    G = build_from_generators([(1, 0, 2), (1, 2, 0)], mul, max_order=6)
    assert G.order == 6
    assert not G.is_abelian()
    with pytest.raises(ClosureOverflow):
        build_from_generators([(1, 0, 2), (1, 2, 0)], mul, max_order=4)


def test_cyclic_bounds():
    with pytest.raises(BadParams):
        cyclic_group(0)
    with pytest.raises(BadParams):
        dihedral_group(0)
