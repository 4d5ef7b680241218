"""Classification of the four transitive types and its constructors.

Round trips are the core contract: classify(construct_type_k(data)) must
return k and recover B as a subspace, phi and psi as linear maps on the
center, and U, W as subspaces.
"""

import random
from fractions import Fraction

import pytest

from lorsim.classify import (
    catalog_B,
    classify,
    construct_type1,
    construct_type2,
    construct_type3,
    construct_type4,
    group_type_of,
    same_center_map,
    same_span,
    same_vector_span,
)
from lorsim.errors import EmptyAlgebraError, NotWeaklyIrreducibleError
from lorsim.liealg import (
    LieTriple,
    center_and_commutant,
    lie_closure,
    triple_k,
    triple_n,
    unit_vector,
)
from lorsim.linalg import Span, mat, zeros_vec
from lorsim.sampling import (
    make_instance,
    random_phi,
    random_surjective_psi,
    reducible_examples,
)

J2 = ((0, -1), (1, 0))


def test_type1_example():
    g = construct_type1(catalog_B(2)["so2"], 2)
    assert g.dim == 1 + 1 + 2
    c = classify(g)
    assert c.type_tag == 1
    assert same_span(c.B, catalog_B(2)["so2"], 2)


def test_type2_trivial_B():
    g = construct_type2([], 2)
    c = classify(g)
    assert c.type_tag == 2
    assert c.B == ()


def test_type3_example_n2():
    # span{(1, J, 0)} + all translations
    g = lie_closure(
        [LieTriple(1, J2, [0, 0]), triple_n([1, 0]), triple_n([0, 1])]
    )
    c = classify(g)
    assert c.type_tag == 3
    zin = center_and_commutant([mat(J2)])[1]
    assert same_center_map(c.z_B, c.phi, zin, [Fraction(1)], 2)


def test_type4_example_n3():
    jw = [[0, -1, 0], [1, 0, 0], [0, 0, 0]]
    g = lie_closure(
        [LieTriple(0, jw, [0, 0, 1]), triple_n([1, 0, 0]), triple_n([0, 1, 0])]
    )
    c = classify(g)
    assert c.type_tag == 4
    assert same_vector_span(c.U, [unit_vector(3, 2)], 3)
    assert same_vector_span(c.W, [unit_vector(3, 0), unit_vector(3, 1)], 3)
    zin = center_and_commutant([mat(jw)])[1]
    assert same_center_map(c.z_B, c.psi, zin, [unit_vector(3, 2)], 3, vector_valued=True)


def test_the_four_predicates_are_mutually_exclusive():
    rng = random.Random(1)
    for n, names in ((2, ["zero", "so2"]), (3, ["so2", "so3"])):
        for name in names:
            for t in (1, 2):
                g, _ = make_instance(t, name, n, seed=3)
                c = classify(g)
                assert c.type_tag == t
    g3, _ = make_instance(3, "so2", 3, seed=5)
    assert classify(g3).type_tag == 3
    g4, _ = make_instance(4, "so2", 3, seed=5)
    assert classify(g4).type_tag == 4


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_round_trip_all_types_catalog(n):
    rng = random.Random(100 + n)
    cat = catalog_B(n)
    for name, b in sorted(cat.items()):
        for ctor, tag in ((construct_type1, 1), (construct_type2, 2)):
            if tag == 2 and not b and n < 1:
                continue
            g = ctor(b, n)
            c = classify(g)
            assert c.type_tag == tag
            assert same_span(c.B, b, n)
        b_prime, z_b = center_and_commutant(b)
        if z_b:
            phi = random_phi(rng, len(z_b))
            g = construct_type3(b, phi, n)
            c = classify(g)
            assert c.type_tag == 3
            assert same_span(c.B, b, n)
            assert same_center_map(c.z_B, c.phi, z_b, phi, n)


def test_round_trip_type4_rotated():
    for n, seed in ((3, 0), (4, 7), (5, 11)):
        g, meta = make_instance(4, "so2", n, seed=seed, rotate=True)
        c = classify(g)
        assert c.type_tag == 4
        assert Span(n, c.U).dim == n - meta["W_dim"]


def test_constructed_algebras_are_closed_and_in_normal_form():
    from lorsim.liealg import verify_closed

    for t, name, n in ((1, "so3", 3), (2, "son", 4), (3, "so2", 4), (4, "so2", 4)):
        g, _ = make_instance(t, name, n, seed=2)
        assert verify_closed(g)


def test_type3_rejects_zero_phi():
    with pytest.raises(ValueError):
        construct_type3(catalog_B(2)["so2"], [0], 2)


def test_type3_impossible_for_centerless_B():
    with pytest.raises(ValueError):
        construct_type3(catalog_B(3)["so3"], [], 3)


def test_type4_rejects_full_W():
    jw = catalog_B(2)["so2"]
    with pytest.raises(ValueError):
        construct_type4(jw, [unit_vector(2, 0), unit_vector(2, 1)], [[0, 0]], 2)


def test_type4_rejects_B_not_vanishing_on_U():
    j_full = [[0, -1, 0], [1, 0, 0], [0, 0, 0]]
    bad = [[0, 0, -1], [0, 0, 0], [1, 0, 0]]
    with pytest.raises(ValueError):
        construct_type4([bad], [unit_vector(3, 0), unit_vector(3, 1)], [[0, 0, 1]], 3)


def test_type4_nonsurjective_needs_flag():
    jw = [[0, -1, 0], [1, 0, 0], [0, 0, 0]]
    w = [unit_vector(3, 0), unit_vector(3, 1)]
    with pytest.raises(ValueError):
        construct_type4([jw], w, [zeros_vec(3)], 3)
    g = construct_type4([jw], w, [zeros_vec(3)], 3, require_surjective=False)
    with pytest.raises(NotWeaklyIrreducibleError):
        classify(g)


def test_classify_rejects_empty():
    g = lie_closure([LieTriple(0, [[0]], [0])])
    with pytest.raises(EmptyAlgebraError):
        classify(g)


def test_classify_rejects_genuinely_reducible():
    for name, g in reducible_examples(3, seed=9):
        with pytest.raises(NotWeaklyIrreducibleError):
            classify(g)


def test_group_model_type1_and_2():
    c1 = classify(construct_type1(catalog_B(3)["so3"], 3))
    m1 = group_type_of(c1)
    assert m1.description == "(A x H) |x E" and m1.screw is None
    assert len(m1.translation_basis) == 3
    c2 = classify(construct_type2(catalog_B(3)["so3"], 3))
    assert group_type_of(c2).description == "H |x E"


def test_group_model_type3_screw_generator():
    g = lie_closure(
        [LieTriple(1, J2, [0, 0]), triple_n([1, 0]), triple_n([0, 1])]
    )
    m = group_type_of(classify(g))
    assert m.description == "(A^Phi x H) |x E"
    # phi(J) = 1, so the flow generator is J itself
    assert m.screw.z == mat(J2)
    assert m.h_basis == ()


def test_group_model_type4_screw_isometries():
    jw = [[0, -1, 0], [1, 0, 0], [0, 0, 0]]
    g = lie_closure(
        [LieTriple(0, jw, [0, 0, 1]), triple_n([1, 0, 0]), triple_n([0, 1, 0])]
    )
    m = group_type_of(classify(g))
    assert m.description == "(H x U^Psi) |x W"
    assert m.screw.variant == "U_psi"
    assert m.screw.u_basis == (unit_vector(3, 2),)
    assert same_span(list(m.screw.zs), [jw], 3)
    assert same_vector_span(m.translation_basis, [[1, 0, 0], [0, 1, 0]], 3)


def test_group_model_type3_with_kernel_in_H():
    # two-dimensional center, phi kills one direction: that direction joins H
    cat = catalog_B(4)
    b = cat["so2so2"]
    _, z_b = center_and_commutant(b)
    g = construct_type3(b, [Fraction(2), Fraction(0)], 4)
    m = group_type_of(classify(g))
    assert len(m.h_basis) == 1
    assert m.screw is not None
