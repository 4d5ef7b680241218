"""Triples, brackets, closures and the group-level matrices.

The bracket's closed form is checked against an independent oracle: embed
both triples, take the honest matrix commutator, extract the triple back.
"""

import random
from fractions import Fraction

import numpy as np
import pytest

from lorsim.errors import NotClosedError, NotInNormalPositionError, NotSkewError
from lorsim.liealg import (
    LieTriple,
    bracket,
    center_and_commutant,
    dilation_matrix,
    embed_matrix,
    exp_triple,
    fixes_line_p,
    full_algebra,
    is_eta_orthogonal,
    lie_closure,
    max_dim,
    project_parts,
    rotation_matrix,
    so_basis,
    subalgebra_from_matrices,
    translation_matrix,
    triple_a,
    triple_from_matrix,
    triple_k,
    triple_n,
    unit_vector,
    verify_closed,
)
from lorsim.linalg import Span, commutator, identity, mat, mat_mul, mat_vec
from lorsim.minkowski import MinkowskiSpace
from lorsim.sampling import random_triple

J2 = ((0, -1), (1, 0))


def _commutator_oracle(u, v):
    return triple_from_matrix(commutator(embed_matrix(u), embed_matrix(v)))


def test_embed_scalar_block():
    m = embed_matrix(triple_a(2))
    assert m == mat([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1]])


def test_embed_translation_block():
    m = embed_matrix(triple_n([1, 0]))
    assert m == mat([[0, -1, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]])


def test_embed_requires_skew():
    with pytest.raises(NotSkewError):
        LieTriple(0, [[1, 0], [0, 0]], [0, 0])


def test_embedded_matrices_are_eta_skew():
    sp = MinkowskiSpace(3)
    rng = random.Random(3)
    G = sp.gram
    for _ in range(100):
        m = embed_matrix(random_triple(rng, 3))
        mt = tuple(zip(*m))
        lhs = mat_mul(mt, G)
        rhs = mat_mul(G, m)
        assert all(
            lhs[i][j] + rhs[i][j] == 0 for i in range(5) for j in range(5)
        )


def test_triple_from_matrix_rejects_bad_shape():
    with pytest.raises(NotInNormalPositionError):
        triple_from_matrix(mat([[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]))


def test_bracket_scalar_with_translation():
    u = triple_a(2)
    v = triple_n([1, 0])
    assert bracket(u, v) == v
    assert bracket(u, v) == _commutator_oracle(u, v)


def test_bracket_rotation_with_translation():
    u = triple_k(J2)
    v = triple_n([1, 0])
    assert bracket(u, v) == triple_n([0, 1])
    assert bracket(u, v) == _commutator_oracle(u, v)


def test_bracket_antisymmetry():
    rng = random.Random(5)
    for _ in range(50):
        u = random_triple(rng, 3)
        assert bracket(u, u).is_zero()
        v = random_triple(rng, 3)
        assert bracket(u, v) == bracket(v, u).scale(-1)


def test_bracket_matches_commutator_randomly():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.choice([1, 2, 3, 4])
        u, v = random_triple(rng, n), random_triple(rng, n)
        assert bracket(u, v) == _commutator_oracle(u, v)


def test_jacobi_identity():
    rng = random.Random(9)
    zero = LieTriple(0, [[0] * 3 for _ in range(3)], [0] * 3)
    for _ in range(50):
        u, v, w = (random_triple(rng, 3) for _ in range(3))
        acc = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(
            w, bracket(u, v)
        )
        assert acc.is_zero()


def test_translations_form_an_ideal():
    rng = random.Random(11)
    for _ in range(50):
        u = random_triple(rng, 3)
        x = triple_n([1, 2, 3])
        b = bracket(u, x)
        assert b.a == 0 and all(c == 0 for row in b.A for c in row)


def test_scalar_commutes_with_rotations():
    for a in so_basis(4):
        assert bracket(triple_a(4), triple_k(a)).is_zero()


def test_closure_rotation_and_translation():
    g = lie_closure([triple_k(J2), triple_n([1, 0])])
    assert g.dim == 3
    assert g.contains(triple_n([0, 1]))


def test_closure_single_element():
    u = LieTriple(1, J2, [1, 1])
    g = lie_closure([u])
    assert g.dim == 1


def test_closure_idempotent():
    rng = random.Random(13)
    for _ in range(10):
        gens = [random_triple(rng, 3) for _ in range(2)]
        g1 = lie_closure(gens)
        g2 = lie_closure(list(g1.basis))
        assert g1.basis == g2.basis
        assert verify_closed(g1)


def test_closure_never_exceeds_max_dim():
    g = full_algebra(4)
    assert g.dim == max_dim(4) == 1 + 6 + 4


def test_subalgebra_from_matrices_round_trip():
    g = full_algebra(2)
    mats = [embed_matrix(t) for t in g.basis]
    assert subalgebra_from_matrices(mats).basis == g.basis


def test_project_parts_full_algebra():
    g = full_algebra(2)
    parts = project_parts(g)
    assert parts.pr_a
    assert len(parts.pr_k) == 1
    assert Span(2, parts.pure_n).dim == 2


def test_project_parts_single_mixed_generator():
    g = lie_closure([LieTriple(1, [[0, 0], [0, 0]], [1, 0])])
    parts = project_parts(g)
    assert parts.pr_a
    assert Span(2, parts.pure_n).dim == 0


def test_center_and_commutant_so2():
    bp, zb = center_and_commutant(so_basis(2))
    assert len(bp) == 0 and len(zb) == 1


def test_center_and_commutant_so3():
    bp, zb = center_and_commutant(so_basis(3))
    # independent check: the span of pairwise brackets already fills so(3)
    brackets = [commutator(a, b) for a in so_basis(3) for b in so_basis(3)]
    sp = Span(9, [tuple(x for row in m for x in row) for m in brackets])
    assert sp.dim == 3
    assert len(bp) == 3 and len(zb) == 0


def test_center_and_commutant_so3_plus_so2():
    n = 5
    mats = []
    for m in so_basis(3):
        big = [[Fraction(0)] * n for _ in range(n)]
        for i in range(3):
            for j in range(3):
                big[i][j] = m[i][j]
        mats.append(mat(big))
    big = [[Fraction(0)] * n for _ in range(n)]
    big[3][4], big[4][3] = Fraction(-1), Fraction(1)
    mats.append(mat(big))
    bp, zb = center_and_commutant(mats)
    assert len(bp) == 3 and len(zb) == 1
    assert all(x == 0 for row in zb[0][:3] for x in row[:3])


def test_center_and_commutant_rejects_non_closed():
    # two planes sharing an axis do not close under the bracket
    gens = [so_basis(3)[0], so_basis(3)[1]]
    with pytest.raises(NotClosedError):
        center_and_commutant(gens)


def test_exp_of_translation_is_the_unipotent_matrix():
    X = [0.5, -1.25]
    e = exp_triple(triple_n([Fraction(1, 2), Fraction(-5, 4)]))
    expected = np.asarray(
        [[float(x) for x in row] for row in translation_matrix([Fraction(1, 2), Fraction(-5, 4)])]
    )
    assert np.abs(e - expected).max() <= 1e-12


def test_exp_of_scalar_is_diagonal():
    e = exp_triple(triple_a(2, 1))
    assert np.abs(e - np.diag([np.e, 1.0, 1.0, 1.0 / np.e])).max() <= 1e-12


def test_exp_of_zero_is_identity():
    e = exp_triple(LieTriple(0, [[0, 0], [0, 0]], [0, 0]))
    assert np.abs(e - np.eye(4)).max() == 0.0


def test_exp_is_eta_orthogonal_and_fixes_the_line():
    sp = MinkowskiSpace(3)
    rng = random.Random(15)
    G = np.asarray([[float(x) for x in row] for row in sp.gram])
    for _ in range(60):
        t = random_triple(rng, 3)
        e = exp_triple(t)
        assert np.abs(e.T @ G @ e - G).max() <= 1e-9
        assert fixes_line_p(e)


def test_group_matrix_forms_are_eta_orthogonal():
    sp = MinkowskiSpace(2)
    f = [[Fraction(3, 5), Fraction(-4, 5)], [Fraction(4, 5), Fraction(3, 5)]]
    for g in (
        dilation_matrix(2, Fraction(7, 3)),
        rotation_matrix(f),
        translation_matrix([Fraction(1), Fraction(-1, 2)]),
    ):
        assert is_eta_orthogonal(sp, g)
        assert fixes_line_p(g)
