"""Seeded random generators for tests, the selftest and the CLI.

Random rationals are k/8 with k in [-16, 16] throughout, so every sampled
object stays exactly representable and all derived computations stay in
exact arithmetic.  Exact random rotations come from the Cayley transform of
a random skew matrix.
"""

from fractions import Fraction
import random

from .classify import (
    catalog_B,
    construct_type1,
    construct_type2,
    construct_type3,
    construct_type4,
)
from .liealg import (
    LieTriple,
    center_and_commutant,
    lie_closure,
    triple_k,
    triple_n,
    unit_vector,
)
from .linalg import (
    ZERO,
    Span,
    identity,
    mat,
    mat_add,
    mat_inverse,
    mat_mul,
    mat_sub,
    mat_vec,
    transpose,
    vec_add,
    vec_scale,
    zeros_vec,
)


def random_fraction(rng, span=16, denom=8):
    return Fraction(rng.randint(-span, span), denom)


def random_vector(rng, n):
    return tuple(random_fraction(rng) for _ in range(n))


def random_skew(rng, n):
    m = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = random_fraction(rng)
            m[i][j] = v
            m[j][i] = -v
    return mat(m)


def random_triple(rng, n):
    return LieTriple(random_fraction(rng), random_skew(rng, n), random_vector(rng, n))


def random_rotation(rng, n):
    """Exact rational special orthogonal matrix via the Cayley transform."""
    s = random_skew(rng, n)
    i = identity(n)
    return mat_mul(mat_inverse(mat_sub(i, s)), mat_add(i, s))


def conjugate_skew(r, a):
    """r a r^T for an exact rotation r."""
    return mat_mul(mat_mul(r, a), transpose(r))


# -- random admissible classification data -------------------------------------


def random_phi(rng, center_dim):
    """Nonzero functional values on a center basis."""
    while True:
        vals = [random_fraction(rng) for _ in range(center_dim)]
        if any(v != 0 for v in vals):
            return vals


def random_surjective_psi(rng, center_dim, u_basis):
    """Center -> U values spanning U; needs center_dim >= dim U."""
    u_dim = len(u_basis)
    assert center_dim >= u_dim, "psi cannot be surjective"
    while True:
        vals = []
        for _ in range(center_dim):
            x = zeros_vec(len(u_basis[0]))
            for b in u_basis:
                x = vec_add(x, vec_scale(random_fraction(rng), b))
            vals.append(x)
        if Span(len(u_basis[0]), vals).dim == u_dim:
            return vals


_TYPE4_SHAPES = {
    # n -> (dim W, B name within so(W)); admissible means the center of B
    # is at least as big as U, so a surjective psi exists
    3: [(2, "so2")],
    4: [(3, "so2")],
    5: [(4, "so2"), (4, "so2so2")],
    6: [(5, "so2"), (5, "so2so2"), (4, "so2so2")],
}


def make_instance(type_tag, b_name, n, seed=0, rotate=False):
    """A random admissible algebra of the requested type.

    Returns (subalgebra, meta) where meta records the data used.  For type 4
    the B name refers to the catalog over W, whose dimension is chosen to
    leave enough center to map onto U.
    """
    rng = random.Random(seed)
    meta = {"type": type_tag, "B": b_name, "n": n, "seed": seed}
    if type_tag in (1, 2):
        b = catalog_B(n).get(b_name)
        if b is None:
            raise ValueError("B catalog entry %r is not available at n=%d" % (b_name, n))
        g = construct_type1(b, n) if type_tag == 1 else construct_type2(b, n)
        return g, meta
    if type_tag == 3:
        b = catalog_B(n).get(b_name)
        if b is None:
            raise ValueError("B catalog entry %r is not available at n=%d" % (b_name, n))
        _, z_b = center_and_commutant(b)
        if not z_b:
            raise ValueError("type 3 needs a subalgebra with nonzero center")
        phi = random_phi(rng, len(z_b))
        meta["phi"] = [str(v) for v in phi]
        return construct_type3(b, phi, n), meta
    if type_tag == 4:
        shapes = [s for s in _TYPE4_SHAPES.get(n, []) if s[1] == b_name]
        if not shapes:
            raise ValueError(
                "no admissible type-4 shape for B=%r at n=%d" % (b_name, n)
            )
        w_dim, _ = shapes[rng.randrange(len(shapes))]
        w_basis = [unit_vector(n, i) for i in range(w_dim)]
        u_basis = [unit_vector(n, i) for i in range(w_dim, n)]
        b_mats = [_pad_matrix(m, n) for m in catalog_B(w_dim)[b_name]]
        if rotate:
            r = random_rotation(rng, n)
            w_basis = [mat_vec(r, w) for w in w_basis]
            u_basis = [mat_vec(r, u) for u in u_basis]
            b_mats = [conjugate_skew(r, m) for m in b_mats]
        _, z_b = center_and_commutant(b_mats)
        psi = random_surjective_psi(rng, len(z_b), u_basis)
        meta["W_dim"] = w_dim
        meta["rotated"] = rotate
        g = construct_type4(b_mats, w_basis, psi, n)
        return g, meta
    raise ValueError("type tag must be 1..4")


def _pad_matrix(m, n):
    k = len(m)
    big = [[ZERO] * n for _ in range(n)]
    for i in range(k):
        for j in range(k):
            big[i][j] = m[i][j]
    return mat(big)


# -- corpus for the weak-irreducibility equivalence ----------------------------


def reducible_examples(n, seed=0):
    """Deliberately reducible algebras with findable certificates."""
    rng = random.Random(seed)
    out = []

    def e(i):
        return unit_vector(n, i)

    out.append(("single-translation", lie_closure([triple_n(e(0))])))
    out.append(
        ("single-boosted-translation",
         lie_closure([LieTriple(Fraction(1), [[ZERO] * n for _ in range(n)], e(0))]))
    )
    out.append(("pure-rotation", lie_closure([triple_k(random_skew(rng, n))])))
    out.append(("pure-boost", lie_closure([LieTriple(Fraction(1), [[ZERO] * n for _ in range(n)], zeros_vec(n))])))
    if n >= 2:
        j = _pad_matrix([[ZERO, Fraction(-1)], [Fraction(1), ZERO]], n)
        out.append(
            ("screw-dilation-origin",
             lie_closure([LieTriple(Fraction(1), j, zeros_vec(n))]))
        )
    if n >= 3:
        j = _pad_matrix([[ZERO, Fraction(-1)], [Fraction(1), ZERO]], n)
        # a proper rotation block plus its own translations leaves the
        # complementary coordinates untouched
        gens = [triple_k(j), triple_n(e(0)), triple_n(e(1))]
        out.append(("rotation-block-with-translations", lie_closure(gens)))
        # rotation about a shifted axis plus translation along the axis
        shift = vec_scale(Fraction(-1), mat_vec(j, e(0)))
        out.append(
            ("shifted-axis-screw",
             lie_closure([LieTriple(ZERO, j, shift), triple_n(e(2))]))
        )
    # type 4 with a non-surjective psi is reducible by construction
    if n in _TYPE4_SHAPES:
        w_dim, b_name = _TYPE4_SHAPES[n][0]
        w_basis = [unit_vector(n, i) for i in range(w_dim)]
        b_mats = [_pad_matrix(m, n) for m in catalog_B(w_dim)[b_name]]
        _, z_b = center_and_commutant(b_mats)
        psi = [zeros_vec(n) for _ in z_b]
        g = construct_type4(b_mats, w_basis, psi, n, require_surjective=False)
        out.append(("type4-zero-psi", g))
    return out


def weakly_irreducible_examples(n, seed=0, per_type=2):
    """Constructed algebras of the four types, all weakly irreducible."""
    out = []
    cat = catalog_B(n)
    names = sorted(cat)
    for k, name in enumerate(names):
        for t in (1, 2):
            g, _ = make_instance(t, name, n, seed=seed + 31 * k + t)
            out.append(("type%d-%s" % (t, name), g))
    for name in names:
        _, z_b = center_and_commutant(cat[name])
        if z_b:
            for i in range(per_type):
                g, _ = make_instance(3, name, n, seed=seed + 101 + i)
                out.append(("type3-%s-%d" % (name, i), g))
    for w_dim, b_name in _TYPE4_SHAPES.get(n, []):
        for i in range(per_type):
            g, _ = make_instance(4, b_name, n, seed=seed + 201 + i, rotate=(i % 2 == 1))
            out.append(("type4-%s-w%d-%d" % (b_name, w_dim, i), g))
    return out


def equivalence_corpus(n_values=(2, 3, 4, 5), seed=0, min_count=200):
    """Labelled instances (name, subalgebra, expected_weakly_irreducible).

    Mixes the constructed weakly-irreducible families, type 4 with broken
    psi, and deliberately reducible algebras; repeats with fresh random data
    until min_count instances exist.
    """
    out = []
    round_id = 0
    while len(out) < min_count:
        for n in n_values:
            s = seed + 1000 * round_id + n
            for name, g in weakly_irreducible_examples(n, seed=s):
                out.append(("n%d-%s-r%d" % (n, name, round_id), g, True))
            for name, g in reducible_examples(n, seed=s):
                out.append(("n%d-%s-r%d" % (n, name, round_id), g, False))
        round_id += 1
    return out
