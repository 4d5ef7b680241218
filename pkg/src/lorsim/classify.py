"""Classification of weakly-irreducible stabilizer subalgebras into four types.

With B the projection of the algebra onto the skew part, B' its commutant
and z(B) its center, the four normal forms are

    type 1:  (scalars + B) |x all null translations
    type 2:  B |x all null translations
    type 3:  (B' + {(phi(z), z, 0)}) |x all null translations,
             phi a nonzero functional on z(B)
    type 4:  (B' + {(0, z, psi(z))}) |x translations along W, where
             E = U + W orthogonally, B vanishes on U, and psi maps z(B)
             onto U.

`classify` recovers the type together with its defining data, and the four
`construct_type*` functions build the normal forms; the two are exact
inverses of each other, which the test suite exercises over a catalog of
compact subalgebras B.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (
    EmptyAlgebraError,
    NotClosedError,
    NotWeaklyIrreducibleError,
)
from .liealg import (
    LieTriple,
    Subalgebra,
    center_and_commutant,
    lie_closure,
    project_parts,
    so_basis,
    triple_a,
    triple_k,
    triple_n,
    unit_vector,
    verify_closed,
)
from .linalg import (
    ZERO,
    Span,
    dot,
    frac,
    mat,
    mat_vec,
    nullspace,
    solve_linear,
    vec,
    vec_add,
    vec_scale,
    zeros_mat,
    zeros_vec,
)
from .simgroup import ScrewGroup


@dataclass(frozen=True)
class Classification:
    """Type tag plus the recovered defining data."""

    type_tag: int
    n: int
    B: tuple                      # basis matrices of the skew projection
    B_prime: tuple                # commutant basis
    z_B: tuple                    # center basis
    phi: Optional[tuple] = None   # functional values on z_B (type 3)
    psi: Optional[tuple] = None   # U-vectors per z_B basis element (type 4)
    U: tuple = ()                 # basis of U inside E (type 4)
    W: tuple = ()                 # basis of W inside E (type 4)
    witnesses: dict = field(default_factory=dict)


def _flat(m):
    return tuple(x for row in m for x in row)


def _mats_from_span_rows(rows, n):
    return tuple(
        tuple(tuple(row[i * n + j] for j in range(n)) for i in range(n)) for row in rows
    )


def classify(g: Subalgebra) -> Classification:
    """Recover the type and data of a weakly-irreducible subalgebra.

    Inputs that fit no normal form raise NotWeaklyIrreducibleError; the
    classification theorem guarantees this cannot happen for genuinely
    weakly-irreducible input.
    """
    if g.dim == 0:
        raise EmptyAlgebraError("cannot classify the zero algebra")
    if not g.verified_closed and not verify_closed(g):
        raise NotClosedError("basis span is not bracket-closed")
    n = g.n
    parts = project_parts(g)
    w_span = Span(n, parts.pure_n)
    witnesses = {"bracket_closed": True, "pure_n_dim": w_span.dim}

    if w_span.dim == n:
        return _classify_full_translations(g, parts, witnesses)
    return _classify_type4(g, parts, w_span, witnesses)


def _classify_full_translations(g, parts, witnesses):
    n = g.n
    # h: the image of the (a, A)-projection; the null translations are all
    # inside g, so h is a faithful picture of g modulo translations
    h = Span(1 + n * n, [(t.a,) + _flat(t.A) for t in g.basis])
    b_mats = [mat(m) for m in parts.pr_k]
    has_dilation = h.contains((Fraction(1),) + (ZERO,) * (n * n))
    witnesses["contains_pure_dilation"] = has_dilation

    if has_dilation:
        b_prime, z_b = center_and_commutant(b_mats)
        witnesses["dim_check"] = g.dim == 1 + len(b_mats) + n
        if not witnesses["dim_check"]:
            raise NotWeaklyIrreducibleError("dimension bookkeeping failed for type 1")
        return Classification(
            type_tag=1, n=n, B=tuple(b_mats), B_prime=b_prime, z_B=z_b,
            witnesses=witnesses,
        )

    if not parts.pr_a:
        b_prime, z_b = center_and_commutant(b_mats)
        witnesses["dim_check"] = g.dim == len(b_mats) + n
        if not witnesses["dim_check"]:
            raise NotWeaklyIrreducibleError("dimension bookkeeping failed for type 2")
        return Classification(
            type_tag=2, n=n, B=tuple(b_mats), B_prime=b_prime, z_B=z_b,
            witnesses=witnesses,
        )

    # scalar projection is nonzero but the pure dilation is missing: type 3
    b_prime, z_b = center_and_commutant(b_mats)
    # the scalar attached to each skew matrix is unique because h meets the
    # scalar line only at 0 (otherwise the pure dilation would be present)
    a_col = [[t.a] for t in g.basis]
    flat_cols = [_flat(t.A) for t in g.basis]
    for ker in nullspace(mat(tuple(zip(*flat_cols)))):
        if sum((c * t.a for c, t in zip(ker, g.basis)), ZERO) != 0:
            raise NotWeaklyIrreducibleError("scalar line hides inside the algebra")
    phi = []
    for z in z_b:
        coeffs = solve_linear(mat(tuple(zip(*flat_cols))), vec(_flat(z)))
        if coeffs is None:
            raise NotWeaklyIrreducibleError("center element missing from the algebra")
        a_val = sum((c * t.a for c, t in zip(coeffs, g.basis)), ZERO)
        phi.append(a_val)
        if not g.contains(LieTriple(a_val, z, zeros_vec(n))):
            raise NotWeaklyIrreducibleError("type 3 witness (phi(z), z, 0) missing")
    if all(v == 0 for v in phi):
        raise NotWeaklyIrreducibleError("scalar projection nonzero but phi vanishes")
    witnesses["phi_nonzero"] = True
    witnesses["dim_check"] = g.dim == len(b_mats) + n
    if not witnesses["dim_check"]:
        raise NotWeaklyIrreducibleError("dimension bookkeeping failed for type 3")
    return Classification(
        type_tag=3, n=g.n, B=tuple(b_mats), B_prime=b_prime, z_B=z_b,
        phi=tuple(phi), witnesses=witnesses,
    )


def _classify_type4(g, parts, w_span, witnesses):
    n = g.n
    if parts.pr_a:
        raise NotWeaklyIrreducibleError(
            "scalar part present while translations are not all of E"
        )
    if w_span.dim == 0:
        # every type carries its null translations; none at all means the
        # algebra fixes a boundary point and cannot be weakly irreducible
        raise NotWeaklyIrreducibleError("no null translations present")
    w_basis = w_span.basis
    u_basis = tuple(nullspace(mat(w_basis)))
    u_span = Span(n, u_basis)
    b_mats = [mat(m) for m in parts.pr_k]
    for b in b_mats:
        for u in u_basis:
            if any(x != 0 for x in mat_vec(b, u)):
                raise NotWeaklyIrreducibleError("skew part does not vanish on U")
        for w in w_basis:
            if not w_span.contains(mat_vec(b, w)):
                raise NotWeaklyIrreducibleError("skew part does not preserve W")
    witnesses["B_vanishes_on_U"] = True
    b_prime, z_b = center_and_commutant(b_mats)

    flat_cols = [_flat(t.A) for t in g.basis]
    psi = []
    psi_span = Span(n)
    for z in z_b:
        coeffs = solve_linear(mat(tuple(zip(*flat_cols))), vec(_flat(z)))
        if coeffs is None:
            raise NotWeaklyIrreducibleError("center element missing from the algebra")
        x = zeros_vec(n)
        for c, t in zip(coeffs, g.basis):
            x = vec_add(x, vec_scale(c, t.X))
        u_part = _project_onto(u_basis, x)
        psi.append(u_part)
        if not g.contains(LieTriple(ZERO, z, u_part)):
            raise NotWeaklyIrreducibleError("type 4 witness (0, z, psi(z)) missing")
    for bp in b_prime:
        if not g.contains(LieTriple(ZERO, bp, zeros_vec(n))):
            raise NotWeaklyIrreducibleError("commutant element carries a U-translation")
    for u in psi:
        psi_span.add(u)
    if psi_span.dim != u_span.dim:
        raise NotWeaklyIrreducibleError("psi is not surjective onto U")
    witnesses["psi_surjective"] = True
    witnesses["dim_check"] = g.dim == len(b_mats) + w_span.dim
    if not witnesses["dim_check"]:
        raise NotWeaklyIrreducibleError("dimension bookkeeping failed for type 4")
    return Classification(
        type_tag=4, n=n, B=tuple(b_mats), B_prime=b_prime, z_B=z_b,
        psi=tuple(psi), U=u_span.basis, W=w_basis, witnesses=witnesses,
    )


def _project_onto(orthonormal_like_basis, x):
    """Orthogonal projection onto the span, assuming pairwise-orthogonal basis."""
    out = zeros_vec(len(x))
    for b in orthonormal_like_basis:
        nb = dot(b, b)
        if nb == 0:
            continue
        out = vec_add(out, vec_scale(dot(x, b) / nb, b))
    return out


# -- constructors --------------------------------------------------------------


def _check_b_closed(b_mats, n):
    b_mats = [mat(m) for m in b_mats]
    for m in b_mats:
        if len(m) != n or (m and len(m[0]) != n):
            raise ValueError("B matrices must be n x n")
    # raises NotClosedError if the span is not a subalgebra
    center_and_commutant(b_mats) if b_mats else ((), ())
    return b_mats


def construct_type1(b_mats, n):
    """(scalars + B) |x all null translations."""
    b_mats = _check_b_closed(b_mats, n)
    gens = [triple_a(n)]
    gens += [triple_k(b) for b in b_mats]
    gens += [triple_n(unit_vector(n, i)) for i in range(n)]
    return lie_closure(gens)


def construct_type2(b_mats, n):
    """B |x all null translations."""
    b_mats = _check_b_closed(b_mats, n)
    gens = [triple_k(b) for b in b_mats]
    gens += [triple_n(unit_vector(n, i)) for i in range(n)]
    if not gens:
        raise EmptyAlgebraError("type 2 with empty B needs n >= 1 translations")
    return lie_closure(gens)


def construct_type3(b_mats, phi_values, n):
    """(B' + {(phi(z), z, 0)}) |x all null translations, phi != 0.

    phi_values are aligned with the center basis returned by
    center_and_commutant(b_mats).
    """
    b_mats = _check_b_closed(b_mats, n)
    b_prime, z_b = center_and_commutant(b_mats)
    phi_values = [frac(v) for v in phi_values]
    if len(phi_values) != len(z_b):
        raise ValueError("need one phi value per center basis element")
    if all(v == 0 for v in phi_values):
        raise ValueError("phi must be a nonzero functional (else this is type 2)")
    gens = [triple_k(b) for b in b_prime]
    gens += [LieTriple(v, z, zeros_vec(n)) for v, z in zip(phi_values, z_b)]
    gens += [triple_n(unit_vector(n, i)) for i in range(n)]
    return lie_closure(gens)


def construct_type4(b_mats, w_basis, psi_values, n, require_surjective=True):
    """(B' + {(0, z, psi(z))}) |x translations along W.

    W is a proper nonzero subspace of E, B must vanish on its orthogonal
    complement U, and psi_values (one U-vector per center basis element)
    should span U; a non-surjective psi is accepted with
    require_surjective=False and yields a reducible algebra.
    """
    w_span = Span(n, [vec(w) for w in w_basis])
    if not 0 < w_span.dim < n:
        raise ValueError("need a nontrivial orthogonal split: 0 < dim W < n")
    u_basis = nullspace(mat(w_span.basis))
    u_span = Span(n, u_basis)
    b_mats = _check_b_closed(b_mats, n)
    for b in b_mats:
        for u in u_basis:
            if any(x != 0 for x in mat_vec(b, u)):
                raise ValueError("B must vanish on U = orthogonal complement of W")
    b_prime, z_b = center_and_commutant(b_mats)
    psi_values = [vec(v) for v in psi_values]
    if len(psi_values) != len(z_b):
        raise ValueError("need one psi value per center basis element")
    for v in psi_values:
        if not u_span.contains(v):
            raise ValueError("psi values must lie in U")
    image = Span(n, psi_values)
    if require_surjective and image.dim != u_span.dim:
        raise ValueError("psi must be surjective onto U for weak irreducibility")
    gens = [triple_k(b) for b in b_prime]
    gens += [LieTriple(ZERO, z, v) for v, z in zip(psi_values, z_b)]
    gens += [triple_n(w) for w in w_span.basis]
    return lie_closure(gens)


# -- group-level description ----------------------------------------------------


@dataclass(frozen=True)
class GroupModel:
    """Connected transitive similarity group matching a classified algebra."""

    type_tag: int
    description: str
    h_basis: tuple            # skew generators of the pointwise stabilizer factor
    screw: Optional[ScrewGroup]
    translation_basis: tuple  # basis of the normal translation factor


def _trace_dot(a, b):
    return sum((x * y for rx, ry in zip(a, b) for x, y in zip(rx, ry)), ZERO)


def _functional_kernel_and_complement(z_b, values_as_rows):
    """Split the center into ker(map) and its trace-form orthogonal complement."""
    m = len(z_b)
    if m == 0:
        return [], []
    kernel_coeff = nullspace(mat(tuple(zip(*values_as_rows))))
    kernel = []
    for c in kernel_coeff:
        z = None
        for ci, zi in zip(c, z_b):
            term = tuple(tuple(ci * x for x in row) for row in zi)
            z = term if z is None else tuple(
                tuple(x + y for x, y in zip(r, s)) for r, s in zip(z, term)
            )
        kernel.append(z)
    # complement: coefficient vectors c with <sum c z, k> = 0 for all kernel k
    rows = []
    for k in kernel:
        rows.append(tuple(_trace_dot(zi, k) for zi in z_b))
    if rows:
        comp_coeffs = nullspace(mat(rows))
    else:
        comp_coeffs = [tuple(ZERO if j != i else Fraction(1) for j in range(m)) for i in range(m)]
    complement = []
    for c in comp_coeffs:
        z = zeros_mat(len(z_b[0]), len(z_b[0]))
        for ci, zi in zip(c, z_b):
            z = tuple(tuple(x + ci * y for x, y in zip(r, s)) for r, s in zip(z, zi))
        complement.append((c, z))
    return kernel, complement


def group_type_of(c: Classification) -> GroupModel:
    """Map the algebra classification to its transitive group normal form."""
    n = c.n
    e_basis = tuple(unit_vector(n, i) for i in range(n))
    if c.type_tag == 1:
        return GroupModel(1, "(A x H) |x E", tuple(c.B), None, e_basis)
    if c.type_tag == 2:
        return GroupModel(2, "H |x E", tuple(c.B), None, e_basis)
    if c.type_tag == 3:
        kernel, complement = _functional_kernel_and_complement(
            c.z_B, [(v,) for v in c.phi]
        )
        assert len(complement) == 1, "phi has a one-dimensional coimage"
        coeffs, z0 = complement[0]
        val = sum((ci * vi for ci, vi in zip(coeffs, c.phi)), ZERO)
        z_gen = tuple(tuple(x / val for x in row) for row in z0)
        screw = ScrewGroup.dilation(z_gen)
        h = tuple(c.B_prime) + tuple(kernel)
        return GroupModel(3, "(A^Phi x H) |x E", h, screw, e_basis)
    if c.type_tag == 4:
        kernel, complement = _functional_kernel_and_complement(c.z_B, list(c.psi))
        u_basis = tuple(c.U)
        zs = []
        for u in u_basis:
            # solve psi(sum c z) = u within the complement
            cols = []
            for coeffs, _z in complement:
                img = zeros_vec(n)
                for ci, vi in zip(coeffs, c.psi):
                    img = vec_add(img, vec_scale(ci, vi))
                cols.append(img)
            sol = solve_linear(mat(tuple(zip(*cols))), vec(u))
            assert sol is not None, "psi is surjective from the complement"
            z = zeros_mat(n, n)
            for s, (_coeffs, zmat) in zip(sol, complement):
                z = tuple(
                    tuple(x + s * y for x, y in zip(r, s2)) for r, s2 in zip(z, zmat)
                )
            zs.append(z)
        screw = ScrewGroup.translation_screw(u_basis, tuple(zs))
        h = tuple(c.B_prime) + tuple(kernel)
        return GroupModel(4, "(H x U^Psi) |x W", h, screw, tuple(c.W))
    raise ValueError("unknown type tag %r" % (c.type_tag,))


# -- catalog of compact subalgebras for tests and the CLI -----------------------


def _embedded_so(block, n, offset=0):
    out = []
    for m in so_basis(block):
        big = [[ZERO] * n for _ in range(n)]
        for i in range(block):
            for j in range(block):
                big[offset + i][offset + j] = m[i][j]
        out.append(mat(big))
    return out


def catalog_B(n):
    """Named compact subalgebras of the skew algebra on E, embedded in n x n."""
    cat = {"zero": []}
    if n >= 2:
        cat["so2"] = _embedded_so(2, n)
        cat["son"] = [mat(m) for m in so_basis(n)]
    if n >= 3:
        cat["so3"] = _embedded_so(3, n)
    if n >= 4:
        cat["so2so2"] = _embedded_so(2, n) + _embedded_so(2, n, offset=2)
    return cat


# -- comparison helpers (round-trip tests) ---------------------------------------


def same_span(mats_a, mats_b, n):
    sa = Span(n * n, [_flat(mat(m)) for m in mats_a])
    sb = Span(n * n, [_flat(mat(m)) for m in mats_b])
    return sa.basis == sb.basis


def same_vector_span(vs_a, vs_b, n):
    return Span(n, vs_a).basis == Span(n, vs_b).basis


def same_center_map(z_a, vals_a, z_b, vals_b, n, vector_valued=False):
    """Do two maps defined on center bases agree as linear maps on z(B)?

    vals entries are scalars (phi) or E-vectors (psi).
    """
    cols = [_flat(mat(z)) for z in z_a]
    for z, v in zip(z_b, vals_b):
        coeffs = solve_linear(mat(tuple(zip(*cols))), vec(_flat(mat(z))))
        if coeffs is None:
            return False
        if vector_valued:
            img = zeros_vec(n)
            for c, va in zip(coeffs, vals_a):
                img = vec_add(img, vec_scale(c, va))
            if tuple(img) != tuple(vec(v)):
                return False
        else:
            img = sum((c * frac(va) for c, va in zip(coeffs, vals_a)), ZERO)
            if img != frac(v):
                return False
    return True
