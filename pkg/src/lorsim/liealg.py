"""The Lie algebra of eta-skew maps preserving the isotropic line through p.

In the (p, e, q) frame its elements are the matrices

    [ a  -X^t   0 ]
    [ 0    A    X ]        a scalar, A skew on E, X in E,
    [ 0    0   -a ]

identified with triples (a, A, X).  The scalar part generates boosts along
the p-q plane, the skew part rotates E, and the X part is the abelian ideal
of null translations.  Everything here is exact rational; the only float
path is the matrix exponential.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.linalg

from .errors import (
    DimensionMismatchError,
    EmptyAlgebraError,
    NotClosedError,
    NotInNormalPositionError,
    NotSkewError,
)
from .linalg import (
    ZERO,
    Span,
    commutator,
    dot,
    frac,
    mat,
    mat_mul,
    mat_sub,
    mat_vec,
    nullspace,
    vec,
    vec_add,
    vec_scale,
    zeros_mat,
    zeros_vec,
)


@dataclass(frozen=True)
class LieTriple:
    """Element (a, A, X): scalar, skew rotation part, null-translation part."""

    a: Fraction
    A: tuple
    X: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", frac(self.a))
        object.__setattr__(self, "A", mat(self.A))
        object.__setattr__(self, "X", vec(self.X))
        n = len(self.X)
        if len(self.A) != n or (n and len(self.A[0]) != n):
            raise DimensionMismatchError("A must be n x n with n = len(X)")
        for i in range(n):
            for j in range(i, n):
                if self.A[i][j] != -self.A[j][i]:
                    raise NotSkewError("rotation part must be skew-symmetric")

    @property
    def n(self):
        return len(self.X)

    def is_zero(self):
        return self.a == 0 and is_zero(self.A) and all(x == 0 for x in self.X)

    def __add__(self, other):
        _same_n(self, other)
        return LieTriple(
            self.a + other.a,
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.A, other.A)),
            vec_add(self.X, other.X),
        )

    def scale(self, c):
        c = frac(c)
        return LieTriple(
            c * self.a,
            tuple(tuple(c * x for x in r) for r in self.A),
            vec_scale(c, self.X),
        )


def is_zero(m):
    return all(x == 0 for row in m for x in row)


def _same_n(u, v):
    if u.n != v.n:
        raise DimensionMismatchError("triples live over different n")


def zero_triple(n):
    return LieTriple(ZERO, zeros_mat(n, n), zeros_vec(n))


def triple_a(n, a=1):
    return LieTriple(a, zeros_mat(n, n), zeros_vec(n))


def triple_k(A):
    A = mat(A)
    n = len(A)
    return LieTriple(ZERO, A, zeros_vec(n))


def triple_n(X):
    X = vec(X)
    n = len(X)
    return LieTriple(ZERO, zeros_mat(n, n), X)


def so_basis(n):
    """Standard basis of the full skew algebra on E: one generator per plane (i, j)."""
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            m = [[ZERO] * n for _ in range(n)]
            m[j][i] = Fraction(1)
            m[i][j] = Fraction(-1)
            out.append(mat(m))
    return out


def embed_matrix(t):
    """(n+2) x (n+2) matrix of the triple in the (p, e, q) frame."""
    n = t.n
    rows = [(t.a,) + tuple(-x for x in t.X) + (ZERO,)]
    for i in range(n):
        rows.append((ZERO,) + t.A[i] + (t.X[i],))
    rows.append(zeros_vec(n + 1) + (-t.a,))
    return tuple(rows)


def triple_from_matrix(m):
    """Inverse of embed_matrix; raises if m is not in the stabilizer shape."""
    d = len(m)
    n = d - 2
    if n < 0:
        raise DimensionMismatchError("matrix too small")
    a = m[0][0]
    X = tuple(m[i + 1][d - 1] for i in range(n))
    A = tuple(tuple(m[i + 1][j + 1] for j in range(n)) for i in range(n))
    cand = LieTriple(a, A, X)
    if embed_matrix(cand) != tuple(tuple(row) for row in m):
        raise NotInNormalPositionError(
            "matrix does not preserve the line through p in standard form"
        )
    return cand


def bracket(u, v):
    """Lie bracket, closed form: (0, [A1, A2], (a1 I + A1) X2 - (a2 I + A2) X1)."""
    _same_n(u, v)
    A = commutator(u.A, v.A)
    X1 = vec_add(vec_scale(u.a, v.X), mat_vec(u.A, v.X))
    X2 = vec_add(vec_scale(v.a, u.X), mat_vec(v.A, u.X))
    return LieTriple(ZERO, A, tuple(x - y for x, y in zip(X1, X2)))


# -- flat coordinates for span computations ----------------------------------


def triple_to_flat(t):
    return (t.a,) + tuple(x for row in t.A for x in row) + t.X


def triple_from_flat(n, flat):
    a = flat[0]
    A = tuple(tuple(flat[1 + i * n + j] for j in range(n)) for i in range(n))
    X = tuple(flat[1 + n * n :])
    return LieTriple(a, A, X)


def flat_dim(n):
    return 1 + n * n + n


@dataclass(frozen=True)
class Subalgebra:
    """Bracket-closed span of triples, held as a canonical echelonized basis."""

    n: int
    basis: tuple
    verified_closed: bool = True

    @property
    def dim(self):
        return len(self.basis)

    def span(self):
        return Span(flat_dim(self.n), [triple_to_flat(t) for t in self.basis])

    def contains(self, t):
        return self.span().contains(triple_to_flat(t))


def max_dim(n):
    """dim of the full stabilizer algebra: 1 + n(n-1)/2 + n."""
    return 1 + n * (n - 1) // 2 + n


def lie_closure(gens):
    """Smallest bracket-closed span containing the generators.

    Alternates span reduction and pairwise brackets; the dimension is
    strictly monotone so at most max_dim(n) rounds happen.
    """
    gens = list(gens)
    if not gens:
        raise EmptyAlgebraError("need at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise DimensionMismatchError("generators live over different n")
    span = Span(flat_dim(n))
    basis = []
    for g in gens:
        if span.add(triple_to_flat(g)):
            basis.append(g)
    for _ in range(max_dim(n) + 1):
        new = []
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                b = bracket(basis[i], basis[j])
                if span.add(triple_to_flat(b)):
                    new.append(b)
        if not new:
            break
        basis.extend(new)
    canonical = tuple(triple_from_flat(n, row) for row in span.basis)
    return Subalgebra(n=n, basis=canonical, verified_closed=True)


def verify_closed(g):
    """Exact check that the basis span is closed under the bracket."""
    sp = g.span()
    for i in range(len(g.basis)):
        for j in range(i + 1, len(g.basis)):
            if not sp.contains(triple_to_flat(bracket(g.basis[i], g.basis[j]))):
                return False
    return True


def subalgebra_from_matrices(mats):
    """Build a Subalgebra from full ambient matrices (oracle input path)."""
    if not mats:
        raise EmptyAlgebraError("need at least one matrix")
    return lie_closure([triple_from_matrix(m) for m in mats])


@dataclass(frozen=True)
class ProjectedParts:
    """Coordinate projections of a subalgebra onto its three constituents."""

    pr_a: bool          # True iff the scalar projection is all of R
    pr_k: tuple         # basis of the projection onto the skew part (matrices)
    n_part: tuple       # basis of the projection onto E (vectors)
    pure_n: tuple       # basis of {X : (0, 0, X) in g}


def project_parts(g):
    """Projections onto scalar/rotation/translation parts and the exact pure_n kernel."""
    n = g.n
    pr_a = any(t.a != 0 for t in g.basis)
    k_span = Span(n * n, [tuple(x for row in t.A for x in row) for t in g.basis])
    n_span = Span(n, [t.X for t in g.basis])
    # pure_n: combinations with vanishing (a, A) part
    rows = []
    for t in g.basis:
        rows.append((t.a,) + tuple(x for row in t.A for x in row))
    pure = Span(n)
    if rows:
        for c in nullspace(mat(tuple(zip(*rows)))):
            x = zeros_vec(n)
            for ci, t in zip(c, g.basis):
                x = vec_add(x, vec_scale(ci, t.X))
            pure.add(x)
    return ProjectedParts(
        pr_a=pr_a,
        pr_k=tuple(
            tuple(tuple(row[i * n : (i + 1) * n]) for i in range(n))
            for row in k_span.basis
        ),
        n_part=n_span.basis,
        pure_n=pure.basis,
    )


def center_and_commutant(b_mats):
    """Split a bracket-closed skew subalgebra as commutant + center.

    Returns (commutant_basis, center_basis).  The direct-sum property holds
    for subalgebras of the compact skew algebra and is asserted.
    """
    b_mats = [mat(m) for m in b_mats]
    if not b_mats:
        return (), ()
    n = len(b_mats[0])

    def flat(m):
        return tuple(x for row in m for x in row)

    b_span = Span(n * n, [flat(m) for m in b_mats])
    basis = list(b_mats)
    for i in range(len(b_mats)):
        for j in range(i + 1, len(b_mats)):
            if not b_span.contains(flat(commutator(b_mats[i], b_mats[j]))):
                raise NotClosedError("input is not closed under the bracket")
    # commutant: iterate the span of brackets until bracket-stable
    comm = Span(n * n)
    frontier = list(basis)
    for _ in range(n * n):
        new = []
        for x in frontier:
            for y in basis:
                c = commutator(x, y)
                if comm.add(flat(c)):
                    new.append(c)
        if not new:
            break
        frontier = new
    commutant = tuple(
        tuple(tuple(row[i * n : (i + 1) * n]) for i in range(n)) for row in comm.basis
    )
    # center: combinations commuting with every basis element
    k = len(basis)
    rows = []
    for bi in basis:
        for r in range(n):
            for c in range(n):
                rows.append(tuple(commutator(bj, bi)[r][c] for bj in basis))
    center = []
    cen_span = Span(n * n)
    for coeffs in nullspace(mat(rows)) if rows else []:
        z = zeros_mat(n, n)
        for ci, bj in zip(coeffs, basis):
            z = tuple(
                tuple(x + ci * y for x, y in zip(rz, ry)) for rz, ry in zip(z, bj)
            )
        if cen_span.add(flat(z)):
            center.append(z)
    # compact algebras split as commutant + center; check it exactly
    total = Span(n * n, [flat(m) for m in commutant])
    total.extend([flat(m) for m in center])
    assert total.dim == comm.dim + cen_span.dim, "commutant and center overlap"
    assert total.dim == b_span.dim, "commutant + center do not fill the algebra"
    return commutant, tuple(center)


# -- group-level matrices -----------------------------------------------------


def dilation_matrix(n, a):
    """diag(a, 1..1, 1/a): boost scaling p by a, exact for rational a != 0."""
    a = frac(a)
    if a == 0:
        raise ValueError("dilation parameter must be nonzero")
    rows = [[ZERO] * (n + 2) for _ in range(n + 2)]
    rows[0][0] = a
    for i in range(1, n + 1):
        rows[i][i] = Fraction(1)
    rows[n + 1][n + 1] = 1 / a
    return mat(rows)


def rotation_matrix(f):
    """Block diag(1, f, 1) for f acting on E."""
    f = mat(f)
    n = len(f)
    rows = [[ZERO] * (n + 2) for _ in range(n + 2)]
    rows[0][0] = Fraction(1)
    for i in range(n):
        for j in range(n):
            rows[i + 1][j + 1] = f[i][j]
    rows[n + 1][n + 1] = Fraction(1)
    return mat(rows)


def translation_matrix(X):
    """Unipotent element moving the boundary chart by X.

    [ 1  -X^t  -1/2 |X|^2 ]
    [ 0   id       X      ]
    [ 0   0        1      ]
    """
    X = vec(X)
    n = len(X)
    rows = [[ZERO] * (n + 2) for _ in range(n + 2)]
    rows[0][0] = Fraction(1)
    for j in range(n):
        rows[0][j + 1] = -X[j]
    rows[0][n + 1] = -dot(X, X) / 2
    for i in range(n):
        rows[i + 1][i + 1] = Fraction(1)
        rows[i + 1][n + 1] = X[i]
    rows[n + 1][n + 1] = Fraction(1)
    return mat(rows)


def is_eta_orthogonal(space, g, tol=None):
    """g^T G g == G, exactly for rational matrices, within tol for floats."""
    if isinstance(g, np.ndarray):
        G = np.asarray([[float(x) for x in row] for row in space.gram])
        resid = g.T @ G @ g - G
        return float(np.abs(resid).max()) <= (tol if tol is not None else 1e-9)
    G = space.gram
    gm = mat(g)
    gt = tuple(zip(*gm))
    return is_zero(mat_sub(mat_mul(mat_mul(gt, G), gm), G))


def fixes_line_p(g, tol=None):
    """First column proportional to p (all entries below the top vanish)."""
    if isinstance(g, np.ndarray):
        t = tol if tol is not None else 1e-9
        return bool(np.abs(g[1:, 0]).max() <= t)
    return all(g[i][0] == 0 for i in range(1, len(g)))


def exp_triple(t):
    """Float matrix exponential of the embedded triple (scaling and squaring)."""
    m = np.array([[float(x) for x in row] for row in embed_matrix(t)])
    return scipy.linalg.expm(m)


def unit_vector(n, i):
    """Standard basis vector of E, 0-indexed."""
    x = [ZERO] * n
    x[i] = Fraction(1)
    return vec(x)


def full_algebra(n):
    """The whole stabilizer algebra as a Subalgebra."""
    gens = [triple_a(n)]
    gens += [triple_k(A) for A in so_basis(n)]
    gens += [triple_n(unit_vector(n, i)) for i in range(n)]
    return lie_closure(gens)
