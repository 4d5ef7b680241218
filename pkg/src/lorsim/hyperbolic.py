"""The hyperboloid model and transitive isometry groups acting on it.

Points are unit-timelike vectors x p + alpha + y q with positive time
orientation.  The groups acting transitively through the fixed isotropic
line are built from three one-parameter families: boosts (diagonal
dilations of the p, q pair), rotations of E, and unipotent null
translations.  Boosts-with-translations act simply transitively, with or
without a rotation twist; rotations-with-translations do not act
transitively at all, which a conserved q-coefficient witnesses.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional
import random

import numpy as np
import scipy.linalg

from .errors import DimensionMismatchError, NotSkewError, TransportError
from .linalg import (
    ZERO,
    Span,
    commutator,
    dot,
    frac,
    mat,
    mat_mul,
    mat_vec,
    rank,
    vec,
    vec_scale,
    vec_sub,
    zeros_vec,
)
from .liealg import (
    LieTriple,
    dilation_matrix,
    embed_matrix,
    is_eta_orthogonal,
    so_basis,
    translation_matrix,
    triple_a,
    triple_k,
    triple_n,
    unit_vector,
)
from .minkowski import MinkowskiSpace

TRANSPORT_TOL = 1e-9


@dataclass(frozen=True)
class HPoint:
    """Point x p + alpha + y q of the hyperboloid: 2xy + |alpha|^2 = -1, x > y.

    The time-orientation condition x > y is the positivity of the
    orthonormal time coordinate; together with the unit-norm condition it
    forces x > 0 > y.
    """

    x: Fraction
    alpha: tuple
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", frac(self.x))
        object.__setattr__(self, "alpha", vec(self.alpha))
        object.__setattr__(self, "y", frac(self.y))
        norm2 = dot(self.alpha, self.alpha)
        if 2 * self.x * self.y + norm2 != -1:
            raise ValueError("point is not on the unit hyperboloid")
        if not self.x > self.y:
            raise ValueError("point is not positively time-oriented")
        assert self.x != 0 and self.y != 0

    @property
    def n(self):
        return len(self.alpha)

    def vector(self):
        return (self.x,) + self.alpha + (self.y,)

    @staticmethod
    def from_vector(v):
        return HPoint(v[0], v[1:-1], v[-1])


def on_hyperboloid(space, v):
    """Exact membership test: eta(v, v) = -1 and positive time orientation."""
    space._check(v)
    if space.eta(v, v) != -1:
        return False
    return v[0] > v[-1]


_VARIANTS = ("full", "AN", "AHN", "APhiN", "APhiHN", "KN")


@dataclass(frozen=True)
class TransitiveGroupSpec:
    """A connected subgroup given by its generator data.

    variant 'AN':      boosts and all null translations
    variant 'AHN':     boosts, a rotation subgroup H, all null translations
    variant 'APhiN':   screw boosts (twisted by exp(log a Z)) and translations
    variant 'APhiHN':  screw boosts and a rotation subgroup commuting with Z
    variant 'KN':      rotations and translations (not transitive; negative
                       control for the witnesses below)
    variant 'full':    the whole connected Lorentz group (transport falls
                       back to the boost-translation subgroup)
    """

    variant: str
    n: int
    h_basis: tuple = ()
    z: Optional[tuple] = None

    def __post_init__(self):
        if self.variant not in _VARIANTS:
            raise ValueError("unknown variant %r" % (self.variant,))
        object.__setattr__(self, "h_basis", tuple(mat(h) for h in self.h_basis))
        for h in self.h_basis:
            _require_skew(h)
        if self.z is not None:
            object.__setattr__(self, "z", mat(self.z))
            _require_skew(self.z)
        if self.variant in ("APhiN", "APhiHN") and self.z is None:
            raise ValueError("screw variants need a twist generator Z")
        if self.variant == "APhiHN":
            # H must commute with the twist exactly (the strong reading)
            for h in self.h_basis:
                if any(x != 0 for row in commutator(h, self.z) for x in row):
                    raise ValueError("H generators must commute with Z exactly")

    def algebra_basis(self):
        """Triples spanning the Lie algebra of the group."""
        n = self.n
        out = []
        if self.variant in ("AN", "AHN"):
            out.append(triple_a(n))
        if self.variant in ("APhiN", "APhiHN"):
            out.append(LieTriple(Fraction(1), self.z, zeros_vec(n)))
        if self.variant in ("AHN", "APhiHN", "KN"):
            out.extend(triple_k(h) for h in self.h_basis)
        if self.variant == "KN" and not self.h_basis:
            out.extend(triple_k(a) for a in so_basis(n))
        if self.variant == "full":
            raise ValueError("the full group is not handled at the algebra level here")
        out.extend(triple_n(unit_vector(n, i)) for i in range(n))
        return out


def _require_skew(m):
    k = len(m)
    for i in range(k):
        for j in range(k):
            if m[i][j] != -m[j][i]:
                raise NotSkewError("rotation generators must be exactly skew")


@dataclass(frozen=True)
class TransportResult:
    """Group element g with g v = w, plus its factored form."""

    matrix: object            # exact rational matrix or float ndarray
    exact: bool
    factors: dict             # {'N': X, 'A': a, 'screw': ... or None}
    residual: float


def transport(space, v, w, spec):
    """An element of the specified group taking v to w on the hyperboloid.

    Writing v = (x, alpha, y) and w = (x', beta, y'), a null translation by
    (beta - alpha)/y matches the E-part and a boost by y/y' finishes; both
    points being on the hyperboloid makes the p-coordinate match
    automatically.  Exact for the untwisted variants; for twisted variants
    the rotation correction either falls inside H (still exact) or forces
    the float path, verified to TRANSPORT_TOL.
    """
    n = space.n
    if isinstance(v, HPoint):
        v = v.vector()
    if isinstance(w, HPoint):
        w = w.vector()
    if not on_hyperboloid(space, v) or not on_hyperboloid(space, w):
        raise ValueError("transport endpoints must lie on the hyperboloid")
    if spec.n != n:
        raise DimensionMismatchError("spec dimension does not match the space")
    if spec.variant == "KN":
        raise TransportError("rotations and translations are not transitive")
    x, alpha, y = v[0], v[1:-1], v[-1]
    x1, beta, y1 = w[0], w[1:-1], w[-1]
    a = y / y1
    assert a > 0, "boost ratios between hyperboloid points are positive"

    twisted = spec.variant in ("APhiN", "APhiHN")
    exact_twist = False
    if twisted:
        h_span = Span(n * n, [tuple(x2 for row in h for x2 in row) for h in spec.h_basis])
        exact_twist = h_span.contains(tuple(x2 for row in spec.z for x2 in row))

    if not twisted or exact_twist or a == 1:
        # A(a) N(X) with X = (beta - alpha)/y; for twisted variants the
        # rotation correction exp(-log a Z) is an H element (or the identity)
        X = vec_scale(1 / y, vec_sub(beta, alpha))
        g = mat_mul(dilation_matrix(n, a), translation_matrix(X))
        assert mat_vec(g, v) == tuple(w), "exact transport must match exactly"
        assert is_eta_orthogonal(space, g)
        factors = {"N": X, "A": a, "screw": None}
        if twisted:
            factors["screw"] = {"Z": spec.z, "a": a, "absorbed_by_H": True}
        return TransportResult(matrix=g, exact=True, factors=factors, residual=0.0)

    # float screw path: X solves  Phi(a)^-1 beta = alpha + y X
    zf = np.asarray([[float(c) for c in row] for row in spec.z])
    rot = scipy.linalg.expm(np.log(float(a)) * zf)
    beta_f = np.asarray([float(c) for c in beta])
    alpha_f = np.asarray([float(c) for c in alpha])
    Xf = (rot.T @ beta_f - alpha_f) / float(y)
    gn = _float_translation(n, Xf)
    screw = np.eye(n + 2)
    screw[0, 0] = float(a)
    screw[n + 1, n + 1] = 1.0 / float(a)
    screw[1 : n + 1, 1 : n + 1] = rot
    g = screw @ gn
    vf = np.asarray([float(c) for c in v])
    wf = np.asarray([float(c) for c in w])
    residual = float(np.abs(g @ vf - wf).max())
    if residual > TRANSPORT_TOL:
        raise TransportError("screw transport failed to verify: residual %g" % residual)
    return TransportResult(
        matrix=g,
        exact=False,
        factors={"N": tuple(Xf), "A": a, "screw": {"Z": spec.z, "a": a}},
        residual=residual,
    )


def _float_translation(n, X):
    g = np.eye(n + 2)
    g[0, 1 : n + 1] = -X
    g[0, n + 1] = -0.5 * float(X @ X)
    g[1 : n + 1, n + 1] = X
    return g


def random_hyperbolic_point(rng, n):
    """Seeded random rational point on the hyperboloid."""
    x = Fraction(rng.randint(1, 16), rng.randint(1, 8))
    alpha = tuple(Fraction(rng.randint(-16, 16), 8) for _ in range(n))
    y = -(1 + dot(alpha, alpha)) / (2 * x)
    return HPoint(x, alpha, y)


@dataclass(frozen=True)
class FreenessReport:
    algebra_dim: int
    space_dim: int
    dim_match: bool
    free_at_all_samples: bool
    samples: int
    transitivity_ok: Optional[bool] = None

    @property
    def simply_transitive(self):
        return self.dim_match and self.free_at_all_samples


def freeness_report(triples, n, seed=0, samples=20):
    """Evaluation-rank check of an algebra at random hyperboloid points.

    The algebra acts freely at a point when evaluating its basis there is
    injective; together with the dimension count this certifies simple
    transitivity for the transitive families.
    """
    rng = random.Random(seed)
    mats = [embed_matrix(t) for t in triples]
    k = len(mats)
    free = True
    for _ in range(samples):
        v = random_hyperbolic_point(rng, n).vector()
        cols = [mat_vec(m, v) for m in mats]
        if rank(mat(tuple(zip(*cols)))) != k:
            free = False
            break
    return FreenessReport(
        algebra_dim=k,
        space_dim=n + 1,
        dim_match=(k == n + 1),
        free_at_all_samples=free,
        samples=samples,
    )


def simply_transitive_check(space, spec, seed=0, samples=20):
    """Dimension, pointwise freeness and a transport witness for AN / APhiN."""
    if spec.variant not in ("AN", "APhiN"):
        raise ValueError("simple transitivity is checked for AN and APhiN only")
    base = freeness_report(spec.algebra_basis(), space.n, seed=seed, samples=samples)
    rng = random.Random(seed + 1)
    v = random_hyperbolic_point(rng, space.n)
    w = random_hyperbolic_point(rng, space.n)
    result = transport(space, v, w, spec)
    ok = result.residual <= TRANSPORT_TOL
    return FreenessReport(
        algebra_dim=base.algebra_dim,
        space_dim=base.space_dim,
        dim_match=base.dim_match,
        free_at_all_samples=base.free_at_all_samples,
        samples=base.samples,
        transitivity_ok=ok,
    )


def nontransitivity_witness_KN(n):
    """The pair of points no rotation-translation element can join.

    Every such element has bottom row (0, ..., 0, 1), so the q-coefficient
    is conserved; the two returned points have different q-coefficients
    (-1 versus -1/2).
    """
    space = MinkowskiSpace(n)
    v = HPoint(Fraction(1, 2), zeros_vec(n), Fraction(-1))
    w = HPoint(Fraction(1), zeros_vec(n), Fraction(-1, 2))
    assert on_hyperboloid(space, v.vector()) and on_hyperboloid(space, w.vector())
    return v, w


def preserves_q_coefficient(g):
    """Exact check that the bottom row of g is (0, ..., 0, 1)."""
    d = len(g)
    bottom = g[d - 1]
    return all(bottom[j] == 0 for j in range(d - 1)) and bottom[d - 1] == 1


def stabilizer_point(n):
    """The hyperboloid point p - q/2, fixed by every rotation element."""
    point = HPoint(Fraction(1), zeros_vec(n), Fraction(-1, 2))
    for a in so_basis(n):
        img = mat_vec(embed_matrix(triple_k(a)), point.vector())
        assert all(c == 0 for c in img), "rotations must annihilate the axis point"
    return point
