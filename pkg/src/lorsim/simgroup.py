"""The dictionary between line-preserving Lorentz matrices and similarities of E.

A matrix fixing the isotropic line through p acts on the boundary chart E;
that action is a similarity v -> lambda R v + t, and every similarity arises
this way.  `boundary_action` evaluates the action (exactly on rational
matrices), `extract_sim` reads off (lambda, R, t) by probing the origin and
the coordinate directions, and `screw_element` realizes the two coupled
one-parameter families: dilations twisted by a rotation flow, and
translations twisted by commuting rotations.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from .errors import DimensionMismatchError, NotSkewError
from .linalg import Span, commutator, mat, mat_vec, solve_linear, vec
from .liealg import embed_matrix, fixes_line_p, translation_matrix

ORTHO_TOL = 1e-9


@dataclass(frozen=True)
class SimTransform:
    """Similarity v -> lam * R v + t of Euclidean E."""

    lam: float
    R: np.ndarray
    t: np.ndarray

    def apply(self, v):
        return self.lam * (self.R @ np.asarray(v, dtype=float)) + self.t

    def compose(self, other):
        """self after other."""
        return SimTransform(
            lam=self.lam * other.lam,
            R=self.R @ other.R,
            t=self.lam * (self.R @ other.t) + self.t,
        )

    @staticmethod
    def identity(n):
        return SimTransform(1.0, np.eye(n), np.zeros(n))


def _check_skew_exact(z):
    z = mat(z)
    n = len(z)
    for i in range(n):
        for j in range(n):
            if z[i][j] != -z[j][i]:
                raise NotSkewError("screw generator must be exactly skew")
    return z


@dataclass(frozen=True)
class ScrewGroup:
    """One of the two coupled one-parameter families of similarities.

    variant 'A_phi': dilations a > 0 coupled to the rotation flow
        exp(log(a) Z); one exact skew generator Z.
    variant 'U_psi': translations u in U coupled to exp(sum u_i Z_i);
        the Z_i are exact skew generators that must commute pairwise.
    """

    variant: str
    z: Optional[tuple] = None
    u_basis: tuple = ()
    zs: tuple = ()

    @staticmethod
    def dilation(z):
        return ScrewGroup(variant="A_phi", z=_check_skew_exact(z))

    @staticmethod
    def translation_screw(u_basis, zs):
        u_basis = tuple(vec(u) for u in u_basis)
        zs = tuple(_check_skew_exact(z) for z in zs)
        if len(u_basis) != len(zs):
            raise DimensionMismatchError("need one skew generator per U direction")
        for i in range(len(zs)):
            for j in range(i + 1, len(zs)):
                if any(x != 0 for row in commutator(zs[i], zs[j]) for x in row):
                    raise ValueError("screw generators must commute exactly")
        return ScrewGroup(variant="U_psi", u_basis=u_basis, zs=zs)


def boundary_action(space, g, Y):
    """Chart image of Y under g: chart(g . line(Y)).

    Exact for rational g and Y; float otherwise.  g must fix the line
    through p, which guarantees the image line stays inside the chart.
    """
    line = space.line_of_chart(Y)
    if isinstance(g, np.ndarray):
        if not fixes_line_p(g):
            raise ValueError("matrix does not preserve the line through p")
        image = g @ np.asarray(line, dtype=float)
        return space.chart_of_line(image)
    g = mat(g)
    if not fixes_line_p(g):
        raise ValueError("matrix does not preserve the line through p")
    image = mat_vec(g, line)
    assert image[-1] != 0, "line-preserving matrices cannot reach the deleted pole"
    return space.chart_of_line(image)


def extract_sim(space, g, tol=ORTHO_TOL):
    """Read (lambda, R, t) off the boundary action by probing 0 and the e_i.

    Works uniformly for any matrix fixing the line through p and doubles as
    a consistency check of the chart: the probe columns must form a positive
    multiple of an orthogonal matrix.
    """
    n = space.n
    zero = np.zeros(n)
    t = np.asarray(boundary_action(space, g, zero), dtype=float)
    cols = []
    for i in range(n):
        e = np.zeros(n)
        e[i] = 1.0
        cols.append(np.asarray(boundary_action(space, g, e), dtype=float) - t)
    m = np.stack(cols, axis=1)
    lam = float(np.linalg.norm(m[:, 0]))
    if lam <= tol:
        raise ValueError("degenerate probe: input is not a similarity")
    r = m / lam
    if np.abs(r.T @ r - np.eye(n)).max() > tol:
        raise ValueError("probe columns are not orthogonal: malformed input")
    if abs(np.linalg.det(r) - 1.0) > max(tol, 1e-6):
        raise ValueError("rotation part is not special orthogonal")
    return SimTransform(lam=lam, R=r, t=t)


def flow_check(space, t, Y, h=1e-4):
    """Residual between the boundary flow derivative and the affine field.

    Central differences of s -> boundary_action(exp(s t), Y) at s = 0,
    compared against (a I + A) Y + X.
    """
    n = space.n
    Yf = np.asarray([float(y) for y in Y], dtype=float)
    m = np.asarray([[float(x) for x in row] for row in embed_matrix(t)])
    plus = np.asarray(
        boundary_action(space, scipy.linalg.expm(h * m), Yf), dtype=float
    )
    minus = np.asarray(
        boundary_action(space, scipy.linalg.expm(-h * m), Yf), dtype=float
    )
    deriv = (plus - minus) / (2.0 * h)
    a = float(t.a)
    A = np.asarray([[float(x) for x in row] for row in t.A])
    X = np.asarray([float(x) for x in t.X])
    target = A @ Yf + a * Yf + X
    return float(np.linalg.norm(deriv - target))


def screw_element(space, screw, param):
    """Group matrix and similarity for one parameter value of a screw family.

    For the dilation variant the parameter is a > 0 and the result is
    (a, exp(log a Z), 0).  For the translation variant the parameter is a
    vector u in U and the result is (1, exp(sum c_i Z_i), u).
    """
    n = space.n
    if screw.variant == "A_phi":
        a = float(param)
        if a <= 0:
            raise ValueError("dilation parameter must be positive")
        zf = np.asarray([[float(x) for x in row] for row in screw.z])
        rot = scipy.linalg.expm(np.log(a) * zf)
        gm = _dilation_block(n, a) @ _rotation_block(n, rot)
        sim = SimTransform(lam=a, R=rot, t=np.zeros(n))
        return gm, sim
    if screw.variant == "U_psi":
        u = vec(param)
        span = Span(n, screw.u_basis)
        if not span.contains(u):
            raise ValueError("parameter must lie in U")
        coeffs = _coords_in_basis(screw.u_basis, u, n)
        zf = np.zeros((n, n))
        for c, z in zip(coeffs, screw.zs):
            zf += float(c) * np.asarray([[float(x) for x in row] for row in z])
        rot = scipy.linalg.expm(zf)
        gm = _rotation_block(n, rot) @ _float_group(translation_matrix(u))
        sim = SimTransform(lam=1.0, R=rot, t=np.asarray([float(x) for x in u]))
        return gm, sim
    raise ValueError("unknown screw variant %r" % (screw.variant,))


def _coords_in_basis(basis, v, n):
    cols = tuple(zip(*[tuple(b) for b in basis]))
    sol = solve_linear(mat(cols), vec(v))
    assert sol is not None
    return sol


def _float_group(g):
    return np.asarray([[float(x) for x in row] for row in g])


def _rotation_block(n, rot):
    gm = np.eye(n + 2)
    gm[1 : n + 1, 1 : n + 1] = rot
    return gm


def _dilation_block(n, a):
    gm = np.eye(n + 2)
    gm[0, 0] = a
    gm[n + 1, n + 1] = 1.0 / a
    return gm
