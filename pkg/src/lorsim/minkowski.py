"""Minkowski space of signature (1, n+1) in an isotropic frame.

The frame is p, e_1, ..., e_n, q where p and q are isotropic, eta(p, q) = 1
and E = span{e_1..e_n} is Euclidean.  The light cone, the hyperboloid model
of hyperbolic space and the boundary chart all live here.

The boundary of hyperbolic space is the set of isotropic lines; deleting the
line through p identifies the rest with E by writing each remaining line as

    R (-1/2 |Y|^2 p + Y + q),   Y in E,

the unique representative with q-coefficient 1.  This is the similarity-
equivalent form of stereographic projection from the deleted point and it is
validated against the dilation/rotation/translation correspondence in the
test suite.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ChartDomainError, DimensionMismatchError, NotIsotropicError
from .linalg import ZERO, dot, frac, vec

SQRT2 = float(np.sqrt(2.0))

#: absolute tolerance for float-path predicates (isotropy, cone membership)
FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class QSqrt2:
    """Exact element a + b*sqrt(2) of the field Q(sqrt 2)."""

    a: Fraction
    b: Fraction

    def __add__(self, other):
        other = _as_qsqrt2(other)
        return QSqrt2(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        other = _as_qsqrt2(other)
        return QSqrt2(self.a - other.a, self.b - other.b)

    def __mul__(self, other):
        other = _as_qsqrt2(other)
        return QSqrt2(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return QSqrt2(-self.a, -self.b)

    def is_rational(self):
        return self.b == 0

    def __float__(self):
        return float(self.a) + float(self.b) * SQRT2

    def __repr__(self):
        return "QSqrt2(%s + %s*sqrt2)" % (self.a, self.b)


def _as_qsqrt2(x):
    if isinstance(x, QSqrt2):
        return x
    return QSqrt2(frac(x), ZERO)


HALF_SQRT2 = QSqrt2(Fraction(0), Fraction(1, 2))  # sqrt(2)/2


class MinkowskiSpace:
    """Dimension n+2 Minkowski space in the frame p, e_1..e_n, q.

    Coordinates of vectors are always given in this frame, ordered
    (p-coefficient, e_1..e_n coefficients, q-coefficient).
    """

    def __init__(self, n):
        if n < 1:
            raise ValueError("Euclidean factor must have dimension >= 1")
        self.n = n
        self.dim = n + 2
        g = [[ZERO] * self.dim for _ in range(self.dim)]
        g[0][self.dim - 1] = Fraction(1)
        g[self.dim - 1][0] = Fraction(1)
        for i in range(1, self.dim - 1):
            g[i][i] = Fraction(1)
        #: Gram matrix of eta in the (p, e, q) frame
        self.gram = tuple(tuple(row) for row in g)
        #: Gram matrix of eta in the orthonormal frame e_0..e_{n+1}
        self.gram_orthonormal = tuple(
            tuple(
                Fraction(-1) if i == j == 0 else (Fraction(1) if i == j else ZERO)
                for j in range(self.dim)
            )
            for i in range(self.dim)
        )

    # -- frame vectors ------------------------------------------------------

    def p(self):
        return vec([1] + [0] * (self.n + 1))

    def q(self):
        return vec([0] * (self.n + 1) + [1])

    def e(self, i):
        """Euclidean basis vector e_i, 1-indexed."""
        if not 1 <= i <= self.n:
            raise IndexError("e_i index out of range")
        c = [0] * self.dim
        c[i] = 1
        return vec(c)

    def from_parts(self, x, alpha, y):
        """Vector x p + alpha + y q with alpha an E-vector of length n."""
        alpha = vec(alpha)
        if len(alpha) != self.n:
            raise DimensionMismatchError("E-part must have length n")
        return (frac(x),) + alpha + (frac(y),)

    def parts(self, v):
        self._check(v)
        return v[0], v[1 : self.dim - 1], v[self.dim - 1]

    def embed_e(self, Y):
        """E-vector -> ambient vector with zero p and q parts."""
        Y = vec(Y)
        if len(Y) != self.n:
            raise DimensionMismatchError("E-vector must have length n")
        return (ZERO,) + Y + (ZERO,)

    def _check(self, v):
        if len(v) != self.dim:
            raise DimensionMismatchError(
                "expected %d coordinates, got %d" % (self.dim, len(v))
            )

    # -- the form -----------------------------------------------------------

    def eta(self, x, y):
        """eta(x, y) evaluated with the (p, e, q)-frame Gram matrix."""
        self._check(x)
        self._check(y)
        if _is_float_vector(x) or _is_float_vector(y):
            xf = np.asarray(x, dtype=float)
            yf = np.asarray(y, dtype=float)
            return float(xf[0] * yf[-1] + yf[0] * xf[-1] + xf[1:-1] @ yf[1:-1])
        return x[0] * y[-1] + y[0] * x[-1] + dot(x[1:-1], y[1:-1])

    def eta_orthonormal(self, x, y):
        """eta evaluated on orthonormal-frame coordinates (QSqrt2 entries allowed)."""
        self._check(x)
        self._check(y)
        acc = _as_qsqrt2(0)
        acc = acc - _as_qsqrt2(x[0]) * _as_qsqrt2(y[0])
        for xi, yi in zip(x[1:], y[1:]):
            acc = acc + _as_qsqrt2(xi) * _as_qsqrt2(yi)
        return acc

    # -- orthonormal frame --------------------------------------------------
    # e_0 = (sqrt2/2)(p - q), e_{n+1} = (sqrt2/2)(p + q); E is shared.

    def to_orthonormal(self, v):
        """Coordinates in the orthonormal frame, as exact QSqrt2 numbers."""
        self._check(v)
        x, alpha, y = self.parts(v)
        x0 = HALF_SQRT2 * _as_qsqrt2(x - y)
        xlast = HALF_SQRT2 * _as_qsqrt2(x + y)
        return (x0,) + tuple(_as_qsqrt2(a) for a in alpha) + (xlast,)

    def from_orthonormal(self, w):
        """Inverse of to_orthonormal; exact on QSqrt2 input."""
        self._check(w)
        x0 = _as_qsqrt2(w[0])
        xlast = _as_qsqrt2(w[-1])
        xp = HALF_SQRT2 * (x0 + xlast)
        xq = HALF_SQRT2 * (xlast - x0)
        mid = tuple(_as_qsqrt2(a) for a in w[1:-1])
        out = (xp,) + mid + (xq,)
        if all(c.is_rational() for c in out):
            return tuple(c.a for c in out)
        return out

    # -- light cone and boundary chart ---------------------------------------

    def on_light_cone(self, v, tol=FLOAT_TOL):
        """eta(v, v) == 0, exactly for rational input, within tol for floats."""
        val = self.eta(v, v)
        if isinstance(val, float):
            return abs(val) <= tol
        return val == 0

    def chart_of_line(self, v, tol=FLOAT_TOL):
        """Chart coordinate Y in E of the isotropic line through v.

        The line must be isotropic and different from the line through p,
        i.e. v must have a nonzero q-coefficient.
        """
        self._check(v)
        if _is_float_vector(v):
            vv = np.asarray(v, dtype=float)
            if abs(self.eta(v, v)) > tol * max(1.0, float(vv @ vv)):
                raise NotIsotropicError("vector is not on the light cone")
            cq = vv[-1]
            if abs(cq) <= tol:
                raise ChartDomainError("line through p is not in the chart domain")
            return vv[1:-1] / cq
        if not self.on_light_cone(v):
            raise NotIsotropicError("vector is not on the light cone")
        cq = v[-1]
        if cq == 0:
            raise ChartDomainError("line through p is not in the chart domain")
        return tuple(a / cq for a in v[1 : self.dim - 1])

    def line_of_chart(self, Y):
        """Isotropic representative -1/2 |Y|^2 p + Y + q of the chart point Y."""
        if isinstance(Y, np.ndarray) or _is_float_vector(Y):
            Yf = np.asarray(Y, dtype=float)
            if Yf.shape != (self.n,):
                raise DimensionMismatchError("chart point must have length n")
            return np.concatenate(([-0.5 * float(Yf @ Yf)], Yf, [1.0]))
        Y = vec(Y)
        if len(Y) != self.n:
            raise DimensionMismatchError("chart point must have length n")
        return (-dot(Y, Y) / 2,) + Y + (Fraction(1),)


def _is_float_vector(v):
    if isinstance(v, np.ndarray):
        return True
    return any(isinstance(c, float) or isinstance(c, np.floating) for c in v)
