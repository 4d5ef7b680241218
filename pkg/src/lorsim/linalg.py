"""Exact linear algebra over the rationals.

Vectors are tuples of Fraction, matrices are tuples of row tuples. All rank
and membership decisions in the package go through this module so that they
never depend on floating-point tolerances.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x):
    """Coerce ints, strings like '-1/2' and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.replace("−", "-"))
    raise TypeError("cannot build an exact rational from %r" % (x,))


def vec(xs):
    return tuple(frac(x) for x in xs)


def mat(rows):
    m = tuple(tuple(frac(x) for x in row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise ValueError("ragged matrix")
    return m


def zeros_vec(n):
    return (ZERO,) * n


def zeros_mat(r, c):
    return tuple((ZERO,) * c for _ in range(r))


def identity(n):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u):
    return tuple(c * a for a in u)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), ZERO)


def is_zero_vec(u):
    return all(a == 0 for a in u)


def primitive(u):
    """Scale a rational vector to coprime integer entries (sign of first nonzero +).

    Rescaling never changes a span; working with primitive vectors keeps
    gcd costs flat in the randomized searches.
    """
    from math import gcd

    u = [frac(x) for x in u]
    den = 1
    for x in u:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in u]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(ZERO for _ in u)
    lead = next((x for x in ints if x != 0), 1)
    if lead < 0:
        g = -g
    return tuple(Fraction(x, g) for x in ints)


def primitive_mat(m):
    """Scale a matrix by a positive rational to coprime integer entries."""
    flat = primitive([x for row in m for x in row])
    k = len(m[0]) if m else 0
    return tuple(tuple(flat[i * k : (i + 1) * k]) for i in range(len(m)))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_vec(a, v):
    return tuple(dot(row, v) for row in a)


def commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def is_zero_mat(a):
    return all(x == 0 for row in a for x in row)


def trace(a):
    return sum((a[i][i] for i in range(len(a))), ZERO)


def rref(rows):
    """Reduced row echelon form. Returns (rows, pivot_columns); zero rows dropped."""
    work = [[frac(x) for x in r] for r in rows]
    n_rows = len(work)
    n_cols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = None
        for i in range(r, n_rows):
            if work[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        pv = work[r][c]
        work[r] = [x / pv for x in work[r]]
        for i in range(n_rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return [tuple(row) for row in work[:r]], pivots


def rank(m):
    return len(rref(m)[0])


def nullspace(m):
    """Basis of {x : m x = 0}, one primitive vector per free column."""
    if not m:
        return []
    n_cols = len(m[0])
    rows, pivots = rref([primitive(r) for r in m])
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for fc in free:
        x = [ZERO] * n_cols
        x[fc] = ONE
        for r, pc in enumerate(pivots):
            x[pc] = -rows[r][fc]
        basis.append(primitive(x))
    return basis


def solve_linear(a, b):
    """One solution of a x = b (free variables set to 0), or None if inconsistent."""
    if not a:
        return ()
    n_cols = len(a[0])
    aug = [tuple(row) + (bi,) for row, bi in zip(a, b)]
    rows, pivots = rref(aug)
    for r, pc in zip(rows, pivots):
        if pc == n_cols:
            return None
    x = [ZERO] * n_cols
    for r, pc in zip(rows, pivots):
        x[pc] = r[n_cols]
    return tuple(x)


def det(m):
    n = len(m)
    if n == 0:
        return ONE
    work = [[frac(x) for x in r] for r in m]
    d = ONE
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if work[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            return ZERO
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            d = -d
        pv = work[c][c]
        d *= pv
        for i in range(c + 1, n):
            if work[i][c] != 0:
                f = work[i][c] / pv
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return d


def mat_inverse(m):
    """Exact inverse; raises ValueError on singular input."""
    n = len(m)
    aug = [tuple(frac(x) for x in row) + identity(n)[i] for i, row in enumerate(m)]
    rows, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)


def charpoly(m):
    """Monic characteristic polynomial of m by the Faddeev-LeVerrier recursion.

    Returns coefficients (1, c1, ..., cn) of x^n + c1 x^(n-1) + ... + cn.
    """
    m = mat(m)
    n = len(m)
    coeffs = [ONE]
    mk = m
    for k in range(1, n + 1):
        ck = -trace(mk) / k
        coeffs.append(ck)
        if k < n:
            mk = mat_mul(m, mat_add(mk, mat_scale(ck, identity(n))))
    return tuple(coeffs)


def poly_apply(coeffs, m):
    """Evaluate the polynomial with the given monic-order coefficients at m (Horner)."""
    n = len(m)
    out = zeros_mat(n, n)
    for c in coeffs:
        out = mat_add(mat_mul(out, m), mat_scale(c, identity(n)))
    return out


def mat_pow(m, k):
    n = len(m)
    out = identity(n)
    base = m
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out


class Span:
    """A rational subspace kept in reduced row echelon form.

    The basis is canonical, so two spans are equal as subspaces iff their
    `basis` tuples are equal.
    """

    def __init__(self, ambient, vectors=()):
        self.ambient = ambient
        self._rows = []
        self._pivots = []
        for v in vectors:
            self.add(v)

    def add(self, v):
        """Insert v; returns True if the dimension grew."""
        v = [frac(x) for x in v]
        if len(v) != self.ambient:
            raise ValueError("ambient dimension mismatch")
        for row, p in zip(self._rows, self._pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        lead = next((i for i, x in enumerate(v) if x != 0), None)
        if lead is None:
            return False
        pv = v[lead]
        v = [x / pv for x in v]
        # back-eliminate the new pivot column from the stored rows
        for i, row in enumerate(self._rows):
            if row[lead] != 0:
                f = row[lead]
                self._rows[i] = [x - f * y for x, y in zip(row, v)]
        pos = next((i for i, p in enumerate(self._pivots) if p > lead), len(self._pivots))
        self._rows.insert(pos, v)
        self._pivots.insert(pos, lead)
        return True

    def extend(self, vectors):
        grew = False
        for v in vectors:
            grew = self.add(v) or grew
        return grew

    def contains(self, v):
        v = [frac(x) for x in v]
        for row, p in zip(self._rows, self._pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return all(x == 0 for x in v)

    def contains_span(self, other):
        return all(self.contains(b) for b in other.basis)

    @property
    def basis(self):
        return tuple(tuple(row) for row in self._rows)

    @property
    def dim(self):
        return len(self._rows)

    def is_zero(self):
        return not self._rows

    def is_full(self):
        return len(self._rows) == self.ambient

    def copy(self):
        s = Span(self.ambient)
        s._rows = [list(r) for r in self._rows]
        s._pivots = list(self._pivots)
        return s

    def __eq__(self, other):
        return (
            isinstance(other, Span)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return "Span(dim=%d, ambient=%d)" % (self.dim, self.ambient)


def span_sum(a, b):
    s = a.copy()
    s.extend(b.basis)
    return s


def span_intersect(a, b):
    """Intersection of two spans of the same ambient space."""
    if a.ambient != b.ambient:
        raise ValueError("ambient dimension mismatch")
    if a.is_zero() or b.is_zero():
        return Span(a.ambient)
    ba, bb = a.basis, b.basis
    # x = sum u_i ba_i = sum w_j bb_j  <=>  (u, w) in the kernel of [ba^T  -bb^T]
    rows = []
    for c in range(a.ambient):
        rows.append(tuple(v[c] for v in ba) + tuple(-v[c] for v in bb))
    out = Span(a.ambient)
    for k in nullspace(mat(rows)):
        u = k[: len(ba)]
        x = zeros_vec(a.ambient)
        for ui, bi in zip(u, ba):
            x = vec_add(x, vec_scale(ui, bi))
        out.add(x)
    return out


def orthocomplement(span, gram=None):
    """{x : b^T G x = 0 for every basis vector b}; G defaults to the identity."""
    n = span.ambient
    if span.is_zero():
        return Span(n, identity(n))
    if gram is None:
        rows = list(span.basis)
    else:
        rows = [mat_vec(gram, b) for b in span.basis]
    return Span(n, nullspace(mat(rows)))


def restricted_gram(gram, basis):
    """Gram matrix of the bilinear form `gram` restricted to the given basis."""
    return tuple(
        tuple(dot(bi, mat_vec(gram, bj)) for bj in basis) for bi in basis
    )
