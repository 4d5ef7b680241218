"""Weak-irreducibility deciders.

Two independent routes decide whether a stabilizer subalgebra acts
weakly irreducibly (preserves no nondegenerate proper subspace of the
ambient Minkowski space):

* the boundary route: the algebra acts on E by affine vector fields
  v -> (a I + A) v + X; the group it generates is transitive on E exactly
  when no proper affine subspace is preserved, and that happens exactly
  when the algebra is weakly irreducible;
* the ambient route: a direct randomized search for invariant subspaces
  of the embedded (n+2)-dimensional representation, filtered for exact
  nondegeneracy of the restricted form.

Reducibility verdicts always carry an exactly verified certificate.
Irreducibility verdicts are Monte-Carlo: a trial budget was exhausted
without finding a certificate.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional
import random

import sympy

from .errors import DimensionMismatchError
from .linalg import (
    ZERO,
    Span,
    charpoly,
    det,
    identity,
    mat,
    mat_vec,
    nullspace,
    orthocomplement,
    poly_apply,
    primitive,
    primitive_mat,
    restricted_gram,
    solve_linear,
    span_intersect,
    span_sum,
    transpose,
    vec,
    vec_add,
    vec_scale,
    zeros_vec,
)
from .liealg import embed_matrix
from .minkowski import MinkowskiSpace

DEFAULT_BUDGET = 64

#: stop sampling random algebra elements after this many consecutive
#: duds, but never before _MIN_TRIALS (the budget stays the hard cap)
_STALL_LIMIT = 6
_MIN_TRIALS = 8

#: once this many invariant subspaces are in hand further sampling only
#: churns the lattice of an already-rich family; stop and grow instead
_RICH_LIMIT = 48
_GROWTH_CAP = 120
_GROWTH_PAIRS = 2000

_POLY_X = sympy.Symbol("x")


@dataclass(frozen=True)
class AffineField:
    """Infinitesimal similarity v -> M v + X with M = a I + A, A skew."""

    M: tuple
    X: tuple

    @property
    def n(self):
        return len(self.X)


def affine_action(g):
    """One affine field per basis triple of the subalgebra."""
    out = []
    for t in g.basis:
        m = tuple(
            tuple(t.A[i][j] + (t.a if i == j else ZERO) for j in range(t.n))
            for i in range(t.n)
        )
        out.append(AffineField(M=m, X=t.X))
    return out


@dataclass(frozen=True)
class InvariantCertificate:
    """An exactly verified invariant structure.

    kind 'fixed-point':     base_point is fixed by every field.
    kind 'affine-subspace': base_point + span(linear_part) is preserved by
                            every field.
    kind 'linear-subspace': span(basis) of the ambient space is preserved
                            by every embedded generator; `degenerate` records
                            whether the restriction of eta is degenerate.
    """

    kind: str
    basis: tuple = ()
    linear_part: tuple = ()
    base_point: tuple = ()
    degenerate: Optional[bool] = None


@dataclass(frozen=True)
class WIVerdict:
    weakly_irreducible: bool
    method: str
    trials: int
    seed: int
    certificate: Optional[InvariantCertificate] = None


# -- randomized common-invariant-subspace machinery ---------------------------


def _factor_poly(coeffs):
    """Irreducible factors over Q of a polynomial given by monic-order coefficients."""
    rationals = [sympy.Rational(c.numerator, c.denominator) for c in coeffs]
    poly = sympy.Poly(rationals, _POLY_X, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for f, mult in factors:
        fc = tuple(Fraction(c.p, c.q) for c in f.all_coeffs())
        if len(fc) > 1:
            out.append((fc, mult))
    return out


def _spin_up(mats, vectors, ambient):
    """Smallest subspace containing the vectors and invariant under every matrix."""
    sp = Span(ambient)
    frontier = []
    for v in vectors:
        v = primitive(v)
        if sp.add(v):
            frontier.append(v)
    while frontier:
        nxt = []
        for v in frontier:
            for m in mats:
                w = primitive(mat_vec(m, v))
                if sp.add(w):
                    nxt.append(w)
                if sp.is_full():
                    return sp
        frontier = nxt
    return sp


def _is_invariant(mats, span):
    return all(span.contains(mat_vec(m, b)) for m in mats for b in span.basis)


def _random_element(mats, rng):
    ambient = len(mats[0])
    acc = None
    for m in mats:
        c = rng.randint(-3, 3)
        if c == 0:
            continue
        term = tuple(tuple(c * x for x in row) for row in m)
        acc = term if acc is None else tuple(
            tuple(x + y for x, y in zip(r, s)) for r, s in zip(acc, term)
        )
    if acc is None:
        acc = tuple((ZERO,) * ambient for _ in range(ambient))
    return acc


def _mat_product(a, b):
    bt = transpose(b)
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in bt) for row in a
    )


class _CandidateSet:
    """Deduplicated proper nonzero invariant subspaces, insertion-ordered."""

    def __init__(self, mats, ambient):
        self.mats = mats
        self.ambient = ambient
        self.seen = set()
        self.items = []

    def offer(self, span, verified=False):
        if span.dim == 0 or span.dim >= self.ambient:
            return False
        key = span.basis
        if key in self.seen:
            return False
        if not verified and not _is_invariant(self.mats, span):
            return False
        self.seen.add(key)
        self.items.append(span)
        return True


class _SpinCache:
    """Memoized spin-ups: the same seed vector recurs across trials."""

    def __init__(self, family, ambient):
        self.family = family
        self.ambient = ambient
        self.single = {}

    def of_vector(self, v):
        v = primitive(v)
        hit = self.single.get(v)
        if hit is None:
            hit = _spin_up(self.family, [v], self.ambient)
            self.single[v] = hit
        return hit

    def of_vectors(self, vs):
        if len(vs) == 1:
            return self.of_vector(vs[0])
        return _spin_up(self.family, vs, self.ambient)


def common_invariant_subspaces(
    mats, ambient, rng, budget=DEFAULT_BUDGET, include_transposed=True, accept=None
):
    """Proper nonzero subspaces invariant under every matrix of the family.

    Randomized module-splitting search: spin-ups of coordinate vectors and
    common kernels, characteristic-polynomial factor kernels of random
    algebra elements, then a bounded round of pairwise sums and
    intersections.  With include_transposed the same harvest runs on the
    transposed family and the results orthocomplement back; callers whose
    families are closed under a Gram conjugation get nothing new from it
    and should switch it off.  Everything returned is exactly verified; the
    list may be incomplete, never wrong.

    accept, when given, is called once on each newly found subspace; a True
    return stops the search immediately (callers keep their own record of
    what they accepted).

    Returns (candidates, trials_used).
    """
    mats = [mat(m) for m in mats]
    if not mats:
        return [], 0
    cands = _CandidateSet(mats, ambient)
    cache = _SpinCache(mats, ambient)
    tside = None
    if include_transposed:
        tmats = [transpose(m) for m in mats]
        tside = (_SpinCache(tmats, ambient), _CandidateSet(tmats, ambient))

    state = {"stop": False}

    def primary_offer(span, verified=False):
        if state["stop"]:
            return False
        if not cands.offer(span, verified=verified):
            return False
        if accept is not None and accept(span):
            state["stop"] = True
        return True

    def transposed_offer(span):
        # invariant subspaces of the transposed family orthocomplement back
        if tside is None or state["stop"]:
            return False
        if not tside[1].offer(span, verified=True):
            return False
        primary_offer(orthocomplement(span))
        return True

    def seed_harvest(fam_cache, offer):
        for v in identity(ambient):
            offer(fam_cache.of_vector(v))
            if state["stop"]:
                return
        stacked = [row for m in fam_cache.family for row in m]
        kern = nullspace(mat(stacked))
        for v in kern:
            offer(fam_cache.of_vector(v))
            if state["stop"]:
                return
        if len(kern) > 1:
            offer(fam_cache.of_vectors(kern))

    def harvest_random(r, fam_cache, offer):
        found = False
        cp = charpoly(r)
        for fc, mult in _factor_poly(cp):
            if state["stop"]:
                return found
            fr = primitive_mat(poly_apply(fc, r))
            pieces = [nullspace(fr)]
            if mult > 1:
                power = fr
                for _ in range(mult - 1):
                    power = primitive_mat(_mat_product(power, fr))
                pieces.append(nullspace(power))
            for piece in pieces:
                if not piece or len(piece) == ambient:
                    continue
                if len(piece) <= 3:
                    for v in piece:
                        found = offer(fam_cache.of_vector(v)) or found
                if len(piece) > 1:
                    found = offer(fam_cache.of_vectors(piece)) or found
                    w = zeros_vec(ambient)
                    for v in piece:
                        w = vec_add(w, vec_scale(rng.randint(1, 3), v))
                    found = offer(fam_cache.of_vector(w)) or found
                if state["stop"]:
                    return found
        return found

    def offer_verified(span):
        return primary_offer(span, verified=True)

    seed_harvest(cache, offer_verified)
    if tside is not None and not state["stop"]:
        seed_harvest(tside[0], transposed_offer)

    trials = 0
    stall = 0
    while trials < budget and not state["stop"]:
        if len(cands.items) >= _RICH_LIMIT and trials >= 2:
            break
        if len(cands.items) >= _RICH_LIMIT // 2 and trials >= _MIN_TRIALS:
            break
        trials += 1
        r = _random_element(mats, rng)
        if rng.random() < 0.5:
            r = primitive_mat(_mat_product(r, _random_element(mats, rng)))
        progress = harvest_random(r, cache, offer_verified)
        if tside is not None and not state["stop"]:
            progress = harvest_random(transpose(r), tside[0], transposed_offer) or progress
        stall = 0 if progress else stall + 1
        if trials >= _MIN_TRIALS and stall >= _STALL_LIMIT:
            break

    # bounded lattice growth: pairwise sums and intersections
    pairs = 0
    for _ in range(2):
        if state["stop"]:
            break
        current = list(cands.items)
        grew = False
        for i in range(len(current)):
            if state["stop"] or pairs > _GROWTH_PAIRS:
                break
            for j in range(i + 1, len(current)):
                pairs += 1
                grew = primary_offer(span_sum(current[i], current[j]), verified=True) or grew
                grew = primary_offer(
                    span_intersect(current[i], current[j]), verified=True
                ) or grew
                if state["stop"] or pairs > _GROWTH_PAIRS:
                    break
            if len(cands.items) > _GROWTH_CAP:
                break
        if not grew or len(cands.items) > _GROWTH_CAP or pairs > _GROWTH_PAIRS:
            break

    ordered = sorted(cands.items, key=lambda s: (s.dim, s.basis))
    return ordered, trials


# -- the boundary-side decider ------------------------------------------------


def _verify_affine(fields, linear_span, x0):
    for f in fields:
        img = vec_add(mat_vec(f.M, x0), f.X)
        if not linear_span.contains(img):
            return False
        for b in linear_span.basis:
            if not linear_span.contains(mat_vec(f.M, b)):
                return False
    return True


def find_invariant_affine(fields, n, seed=0, budget=DEFAULT_BUDGET):
    """A proper affine subspace preserved by every field, or None.

    Search order: exact common fixed point; the smallest invariant subspace
    through the translation parts; then the x0-solvability system over each
    invariant linear subspace found by the randomized search, largest first.

    Returns (certificate_or_None, trials_used).
    """
    fields = list(fields)
    if any(f.n != n for f in fields):
        raise DimensionMismatchError("fields live over different n")

    # pure translations must land inside any invariant linear part, so if
    # they span E no proper invariant affine subspace can exist: an exact
    # transitivity verdict with no sampling at all
    pure = Span(n, [f.X for f in fields if all(x == 0 for row in f.M for x in row)])
    if pure.is_full():
        return None, 0

    # (i) common fixed point: stack M_i x = -X_i
    stacked = [row for f in fields for row in f.M]
    rhs = [-x for f in fields for x in f.X]
    x0 = solve_linear(mat(stacked), vec(rhs)) if fields else zeros_vec(n)
    if x0 is not None:
        cert = InvariantCertificate(kind="fixed-point", base_point=vec(x0))
        return cert, 0

    mats = [f.M for f in fields]

    # (ii) translations stay inside their own reach; if it is proper, done
    reach = _spin_up(mats, [f.X for f in fields], n)
    if 0 < reach.dim < n:
        cert = InvariantCertificate(
            kind="affine-subspace",
            linear_part=reach.basis,
            base_point=zeros_vec(n),
        )
        assert _verify_affine(fields, reach, zeros_vec(n))
        return cert, 0

    # (iii) invariant linear part S, then solve for the base point modulo S;
    # solvability is monotone in S, so testing every candidate as it appears
    # is sound and the first hit can be returned immediately
    rng = random.Random(seed)
    found = {}

    def accept(s):
        funcs = orthocomplement(s).basis
        rows = []
        rhs = []
        for f in fields:
            for l in funcs:
                rows.append(mat_vec(transpose(f.M), l))
                rhs.append(-sum((a * b for a, b in zip(l, f.X)), ZERO))
        x0 = solve_linear(mat(rows), vec(rhs))
        if x0 is not None and _verify_affine(fields, s, x0):
            found["cert"] = InvariantCertificate(
                kind="affine-subspace",
                linear_part=s.basis,
                base_point=vec(x0),
            )
            return True
        return False

    _, trials = common_invariant_subspaces(mats, n, rng, budget=budget, accept=accept)
    return found.get("cert"), trials


# -- the ambient-side oracle ----------------------------------------------------


def find_invariant_V_subspace(g, only_nondegenerate=True, seed=0, budget=DEFAULT_BUDGET):
    """Invariant subspace of the ambient (n+2)-dimensional representation.

    With only_nondegenerate, candidates whose restricted Gram matrix is
    exactly singular are rejected.  Returns (certificate_or_None, trials).
    """
    n = g.n
    space = MinkowskiSpace(n)
    ambient = n + 2
    mats = [embed_matrix(t) for t in g.basis]
    if not mats:
        return None, 0
    rng = random.Random(seed)
    found = {}

    def try_one(s):
        gram = restricted_gram(space.gram, s.basis)
        degenerate = det(gram) == 0
        if only_nondegenerate and degenerate:
            return False
        found["cert"] = InvariantCertificate(
            kind="linear-subspace", basis=s.basis, degenerate=degenerate
        )
        return True

    def accept(s):
        if try_one(s):
            return True
        # eta-orthocomplements of invariant subspaces are invariant (skew
        # family); they often carry the nondegenerate witness
        oc = orthocomplement(s, gram=space.gram)
        for extra in (oc, span_sum(s, oc), span_intersect(s, oc)):
            if 0 < extra.dim < ambient and _is_invariant(mats, extra) and try_one(extra):
                return True
        return False

    # eta-skew families satisfy M^T = -G M G with G an involution, so the
    # transposed harvest would only reproduce the eta-orthocomplements
    # already tested in accept
    _, trials = common_invariant_subspaces(
        mats, ambient, rng, budget=budget, include_transposed=False, accept=accept
    )
    return found.get("cert"), trials


def is_weakly_irreducible(g, seed=0, budget=DEFAULT_BUDGET):
    """Boundary-route verdict; REDUCIBLE always carries an exact certificate.

    The ambient-route oracle (find_invariant_V_subspace) is exposed
    separately; the two must agree, which the acceptance suite checks.
    """
    fields = affine_action(g)
    cert, trials = find_invariant_affine(fields, g.n, seed=seed, budget=budget)
    return WIVerdict(
        weakly_irreducible=cert is None,
        method="boundary-affine",
        trials=trials,
        seed=seed,
        certificate=cert,
    )
