"""Reduced-budget property checks for the CLI selftest command.

These mirror the acceptance suite at a fraction of the sample counts so a
smoke run finishes in seconds.
"""

import random
from fractions import Fraction

import numpy as np

from .classify import catalog_B, classify, construct_type3, construct_type4
from .hyperbolic import (
    TransitiveGroupSpec,
    freeness_report,
    nontransitivity_witness_KN,
    preserves_q_coefficient,
    random_hyperbolic_point,
    simply_transitive_check,
    transport,
)
from .invariance import find_invariant_V_subspace, is_weakly_irreducible
from .liealg import (
    bracket,
    center_and_commutant,
    commutator,
    dilation_matrix,
    embed_matrix,
    exp_triple,
    rotation_matrix,
    translation_matrix,
    triple_from_matrix,
)
from .minkowski import MinkowskiSpace
from .sampling import (
    equivalence_corpus,
    make_instance,
    random_rotation,
    random_triple,
    random_vector,
)
from .simgroup import boundary_action, extract_sim, flow_check


def _check(name, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # a failing check must not kill the report
        return {"name": name, "ok": False, "detail": "raised %r" % (exc,)}
    return {"name": name, "ok": bool(ok), "detail": detail}


def run_selftest(seed=0, budget=16):
    """List of {name, ok, detail} dicts; reduced-sample acceptance mirror."""
    rng = random.Random(seed)
    checks = []

    def bracket_oracle():
        for _ in range(60):
            n = rng.choice([1, 2, 3, 4])
            u, v = random_triple(rng, n), random_triple(rng, n)
            direct = bracket(u, v)
            via = triple_from_matrix(
                commutator(embed_matrix(u), embed_matrix(v))
            )
            if direct != via:
                return False, "closed form disagrees with the commutator"
        return True, "60 random triples"

    checks.append(_check("bracket-matches-commutator", bracket_oracle))

    def chart_rows():
        sp = MinkowskiSpace(3)
        for _ in range(5):
            Y = random_vector(rng, 3)
            a = Fraction(rng.randint(1, 8), rng.randint(1, 8))
            X = random_vector(rng, 3)
            f = random_rotation(rng, 3)
            if boundary_action(sp, dilation_matrix(3, a), Y) != tuple(c * a for c in Y):
                return False, "dilation row failed"
            if boundary_action(sp, translation_matrix(X), Y) != tuple(
                c + x for c, x in zip(Y, X)
            ):
                return False, "translation row failed"
            fy = tuple(
                sum((f[i][j] * Y[j] for j in range(3)), Fraction(0)) for i in range(3)
            )
            if boundary_action(sp, rotation_matrix(f), Y) != fy:
                return False, "rotation row failed"
        return True, "exact on 5 random parameters each"

    checks.append(_check("boundary-correspondence-rows", chart_rows))

    def round_trips():
        g1, _ = make_instance(1, "so2", 2, seed=seed)
        g2, _ = make_instance(2, "so3", 3, seed=seed)
        g3, _ = make_instance(3, "so2", 2, seed=seed)
        g4, _ = make_instance(4, "so2", 3, seed=seed)
        tags = [classify(g).type_tag for g in (g1, g2, g3, g4)]
        return tags == [1, 2, 3, 4], "tags %r" % (tags,)

    checks.append(_check("classification-round-trip", round_trips))

    def wi_agreement():
        corpus = equivalence_corpus(n_values=(2, 3), seed=seed, min_count=1)[:12]
        for name, g, expected in corpus:
            e_side = is_weakly_irreducible(g, seed=seed, budget=budget)
            cert, _ = find_invariant_V_subspace(
                g, only_nondegenerate=True, seed=seed, budget=budget
            )
            if e_side.weakly_irreducible != (cert is None):
                return False, "routes disagree on %s" % name
            if e_side.weakly_irreducible != expected:
                return False, "wrong verdict on %s" % name
        return True, "%d instances" % len(corpus)

    checks.append(_check("weak-irreducibility-equivalence", wi_agreement))

    def transport_exact():
        sp = MinkowskiSpace(2)
        spec = TransitiveGroupSpec("AN", 2)
        for _ in range(10):
            v = random_hyperbolic_point(rng, 2)
            w = random_hyperbolic_point(rng, 2)
            res = transport(sp, v, w, spec)
            if not res.exact:
                return False, "expected the exact path"
        wit_v, wit_w = nontransitivity_witness_KN(2)
        if wit_v.y == wit_w.y:
            return False, "witness q-coefficients must differ"
        if not preserves_q_coefficient(translation_matrix([1, 2])):
            return False, "translations must conserve the q-coefficient"
        return True, "10 exact transports and the conserved-charge witness"

    checks.append(_check("hyperbolic-transport", transport_exact))

    def similarity_law():
        sp = MinkowskiSpace(3)
        for _ in range(5):
            g = exp_triple(random_triple(rng, 3)) @ exp_triple(random_triple(rng, 3))
            s = extract_sim(sp, g)
            y1 = np.asarray([rng.uniform(-2, 2) for _ in range(3)])
            y2 = np.asarray([rng.uniform(-2, 2) for _ in range(3)])
            f1 = np.asarray(boundary_action(sp, g, y1))
            f2 = np.asarray(boundary_action(sp, g, y2))
            ratio = np.linalg.norm(f1 - f2) / np.linalg.norm(y1 - y2)
            if abs(ratio - s.lam) > 1e-9 * max(1.0, s.lam):
                return False, "distance ratio drifted"
        return True, "5 random exponential products"

    checks.append(_check("similarity-law", similarity_law))

    def flows():
        sp = MinkowskiSpace(2)
        worst = 0.0
        for _ in range(10):
            t = random_triple(rng, 2)
            y = [rng.uniform(-1, 1) for _ in range(2)]
            worst = max(worst, flow_check(sp, t, y))
        return worst <= 1e-6, "worst residual %.3g" % worst

    checks.append(_check("boundary-flow-consistency", flows))

    def freeness():
        sp = MinkowskiSpace(3)
        rep = simply_transitive_check(sp, TransitiveGroupSpec("AN", 3), seed=seed)
        kn = freeness_report(
            TransitiveGroupSpec("KN", 3).algebra_basis(), 3, seed=seed, samples=5
        )
        ok = rep.simply_transitive and rep.transitivity_ok and not kn.simply_transitive
        return ok, "AN free and transitive, KN rejected"

    checks.append(_check("simple-transitivity", freeness))

    return checks
