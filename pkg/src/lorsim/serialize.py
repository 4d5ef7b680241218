"""JSON serialization for all package objects.

Rationals serialize as strings like "-1/2" so nothing is ever rounded;
floats appear only in boundary-action and exponential reports and are
emitted at 17 significant digits.  canonical_dumps produces byte-identical
output for equal inputs (sorted keys, fixed separators).
"""

import json
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatchError
from .invariance import InvariantCertificate, WIVerdict
from .liealg import LieTriple, Subalgebra, lie_closure
from .linalg import frac
from .minkowski import MinkowskiSpace


def frac_str(x):
    return str(frac(x))


def parse_frac(s):
    if isinstance(s, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(s, (int, str, Fraction)):
        return frac(s)
    raise ValueError("expected a rational string, got %r" % (s,))


def _fmt_float(x):
    return float(format(float(x), ".17g"))


def _rational_entries(obj):
    if isinstance(obj, (list, tuple, np.ndarray)):
        return all(_rational_entries(x) for x in obj)
    return isinstance(obj, (int, str, Fraction)) and not isinstance(obj, bool)


# -- vectors ------------------------------------------------------------------


def vector_json(v, n):
    return {"n": n, "coords": [frac_str(c) for c in v]}


def parse_vector(d):
    n = int(d["n"])
    coords = [parse_frac(c) for c in d["coords"]]
    if len(coords) != n + 2:
        raise DimensionMismatchError("expected n + 2 coordinates")
    return tuple(coords)


# -- Lie triples and subalgebras ------------------------------------------------


def triple_json(t):
    return {
        "a": frac_str(t.a),
        "A": [[frac_str(x) for x in row] for row in t.A],
        "X": [frac_str(x) for x in t.X],
    }


def parse_triple(d):
    return LieTriple(
        parse_frac(d["a"]),
        [[parse_frac(x) for x in row] for row in d["A"]],
        [parse_frac(x) for x in d["X"]],
    )


def subalgebra_json(g):
    return {"n": g.n, "generators": [triple_json(t) for t in g.basis]}


def parse_subalgebra(d):
    n = int(d["n"])
    gens = [parse_triple(t) for t in d["generators"]]
    for t in gens:
        if t.n != n:
            raise DimensionMismatchError("generator size does not match n")
    return lie_closure(gens)


# -- deciders -------------------------------------------------------------------


def certificate_json(cert):
    if cert is None:
        return None
    out = {"kind": cert.kind}
    if cert.kind == "fixed-point":
        out["base_point"] = [frac_str(x) for x in cert.base_point]
    elif cert.kind == "affine-subspace":
        out["linear_part"] = [[frac_str(x) for x in b] for b in cert.linear_part]
        out["base_point"] = [frac_str(x) for x in cert.base_point]
    elif cert.kind == "linear-subspace":
        out["basis"] = [[frac_str(x) for x in b] for b in cert.basis]
        out["degenerate"] = bool(cert.degenerate)
    return out


def verdict_json(v):
    return {
        "verdict": "WEAKLY_IRREDUCIBLE" if v.weakly_irreducible else "REDUCIBLE",
        "method": v.method,
        "trials": v.trials,
        "seed": v.seed,
        "certificate": certificate_json(v.certificate),
    }


def classification_json(c):
    def mats(ms):
        return [[[frac_str(x) for x in row] for row in m] for m in ms]

    return {
        "type": c.type_tag,
        "n": c.n,
        "B": mats(c.B),
        "B_prime": mats(c.B_prime),
        "zB": mats(c.z_B),
        "phi": [frac_str(v) for v in c.phi] if c.phi is not None else None,
        "psi": [[frac_str(x) for x in v] for v in c.psi] if c.psi is not None else None,
        "U": [[frac_str(x) for x in u] for u in c.U] or None,
        "W": [[frac_str(x) for x in w] for w in c.W] or None,
        "witnesses": {k: bool(v) if isinstance(v, bool) else v for k, v in sorted(c.witnesses.items())},
    }


# -- similarities and screw groups ----------------------------------------------


def sim_json(s):
    return {
        "lambda": _fmt_float(s.lam),
        "R": [[_fmt_float(x) for x in row] for row in np.asarray(s.R)],
        "t": [_fmt_float(x) for x in np.asarray(s.t)],
    }


def screw_json(s):
    if s.variant == "A_phi":
        return {"variant": "A_phi", "Z": [[frac_str(x) for x in row] for row in s.z]}
    return {
        "variant": "U_psi",
        "U": [[frac_str(x) for x in u] for u in s.u_basis],
        "Zs": [[[frac_str(x) for x in row] for row in z] for z in s.zs],
    }


# -- hyperbolic points and transport ---------------------------------------------


def hpoint_json(pt):
    return {
        "x": frac_str(pt.x),
        "alpha": [frac_str(a) for a in pt.alpha],
        "y": frac_str(pt.y),
    }


def parse_hpoint(d):
    from .hyperbolic import HPoint

    return HPoint(
        parse_frac(d["x"]), [parse_frac(a) for a in d["alpha"]], parse_frac(d["y"])
    )


def matrix_json(m):
    if isinstance(m, np.ndarray):
        return [[_fmt_float(x) for x in row] for row in m]
    return [[frac_str(x) for x in row] for row in m]


def parse_matrix(rows):
    """Rational matrix when every entry is exact, float ndarray otherwise."""
    if _rational_entries(rows):
        return tuple(tuple(parse_frac(x) for x in row) for row in rows)
    return np.asarray(
        [[float(Fraction(x)) if isinstance(x, str) else float(x) for x in row] for row in rows]
    )


def transport_json(res):
    out = {
        "exact": res.exact,
        "residual": _fmt_float(res.residual),
        "matrix": matrix_json(res.matrix),
        "factors": {
            "N": [frac_str(x) if not isinstance(x, float) else _fmt_float(x) for x in res.factors["N"]],
            "A": frac_str(res.factors["A"]),
            "screw": None,
        },
    }
    screw = res.factors.get("screw")
    if screw is not None:
        out["factors"]["screw"] = {
            "Z": [[frac_str(x) for x in row] for row in screw["Z"]],
            "a": frac_str(screw["a"]),
            "absorbed_by_H": bool(screw.get("absorbed_by_H", False)),
        }
    return out


# -- canonical output -------------------------------------------------------------


def _canon(obj):
    if isinstance(obj, dict):
        return {str(k): _canon(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canon(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (np.floating, float)):
        return _fmt_float(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


def canonical_dumps(report):
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(_canon(report), sort_keys=True, indent=2) + "\n"
