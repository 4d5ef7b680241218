"""Command-line front end.

Subcommands: closure, check-wi, classify, boundary-act, transport, make,
selftest.  Inputs are JSON files (or inline JSON); outputs are canonical
JSON reports that embed the version, seed and budget, so identical inputs
produce byte-identical reports.

Exit codes: 0 success, 1 input or usage error, 2 a check-wi run that
returned REDUCIBLE (machine-distinguishable without parsing).
"""

import argparse
import json
import sys

from . import __version__
from .errors import LorsimError
from .hyperbolic import TransitiveGroupSpec, transport
from .invariance import find_invariant_V_subspace, is_weakly_irreducible
from .classify import classify
from .minkowski import MinkowskiSpace
from .sampling import make_instance
from .selftest import run_selftest
from .serialize import (
    canonical_dumps,
    certificate_json,
    classification_json,
    matrix_json,
    parse_frac,
    parse_hpoint,
    parse_matrix,
    parse_subalgebra,
    subalgebra_json,
    transport_json,
    triple_json,
    verdict_json,
)


class CLIError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError(message)


def build_parser():
    parser = _Parser(prog="lorsim", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", help="path to a JSON file, '-' for stdin, or inline JSON")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized deciders")
        p.add_argument("--budget", type=int, default=64, help="trial budget for randomized deciders")
        p.add_argument("--tol", type=float, default=1e-9, help="float-path tolerance")
        p.add_argument("--output", help="write the report here instead of stdout")

    for name in ("closure", "check-wi", "classify", "boundary-act", "transport"):
        common(sub.add_parser(name))

    make_p = sub.add_parser("make")
    common(make_p)
    make_p.add_argument("--type", type=int, required=True, choices=(1, 2, 3, 4))
    make_p.add_argument("--B", default="so2", help="catalog name: zero, so2, so3, so2so2, son")
    make_p.add_argument("--n", type=int, required=True)

    self_p = sub.add_parser("selftest")
    common(self_p)
    return parser


def _load_input(args):
    if not args.input:
        raise CLIError("this command needs --input")
    raw = None
    text = args.input
    if text == "-":
        raw = sys.stdin.read()
    elif text.lstrip().startswith("{"):
        raw = text
    else:
        try:
            with open(text) as fh:
                raw = fh.read()
        except OSError as exc:
            raise CLIError("cannot read input: %s" % exc)
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CLIError("malformed JSON input: %s" % exc)


def _base_report(args):
    return {
        "command": args.command,
        "version": __version__,
        "seed": args.seed,
        "budget": args.budget,
    }


def run(args):
    """Execute one job; returns (report_dict, exit_code)."""
    report = _base_report(args)
    if args.command == "closure":
        g = parse_subalgebra(_load_input(args))
        report.update(
            {"n": g.n, "dim": g.dim, "basis": [triple_json(t) for t in g.basis]}
        )
        return report, 0

    if args.command == "check-wi":
        g = parse_subalgebra(_load_input(args))
        verdict = is_weakly_irreducible(g, seed=args.seed, budget=args.budget)
        report.update(verdict_json(verdict))
        return report, 0 if verdict.weakly_irreducible else 2

    if args.command == "classify":
        g = parse_subalgebra(_load_input(args))
        report.update(classification_json(classify(g)))
        return report, 0

    if args.command == "boundary-act":
        data = _load_input(args)
        try:
            n = int(data["n"])
            gmat = parse_matrix(data["matrix"])
            y = data["Y"]
        except (KeyError, TypeError, ValueError) as exc:
            raise CLIError("bad boundary-act input: %s" % exc)
        space = MinkowskiSpace(n)
        from .simgroup import boundary_action
        import numpy as np

        exact = not isinstance(gmat, np.ndarray)
        yvec = [parse_frac(c) for c in y] if exact else np.asarray(
            [float(c) for c in y]
        )
        image = boundary_action(space, gmat, yvec)
        report.update(
            {
                "n": n,
                "exact": exact,
                "image": [str(c) for c in image] if exact else [float(c) for c in image],
            }
        )
        return report, 0

    if args.command == "transport":
        data = _load_input(args)
        try:
            n = int(data["n"])
            v = parse_hpoint(data["v"])
            w = parse_hpoint(data["w"])
            spec_data = data["spec"]
            spec = TransitiveGroupSpec(
                variant=spec_data["variant"],
                n=n,
                h_basis=tuple(
                    tuple(tuple(parse_frac(x) for x in row) for row in h)
                    for h in spec_data.get("H", [])
                ),
                z=(
                    tuple(tuple(parse_frac(x) for x in row) for row in spec_data["Z"])
                    if spec_data.get("Z") is not None
                    else None
                ),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CLIError("bad transport input: %s" % exc)
        space = MinkowskiSpace(n)
        res = transport(space, v, w, spec)
        report.update({"n": n, "variant": spec.variant})
        report.update(transport_json(res))
        return report, 0

    if args.command == "make":
        try:
            g, meta = make_instance(args.type, args.B, args.n, seed=args.seed)
        except ValueError as exc:
            raise CLIError(str(exc))
        report.update(subalgebra_json(g))
        report["meta"] = meta
        return report, 0

    if args.command == "selftest":
        checks = run_selftest(seed=args.seed, budget=min(args.budget, 24))
        passed = all(c["ok"] for c in checks)
        report.update({"passed": passed, "checks": checks})
        return report, 0 if passed else 1

    raise CLIError("unknown command %r" % (args.command,))


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report, code = run(args)
    except CLIError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    except LorsimError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    text = canonical_dumps(report)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
