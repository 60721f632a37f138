"""Command-line front end.

Every subcommand reads parameter JSON from a file (``-`` for stdin) and
writes JSON to stdout, except ``sample`` which writes CSV.  Domain errors
exit with status 2 and an error document on stderr; unreadable input exits
with status 1.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import arithmetic, core, heyde, measure, oracle
from .errors import ThetaError
from .serialize import (
    dumps,
    factorization_to_dict,
    heyde_config_from_dict,
    params_from_dict,
    params_to_dict,
)


class InputError(Exception):
    pass


def _load(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _params(path: str) -> core.ThetaParams:
    data = _load(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    return params_from_dict(data)


def _tol(args) -> core.Tolerance:
    return core.Tolerance(rtol=args.tol)


def _param_error(p: core.ThetaParams, q: core.ThetaParams) -> float:
    return max(abs(x - y) for x, y in zip(p.as_tuple(), q.as_tuple()))


def cmd_classify(args):
    p = _params(args.params)
    tol = _tol(args)
    c = core.classify(p, tol)
    out = {"class": c.value, "params": params_to_dict(core.canonicalize(p))}
    bounded = 0.0 < p.sigma_prime < p.sigma
    out["boundary_bound"] = core.boundary_bound(p) if bounded else None
    if c.is_valid:
        out["infinitely_divisible"] = arithmetic.is_infinitely_divisible(p, tol)
        out["indecomposable"] = arithmetic.is_indecomposable(p, tol)
        out["has_indecomposable_factor"] = arithmetic.has_indecomposable_factor(p, tol)
    return out


def cmd_convolve(args):
    tol = _tol(args)
    result = core.convolve(_params(args.params), _params(args.other), tol)
    return {"params": params_to_dict(result), "class": core.classify(result, tol).value}


def cmd_charfn(args):
    p = _params(args.params)
    values = core.char_fn(p, args.s, args.l, _tol(args))
    return {
        "l": args.l,
        "values": [{"s": s, "re": v.real, "im": v.imag} for s, v in zip(args.s, values.tolist())],
    }


def cmd_density(args):
    p = _params(args.params)
    values = measure.density(p, args.t, args.k, _tol(args))
    return {"k": args.k, "values": [{"t": t, "density": v} for t, v in zip(args.t, values.tolist())]}


def cmd_sample(args):
    samples = measure.sample(_params(args.params), args.n, args.seed, _tol(args))
    return samples.to_csv()


def cmd_decompose(args):
    p = _params(args.params)
    tol = _tol(args)
    if args.mode == "gauss":
        fac = arithmetic.max_gaussian_factor(p, tol)
    elif args.mode == "chain":
        fac = arithmetic.factor_chain(p, args.n, tol)
    else:
        fac = arithmetic.lambda_pi_decomposition(p, tol)
    out = factorization_to_dict(fac)
    if args.verify:
        checks = [
            oracle.verify_indecomposability_search(f, args.trials, args.seed, tol).to_dict()
            for f in fac.factors
        ]
        error = _param_error(fac.reconvolve(), p)
        out["verification"] = {
            "reconvolution_max_abs_error": error,
            "factor_checks": checks,
            "verdict": "consistent"
            if error <= 1e-9 and all(c["verdict"] == "consistent" for c in checks)
            else "inconsistent",
        }
    return out


def cmd_root(args):
    root, shift = arithmetic.nth_root(_params(args.params), args.n, _tol(args))
    return {"n": args.n, "root": params_to_dict(root), "shift": {"t": shift.t, "k": shift.k}}


def cmd_verify(args):
    p = _params(args.params)
    tol = _tol(args)
    if args.check == "grid":
        report = oracle.verify_measure_grid(p, args.grid, tol, check_mass=True)
    elif args.check == "convolution":
        if args.other is None:
            raise InputError("convolution check needs a second parameter file")
        report = oracle.verify_convolution_mc(p, _params(args.other), args.n, args.seed)
    else:
        report = oracle.verify_indecomposability_search(p, args.trials, args.seed, tol)
    return report.to_dict()


def cmd_heyde(args):
    data = _load(args.config)
    try:
        cfg = heyde_config_from_dict(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed Heyde config: {exc}") from exc
    grid = heyde.default_grid(cfg, args.points)
    return {
        "defect": heyde.symmetry_defect(cfg, grid),
        "hypothesis_ok": cfg.hypothesis_ok,
        "hypothesis_ok_with_diagonal": cfg.hypothesis_ok_with_diagonal,
        "nonvanishing": cfg.nonvanishing,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="theta-semigroup", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--tol", type=float, default=1e-9, help="relative boundary tolerance")
        sp.set_defaults(func=func)
        return sp

    sp = add("classify", cmd_classify, "classify a parameter tuple")
    sp.add_argument("params")

    sp = add("convolve", cmd_convolve, "convolve two tuples")
    sp.add_argument("params")
    sp.add_argument("other")

    sp = add("charfn", cmd_charfn, "evaluate the characteristic function")
    sp.add_argument("params")
    sp.add_argument("--s", type=float, nargs="+", required=True)
    sp.add_argument("--l", type=int, choices=(0, 1), default=0)

    sp = add("density", cmd_density, "evaluate a coset density")
    sp.add_argument("params")
    sp.add_argument("--t", type=float, nargs="+", required=True)
    sp.add_argument("--k", type=int, choices=(0, 1), default=0)

    sp = add("sample", cmd_sample, "draw samples as CSV")
    sp.add_argument("params")
    sp.add_argument("--n", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("decompose", cmd_decompose, "factorize an interior tuple")
    sp.add_argument("params")
    sp.add_argument("--mode", choices=("gauss", "chain", "lambda-pi"), default="gauss")
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=1000)

    sp = add("root", cmd_root, "n-th root of an infinitely divisible tuple")
    sp.add_argument("params")
    sp.add_argument("--n", type=int, required=True)

    sp = add("verify", cmd_verify, "run an oracle check")
    sp.add_argument("params")
    sp.add_argument("other", nargs="?")
    sp.add_argument("--check", choices=("grid", "convolution", "indecomposable"), default="grid")
    sp.add_argument("--grid", type=int, default=4096)
    sp.add_argument("--n", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=10_000)

    sp = add("heyde", cmd_heyde, "symmetry defect of a Heyde configuration")
    sp.add_argument("config")
    sp.add_argument("--points", type=int, default=17)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except InputError as exc:
        sys.stderr.write(dumps({"error": "input_error", "message": str(exc)}) + "\n")
        return 1
    except ThetaError as exc:
        sys.stderr.write(dumps({"error": exc.code, "message": str(exc)}) + "\n")
        return 2
    sys.stdout.write(result if isinstance(result, str) else dumps(result) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
