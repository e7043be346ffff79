"""Command-line front end.

Every subcommand prints one JSON envelope to stdout:
``{schema_version, command, params, results, provenance}``.  Exact
rationals are serialized as "num/den" strings so nothing passes through
floating point; genuinely floating quantities are JSON numbers.  Exit
codes: 0 success, 2 usage or validation error, 3 verification tolerance
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import analysis, distributions, fock, ncl, randmat, transforms
from .errors import FreeBetaError
from .verification import run_all

SCHEMA_VERSION = "1.0"


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _fmt(value):
    """Serialize rationals as 'num/den'; pass floats/ints/strings through."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    if isinstance(value, dict):
        return {k: _fmt(v) for k, v in value.items()}
    return value


_FAMILY_PARAMS = {
    "fp": ("lam",),
    "ifp": ("b",),
    "fbp": ("a", "b"),
    "ff": ("a", "b"),
    "ft": ("m",),
    "fb": ("a", "b"),
    "meixner": ("theta", "tau"),
}

_FAMILY_TYPES = {
    "fp": distributions.FreePoisson,
    "ifp": distributions.InverseFreePoisson,
    "fbp": distributions.FreeBetaPrime,
    "ff": distributions.FreeF,
    "ft": distributions.FreeT,
    "fb": distributions.FreeBeta,
    "meixner": distributions.FreeMeixnerStd,
}


def _add_family_flags(p: argparse.ArgumentParser, families) -> None:
    p.add_argument("--family", required=True, choices=families)
    p.add_argument("--a", type=_rat)
    p.add_argument("--b", type=_rat)
    p.add_argument("--lam", type=_rat)
    p.add_argument("--m", type=_rat)
    p.add_argument("--theta", type=float)
    p.add_argument("--tau", type=float)


def _build_family(args):
    names = _FAMILY_PARAMS[args.family]
    values = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise FreeBetaError(
                f"family {args.family} requires --{name}"
            )
        values.append(v)
    return _FAMILY_TYPES[args.family](*values), dict(zip(names, values))


def _emit(command: str, params: dict, results, provenance,
          fmt: str = "json", rows=None, header=None) -> None:
    if fmt == "csv":
        if rows is None:
            raise FreeBetaError(f"{command} has no CSV payload")
        print(",".join(header))
        for row in rows:
            print(",".join(str(c) for c in row))
        return
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": _fmt(params),
        "results": _fmt(results),
        "provenance": list(provenance),
    }
    print(json.dumps(envelope))


# --------------------------------------------------------------------------
# Subcommands
# --------------------------------------------------------------------------

def _cmd_moments(args) -> int:
    fam, params = _build_family(args)
    n = args.n
    routes = ([args.route] if args.route != "all"
              else ["ncl", "series", "fock", "transform"])
    if args.route != "series" and args.family != "fbp":
        raise FreeBetaError(
            "routes other than 'series' are defined for --family fbp"
        )
    table = []
    for k in range(1, n + 1):
        row = {"n": k}
        values = {}
        if "ncl" in routes:
            values["ncl"] = ncl.fbp_moment(fam.a, fam.b, k)
        if "series" in routes:
            values["series"] = distributions.moment_series(fam, n)[k]
        if "fock" in routes:
            vac = fock.vacuum_moments(fock.fbp_operator(fam.a, fam.b, n), n)
            values["fock"] = vac[k]
        if "transform" in routes:
            ma = distributions.moment_series(
                distributions.FreePoisson(fam.a), n)
            mb = distributions.moment_series(
                distributions.InverseFreePoisson(fam.b), n)
            values["transform"] = transforms.free_mult_convolve(ma, mb)[k]
        row.update(values)
        if len(values) > 1:
            row["agree"] = len(set(values.values())) == 1
        table.append(row)
    _emit("moments", {**params, "n": n, "route": args.route},
          {"moments": table}, routes, fmt=args.format,
          rows=[[r["n"]] + [_fmt(r[k]) for k in routes] for r in table],
          header=["n"] + routes)
    return 0


def _cmd_density(args) -> int:
    fam, params = _build_family(args)
    spec = distributions.measure_of(fam)
    lo, hi = spec.support
    if args.grid:
        glo, ghi, count = args.grid.split(":")
        glo, ghi, count = float(glo), float(ghi), int(count)
    else:
        glo, ghi, count = lo, hi, 201
    xs = [glo + (ghi - glo) * k / (count - 1) for k in range(count)]
    rows = [(x, spec.density(x)) for x in xs]
    _emit("density", {**params, "grid": f"{glo}:{ghi}:{count}"},
          {"support": list(spec.support),
           "atoms": [list(a) for a in spec.atoms],
           "grid": [{"x": x, "density": d} for x, d in rows]},
          ["closed-form"], fmt=args.format, rows=rows,
          header=["x", "density"])
    return 0


def _cmd_support(args) -> int:
    fam, params = _build_family(args)
    spec = distributions.measure_of(fam)
    _emit("support", params,
          {"lo": spec.support[0], "hi": spec.support[1],
           "atoms": [{"location": a, "mass": m} for a, m in spec.atoms]},
          ["closed-form"], fmt=args.format)
    return 0


def _fmt_partition(p: ncl.LinkedPartition) -> str:
    return "|".join(",".join(str(x) for x in block) for block in p.blocks)


def _cmd_enumerate_ncl(args) -> int:
    parts = ncl.enumerate_ncl(args.n)
    results = {"n": args.n, "count": len(parts)}
    if args.list:
        results["partitions"] = [_fmt_partition(p) for p in parts]
    _emit("enumerate-ncl", {"n": args.n}, results, ["path-expansion"],
          fmt=args.format)
    return 0


def _cmd_ncl_stats(args) -> int:
    blocks = tuple(
        tuple(int(x) for x in block.split(","))
        for block in args.partition.split("|")
    )
    n = args.n or max(max(b) for b in blocks)
    p = ncl.LinkedPartition(n, blocks)
    valid = ncl.validate_ncl(p)
    results = {"n": n, "valid": valid}
    if valid:
        st = ncl.statistics(p)
        t1, t2 = ncl.doubly_covered_types(p)
        results.update(
            dc=st.dc, sc=st.sc, sg=st.sg,
            type_one=list(t1), type_two=list(t2),
        )
    _emit("ncl-stats", {"partition": args.partition, "n": n}, results,
          ["statistics"], fmt=args.format)
    return 0


def _cmd_gamma_gf(args) -> int:
    routes = ([args.route] if args.route != "all"
              else ["brute", "cf", "closed"])
    table = []
    for k in range(1, args.n + 1):
        row = {"n": k}
        for route in routes:
            row[route] = ncl.gamma_poly(k, args.alpha, args.beta,
                                        args.gamma, route=route)
        if len(routes) > 1:
            row["agree"] = len({row[r] for r in routes}) == 1
        table.append(row)
    _emit("gamma-gf",
          {"n": args.n, "alpha": args.alpha, "beta": args.beta,
           "gamma": args.gamma, "route": args.route},
          {"values": table}, routes, fmt=args.format,
          rows=[[r["n"]] + [_fmt(r[k]) for k in routes] for r in table],
          header=["n"] + routes)
    return 0


def _cmd_t_coeffs(args) -> int:
    fam = distributions.FreeBetaPrime(args.a, args.b)
    coeffs = distributions.t_coeffs_of(fam, args.order)
    s, t, u = ncl.fbp_t_params(args.a, args.b)
    _emit("t-coeffs", {"a": args.a, "b": args.b, "order": args.order},
          {"alphas": list(coeffs.alphas), "s": s, "t": t, "u": u},
          ["closed-form"], fmt=args.format)
    return 0


def _cmd_meixner(args) -> int:
    std = distributions.standardize_to_meixner(args.a, args.b)
    label = distributions.classify_meixner(std.theta, float(std.tau))
    _emit("meixner", {"a": args.a, "b": args.b},
          {"theta": std.theta, "tau": std.tau,
           "theta_sq": std.theta_sq, "discriminant": std.discriminant,
           "mean": std.mean, "variance": std.variance, "class": label},
          ["standardization"], fmt=args.format)
    return 0


def _cmd_score_check(args) -> int:
    fam, params = _build_family(args)
    lo, hi = distributions.support_of(fam)
    k = args.points
    worst = 0.0
    rows = []
    for i in range(1, k + 1):
        x = lo + (hi - lo) * i / (k + 1)
        score = analysis.hilbert_score(fam, x)
        vprime = analysis.potential_derivative(fam, x)
        rows.append((x, score, vprime, abs(score - vprime)))
        worst = max(worst, abs(score - vprime))
    _emit("score-check", {**params, "points": k},
          {"max_abs_deviation": worst,
           "grid": [{"x": x, "score": s, "v_prime": v, "deviation": d}
                    for x, s, v, d in rows]},
          ["epsilon-ladder", "closed-form"], fmt=args.format, rows=rows,
          header=["x", "score", "v_prime", "deviation"])
    return 0


def _cmd_mc_fisher(args) -> int:
    cfg = randmat.FisherSampleConfig(
        p=args.p, a=float(args.a), b=float(args.b), seed=args.seed
    )
    eigs = randmat.sample_fisher_spectrum(cfg)
    fam = distributions.FreeF(args.a, args.b)
    ks = randmat.ks_distance(eigs, fam)
    rows = randmat.histogram_rows(eigs, fam, bins=args.bins)
    _emit("mc-fisher",
          {"p": args.p, "a": args.a, "b": args.b, "seed": args.seed,
           "bins": args.bins},
          {"n1": cfg.n1, "n2": cfg.n2, "ks_distance": ks,
           "histogram": [
               {"bin_left": l, "bin_right": r, "empirical_density": e,
                "theoretical_density": t} for l, r, e, t in rows]},
          ["monte-carlo", "closed-form"], fmt=args.format, rows=rows,
          header=["bin_left", "bin_right", "empirical_density",
                  "theoretical_density"])
    return 0


def _cmd_verify(args) -> int:
    results = []
    failed = None
    for name, ok, detail in run_all(fail_fast=True):
        results.append({"criterion": name, "ok": ok, "detail": detail})
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}",
              file=sys.stderr)
        if not ok:
            failed = name
    _emit("verify", {}, {"criteria": results, "ok": failed is None},
          ["all-routes"], fmt=args.format)
    return 0 if failed is None else 3


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freebeta",
        description="Free beta prime computations by independent routes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.set_defaults(fn=fn)
        return p

    p = add("moments", _cmd_moments, help="moments by one or all routes")
    _add_family_flags(p, ("fp", "ifp", "fbp", "ff", "ft", "fb"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", default="all",
                   choices=("ncl", "series", "fock", "transform", "all"))

    p = add("density", _cmd_density, help="density grid of a family")
    _add_family_flags(p, tuple(_FAMILY_PARAMS))
    p.add_argument("--grid", help="lo:hi:count (default: the support)")

    p = add("support", _cmd_support, help="support endpoints and atoms")
    _add_family_flags(p, tuple(_FAMILY_PARAMS))

    p = add("enumerate-ncl", _cmd_enumerate_ncl,
            help="enumerate linked partitions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true")

    p = add("ncl-stats", _cmd_ncl_stats,
            help="validate a partition and compute (dc, sc, sg)")
    p.add_argument("--partition", required=True,
                   help='blocks as "1,2,7|2,4|3|..."')
    p.add_argument("--n", type=int)

    p = add("gamma-gf", _cmd_gamma_gf,
            help="the statistics generating polynomial by route")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_rat, required=True)
    p.add_argument("--beta", type=_rat, required=True)
    p.add_argument("--gamma", type=_rat, required=True)
    p.add_argument("--route", default="all",
                   choices=("brute", "cf", "closed", "all"))

    p = add("t-coeffs", _cmd_t_coeffs,
            help="T-transform coefficients of the free beta prime")
    p.add_argument("--a", type=_rat, required=True)
    p.add_argument("--b", type=_rat, required=True)
    p.add_argument("--order", type=int, default=8)

    p = add("meixner", _cmd_meixner, help="standardization and class label")
    p.add_argument("--a", type=_rat, required=True)
    p.add_argument("--b", type=_rat, required=True)

    p = add("score-check", _cmd_score_check,
            help="score function vs potential derivative")
    _add_family_flags(p, ("fbp", "ft", "fb"))
    p.add_argument("--points", type=int, default=20)

    p = add("mc-fisher", _cmd_mc_fisher,
            help="Fisher-matrix spectrum vs the free F law")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", type=_rat, required=True)
    p.add_argument("--b", type=_rat, required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--bins", type=int, default=40)

    add("verify", _cmd_verify, help="run the full verification suite")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (FreeBetaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
