"""Command-line surface: exact, machine-readable output for every module.

Exit codes: 2 for argument/usage errors, 1 for violated mathematical
hypotheses (e.g. a prime not exceeding the modulus), 0 on success.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import padic, quadratic, specialcase, survey
from .arith import normalize_params
from .density import bounded_residues, density, record
from .errors import HypothesisError


def _fraction(text: str) -> Fraction:
    try:
        f = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} ({e})")
    return f


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hgdensity",
        description="Exact densities of p-adically bounded primes for 2F1 series",
    )
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("density", help="exact density of bounded primes")
    p.add_argument("a", type=_fraction)
    p.add_argument("b", type=_fraction)
    p.add_argument("c", type=_fraction)
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("residues", help="the bounded residue classes mod m")
    p.add_argument("a", type=_fraction)
    p.add_argument("b", type=_fraction)
    p.add_argument("c", type=_fraction)

    p = sub.add_parser("digits", help="p-adic digits of a-1 and their limits")
    p.add_argument("a", type=_fraction)
    p.add_argument("p", type=int)
    p.add_argument("--full-period", action="store_true")

    p = sub.add_parser("bounded", help="per-prime boundedness verdict")
    p.add_argument("a", type=_fraction)
    p.add_argument("b", type=_fraction)
    p.add_argument("c", type=_fraction)
    p.add_argument("p", type=int)
    p.add_argument("--empirical", type=int, metavar="N", default=None)

    p = sub.add_parser("sweep", help="density statistics up to a height bound")
    p.add_argument("N", type=int)
    p.add_argument("--out", default=None)
    p.add_argument("--drop-zero", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--beta", type=_fraction, default=None, metavar="EPS")
    p.add_argument("--dry-run", action="store_true",
                   help="stratified index-space walk only, no densities")
    p.add_argument("--stride", type=int, default=100)
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--force-large", action="store_true",
                   help="allow full sweeps above height 24 (hours of CPU)")

    p = sub.add_parser("quad", help="quadratic-residue machinery")
    qsub = p.add_subparsers(dest="qcmd", required=True)
    q = qsub.add_parser("class-number")
    q.add_argument("p", type=int)
    q = qsub.add_parser("nonresidue")
    q.add_argument("p", type=int)
    q = qsub.add_parser("uset")
    q.add_argument("x", type=int)
    q.add_argument("p", type=int)
    q = qsub.add_parser("wset")
    q.add_argument("x", type=int)
    q.add_argument("p", type=int)
    q = qsub.add_parser("intersect")
    q.add_argument("u", type=int)
    q.add_argument("v", type=int)
    q.add_argument("p", type=int)
    q = qsub.add_parser("interval-sum")
    q.add_argument("x", type=int)
    q.add_argument("p", type=int)

    p = sub.add_parser("special", help="shape table for primes 2*q^r + 1")
    p.add_argument("p", type=int)
    p.add_argument("--max-density", action="store_true")
    return top


def _cmd_density(args) -> int:
    params = normalize_params(args.a, args.b, args.c)
    if args.as_json:
        print(record(params).to_json())
    else:
        print(density(params))
    return 0


def _cmd_residues(args) -> int:
    params = normalize_params(args.a, args.b, args.c)
    rs = bounded_residues(params)
    print(json.dumps({"m": rs.modulus, "residues": list(rs.members)}))
    return 0


def _cmd_digits(args) -> int:
    a = args.a
    if not (0 < a < 1):
        raise HypothesisError(f"a={a} must lie in (0, 1)")
    exp = padic.padic_digits(a - 1, args.p)
    shown = exp.digits if args.full_period else exp.digits[:5]
    d = a.denominator
    u = args.p % d
    out = {
        "p": args.p,
        "value": str(exp.value),
        "period": exp.period,
        "digits": list(shown),
        "normalized": [f"{dig / args.p:.4f}" for dig in shown],
        "limits": [
            str(padic.normalized_digit_limit(a, u, j)) for j in range(len(shown))
        ],
    }
    if args.full_period:
        out["reconstructs"] = exp.reconstruct() == exp.value
    print(json.dumps(out))
    return 0


def _cmd_bounded(args) -> int:
    params = normalize_params(args.a, args.b, args.c)
    verdict = padic.digit_bounded(params, args.p)
    out = {"digit": verdict.kind.value, "witness": verdict.witness}
    if args.empirical is not None:
        emp = padic.empirical_bounded(params, args.p, args.empirical)
        out["empirical"] = emp.kind.value
        out["empirical_witness"] = emp.witness
    print(json.dumps(out))
    return 0


def _cmd_sweep(args) -> int:
    if args.dry_run:
        report = survey.slice_dry_run(
            args.N, stride=args.stride, checkpoint=args.checkpoint,
            progress=survey.print_progress,
        )
        sys.stderr.write("\n")
        print(json.dumps({
            "N": report.N, "stride": report.stride,
            "sampled": report.sampled, "valid": report.valid,
            "completed": report.completed,
        }))
        return 0
    if args.N > 24 and not args.force_large:
        raise HypothesisError(
            f"a full sweep at height {args.N} takes hours; pass --force-large"
        )
    stream = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        if args.beta is not None:
            b = survey.beta(args.beta, args.N, workers=args.threads)
            survey.beta_csv([(args.beta, args.N, b)], stream)
        else:
            hist = survey.density_histogram(
                args.N, workers=args.threads, drop_zero=args.drop_zero
            )
            survey.histogram_csv(hist, stream)
    finally:
        if args.out:
            stream.close()
    return 0


def _cmd_quad(args) -> int:
    if args.qcmd == "class-number":
        cn = quadratic.class_number(args.p)
        print(json.dumps({"p": cn.p, "h": cn.h}))
    elif args.qcmd == "nonresidue":
        print(quadratic.least_nonresidue(args.p))
    elif args.qcmd == "uset":
        print(json.dumps(list(quadratic.u_set(args.x, args.p).members)))
    elif args.qcmd == "wset":
        print(json.dumps(list(quadratic.w_set(args.x, args.p).members)))
    elif args.qcmd == "intersect":
        ok, witness = quadratic.w_intersection_nonempty(args.u, args.v, args.p)
        print(json.dumps({"nonempty": ok, "witness": witness}))
    elif args.qcmd == "interval-sum":
        val = quadratic.legendre_interval_sum(args.x, args.p)
        print(json.dumps({"sum": val, "h": quadratic.class_number(args.p).h}))
    return 0


def _cmd_special(args) -> int:
    sp = specialcase.parse_special_prime(args.p)
    if sp is None:
        raise HypothesisError(f"{args.p} is not a prime of the form 2*q^r + 1")
    out = {
        "p": sp.p,
        "q": sp.q,
        "r": sp.r,
        "shapes": specialcase.shape_table_json(sp),
    }
    if args.max_density:
        d, witness = specialcase.max_density_over_params(sp)
        out["max_density"] = str(d)
        out["witness"] = list(witness)
    print(json.dumps(out))
    return 0


_DISPATCH = {
    "density": _cmd_density,
    "residues": _cmd_residues,
    "digits": _cmd_digits,
    "bounded": _cmd_bounded,
    "sweep": _cmd_sweep,
    "quad": _cmd_quad,
    "special": _cmd_special,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.cmd](args)
    except HypothesisError as e:
        print(f"hypothesis violated: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"invalid arguments: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
