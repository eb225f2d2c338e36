"""Command-line interface.

Subcommands: expand, apply, inner, constants, verify.  Output is UTF-8
JSON, one object per line; identical invocations produce byte-identical
output.  Exit codes: 0 success, 1 verification failure, 2 usage or parse
error.
"""

import argparse
import sys
import time

from .exprs import ExprError, eval_expr, parse_expr
from .groth import G_truncated, c_coeff, d_coeff, schur_to_g
from .operators import apply_operator, tilde_c, tilde_d
from .partitions import parse_partition, size
from .schur import SymFunc, TruncSeries, hall, lr_coeff
from .serialize import g_expansion_json, series_json, symfunc_json, to_text
from .suites import SUITES, iter_cases
from .tpoly import T, parse_t_value


def _emit(obj):
    sys.stdout.write(to_text(obj) + "\n")
    sys.stdout.flush()


def _parse_part_arg(text, name):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise ExprError("bad %s: %s" % (name, exc))


def cmd_expand(args):
    node = parse_expr(args.expr)
    value = eval_expr(node, cap=args.cap)
    if args.to == "s":
        if isinstance(value, TruncSeries):
            _emit(series_json(value))
        else:
            _emit(symfunc_json(value))
        return 0
    if isinstance(value, TruncSeries):
        raise ExprError("a truncated series has no finite g expansion; "
                        "expand --to s instead")
    _emit(g_expansion_json(schur_to_g(value)))
    return 0


def cmd_apply(args):
    node = parse_expr(args.expr)
    value = eval_expr(node)
    if not isinstance(value, SymFunc):
        raise ExprError("operators act on polynomial expressions only")
    t_param = parse_t_value(args.t) if args.t is not None else None
    mu = _parse_part_arg(args.mu, "--mu") if args.mu is not None else None
    result = apply_operator(args.op, value, t_param=t_param, mu=mu)
    if args.to == "s":
        _emit(symfunc_json(result))
    else:
        _emit(g_expansion_json(schur_to_g(result)))
    return 0


def cmd_inner(args):
    node = parse_expr(args.expr)
    value = eval_expr(node)
    if not isinstance(value, SymFunc):
        raise ExprError("the pairing takes a polynomial expression")
    deg = value.degree()
    if args.series in ("H", "E"):
        t_param = parse_t_value(args.t) if args.t is not None else T
        from .schur import E_series, H_series
        series = (H_series if args.series == "H" else E_series)(deg, t_param)
        result = hall(series, value)
    else:
        if args.la is None:
            raise ExprError("--series G needs --lambda")
        la = _parse_part_arg(args.la, "--lambda")
        result = hall(G_truncated(la, max(deg, size(la))), value)
    _emit({"value": result.text()})
    return 0


def cmd_constants(args):
    la = _parse_part_arg(args.la, "--lambda")
    mu = _parse_part_arg(args.mu, "--mu")
    nu = _parse_part_arg(args.nu, "--nu")
    fams = {"lr": lr_coeff, "c": c_coeff, "d": d_coeff,
            "ctilde": tilde_c, "dtilde": tilde_d}
    value = fams[args.family](la, mu, nu)
    _emit({"family": args.family, "lambda": list(la), "mu": list(mu),
           "nu": list(nu), "value": value})
    return 0


def cmd_verify(args):
    if args.list:
        for name in sorted(SUITES):
            spec = SUITES[name]
            _emit({"suite": name, "default_max_size": spec.default_max_size,
                   "description": spec.description})
        return 0
    if args.suite is None:
        raise ExprError("verify needs --suite NAME or --list")
    if args.suite not in SUITES:
        raise ExprError("unknown suite %r; try verify --list" % args.suite)
    start = time.monotonic()
    failures = 0
    count = 0
    if args.jobs > 1:
        from .suites import run_suite
        results = run_suite(args.suite, args.max_size, args.seed, jobs=args.jobs)
        for cid, ok, lhs, rhs in results:
            count += 1
            record = {"suite": args.suite, "case": cid,
                      "status": "pass" if ok else "fail"}
            if not ok:
                failures += 1
                record["lhs"] = lhs
                record["rhs"] = rhs
            _emit(record)
    else:
        for cid, thunk in iter_cases(args.suite, args.max_size, args.seed):
            ok, lhs, rhs = thunk()
            count += 1
            record = {"suite": args.suite, "case": cid,
                      "status": "pass" if ok else "fail"}
            if not ok:
                failures += 1
                record["lhs"] = lhs
                record["rhs"] = rhs
            _emit(record)
    bound = (SUITES[args.suite].default_max_size
             if args.max_size is None else args.max_size)
    from .suites import DEFAULT_SEED
    _emit({"suite": args.suite, "max_size": bound,
           "seed": DEFAULT_SEED if args.seed is None else args.seed,
           "cases": count, "failures": failures,
           "seconds": round(time.monotonic() - start, 3)})
    return 1 if failures else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dualgroth",
        description="Exact computations in the dual stable Grothendieck basis "
                    "of the ring of symmetric functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand an expression in a basis")
    p.add_argument("--to", choices=("s", "g"), required=True)
    p.add_argument("--cap", type=int, default=None,
                   help="degree cap, required when G atoms occur")
    p.add_argument("expr")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("apply", help="apply an operator to an expression")
    p.add_argument("--op", choices=("I", "Iinv", "Hperp", "Eperp", "Gperp"),
                   required=True)
    p.add_argument("--t", default=None, help="integer or the literal t")
    p.add_argument("--mu", default=None, help="partition argument for Gperp")
    p.add_argument("--to", choices=("s", "g"), default="g")
    p.add_argument("expr")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("inner", help="Hall pairing against a named series")
    p.add_argument("--series", choices=("H", "E", "G"), required=True)
    p.add_argument("--t", default=None, help="integer or the literal t")
    p.add_argument("--lambda", dest="la", default=None,
                   help="partition indexing the G series")
    p.add_argument("expr")
    p.set_defaults(func=cmd_inner)

    p = sub.add_parser("constants", help="structure-constant queries")
    p.add_argument("--family", choices=("lr", "c", "d", "ctilde", "dtilde"),
                   required=True)
    p.add_argument("--lambda", dest="la", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", default=None)
    p.add_argument("--list", action="store_true")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1,
                   help="run independent cases in a thread pool")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ExprError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
