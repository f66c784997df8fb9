"""Command-line front end: ``qfunctor <subcommand> [flags]``.

Exit codes: 0 on success, 1 when a verification suite has a failing claim,
2 for invalid flags (argparse usage errors and rejected values alike).
"""

import argparse
import json
import sys
from fractions import Fraction

from . import polyfunctor as pf
from . import qmatrix as qm
from . import schurweyl as sw
from .suites import SUITES, run_suite
from .ybspace import table_spectrum

FUNCTORS = {
    "tensor": pf.tensor_power,
    "sym": pf.sym_power,
    "ext": pf.ext_power,
    "div": pf.divided_power,
}


class UsageError(Exception):
    pass


def dumps(obj):
    """Canonical JSON: sorted keys, fixed indentation, UTF-8 text."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _coeff(x, qvalue):
    if not x:
        return "0"
    if qvalue is None:
        return str(x)
    return str(x.evaluate_at(qvalue))


def _word_str(word):
    return "*".join(str(v) for v in word) if word else "1"


# -- subcommands ------------------------------------------------------------------------


def cmd_spectrum(args):
    if args.n < 1 or args.d < 1:
        raise UsageError("--n and --d must be positive")
    if not args.square and args.d % 2:
        raise UsageError("without --square the degree --d must be even")
    if args.max_exp is not None and args.max_exp < 0:
        raise UsageError("--max-exp must be nonnegative")
    rep = table_spectrum(args.n, args.d, square=args.square, max_exp=args.max_exp)
    rows = []
    for e in rep.entries:
        row = {"eigenvalue": e.label(), "multiplicity": e.multiplicity}
        if args.qvalue is not None:
            row["value"] = str(e.value().evaluate_at(args.qvalue))
        rows.append(row)
    data = {
        "n": args.n,
        "d": args.d,
        "square": args.square,
        "dimension": rep.dim,
        "complete": rep.complete,
        "eigenvalues": rows,
    }
    lines = [f"{r['eigenvalue']}, {r['multiplicity']}" + (f", {r['value']}" if "value" in r else "") for r in rows]
    if not rep.complete:
        lines.append(f"# multiplicities sum to {rep.total()} of {rep.dim}; raise --max-exp")
    return data, lines, 0


def cmd_dims(args):
    if args.n < 1 or args.d < 0:
        raise UsageError("--n must be positive and --d nonnegative")
    if args.functor == "gamma":
        if args.m is None or args.m < 1:
            raise UsageError("--functor gamma needs a positive --m")
        F = pf.gamma(args.d, args.m)
    else:
        if args.m is not None:
            raise UsageError("--m only applies to --functor gamma")
        F = FUNCTORS[args.functor](args.d)
    dim = pf.dimension(F, args.n)
    data = {"functor": args.functor, "d": args.d, "n": args.n, "dimension": dim}
    if args.m is not None:
        data["m"] = args.m
    return data, [str(dim)], 0


def cmd_basis(args):
    if min(args.m, args.n) < 1 or args.d < 0:
        raise UsageError("--m and --n must be positive and --d nonnegative")
    words = qm.degree_basis(args.m, args.n, args.d)
    data = {
        "m": args.m,
        "n": args.n,
        "d": args.d,
        "dimension": len(words),
        "basis": [_word_str(w) for w in words],
    }
    return data, [_word_str(w) for w in words], 0


def cmd_intertwiners(args):
    if min(args.m, args.n, args.d) < 1:
        raise UsageError("--m, --n and --d must be positive")
    space = pf.intertwiner_space(args.m, args.n, args.d)
    data = {"m": args.m, "n": args.n, "d": args.d, "dimension": space.dim}
    lines = [str(space.dim)]
    if args.dump:
        mats = []
        for k, X in enumerate(space.basis):
            mats.append([[_coeff(x, args.qvalue) for x in row] for row in X.entries])
            lines.append(f"# basis element {k}")
            lines.extend("  ".join(row) for row in mats[-1])
        data["basis"] = mats
    return data, lines, 0


def parse_partition(text):
    try:
        parts = tuple(int(p) for p in text.split(","))
        return sw.validate_partition(parts)
    except ValueError:
        raise UsageError(f"--lambda {text!r} is not a comma-separated weakly decreasing list of positive integers")


def cmd_schur(args):
    lam = parse_partition(args.lam)
    if args.n < 1:
        raise UsageError("--n must be positive")
    S = sw.weyl_functor(lam, args.n) if args.weyl else sw.schur_functor(lam, args.n)
    vecs = [[_coeff(x, args.qvalue) for x in v] for v in S.image_basis]
    data = {
        "kind": S.kind,
        "lambda": list(lam),
        "n": args.n,
        "dimension": S.dim,
        "image_basis": vecs,
    }
    lines = [str(S.dim)] + ["[" + ", ".join(v) + "]" for v in vecs]
    return data, lines, 0


def cmd_det(args):
    if args.n < 1:
        raise UsageError("--n must be positive")
    e = qm.quantum_determinant(args.n)
    terms = [{"word": _word_str(w), "coeff": _coeff(c, args.qvalue)} for w, c in e.sorted_terms()]
    data = {"n": args.n, "terms": terms}
    if args.qvalue is None:
        data["normal_form"] = str(e)
        lines = [str(e)]
    else:
        lines = [f"{t['coeff']} {t['word']}" for t in terms]
    return data, lines, 0


def cmd_verify(args):
    for flag in ("max_n", "max_d"):
        v = getattr(args, flag)
        if v is not None and v < 1:
            raise UsageError(f"--{flag.replace('_', '-')} must be positive")
    checks = run_suite(args.suite, args.max_n, args.max_d)
    ok = all(c.passed for c in checks)
    data = {"suite": args.suite, "pass": ok, "checks": [c.as_dict() for c in checks]}
    lines = [c.line() for c in checks]
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} passed")
    return data, lines, 0 if ok else 1


# -- parser -----------------------------------------------------------------------------


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--out", metavar="FILE", help="also write the JSON result to FILE")
    common.add_argument("--qvalue", type=_rational, metavar="Q", help="specialise q to this nonzero rational")

    parser = argparse.ArgumentParser(prog="qfunctor", description="Exact computations with quantum polynomial functors.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues of a Yang-Baxter operator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--square", action="store_true", help="use the tensor square of V_n^⊗d")
    p.add_argument("--max-exp", type=int, dest="max_exp")
    p.set_defaults(run=cmd_spectrum)

    p = sub.add_parser("dims", parents=[common], help="dimension of a functor evaluated at n")
    p.add_argument("--functor", choices=(*FUNCTORS, "gamma"), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="second index of Γ^(d,m)")
    p.set_defaults(run=cmd_dims)

    p = sub.add_parser("basis", parents=[common], help="normal-form monomial basis of A_q(m,n)_d")
    for flag in ("--m", "--n", "--d"):
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(run=cmd_basis)

    p = sub.add_parser("intertwiners", parents=[common], help="intertwiners V_m^⊗d -> V_n^⊗d")
    for flag in ("--m", "--n", "--d"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--dump", action="store_true", help="print the basis matrices")
    p.set_defaults(run=cmd_intertwiners)

    p = sub.add_parser("schur", parents=[common], help="Schur or Weyl functor of a partition")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weyl", action="store_true")
    p.set_defaults(run=cmd_schur)

    p = sub.add_parser("det", parents=[common], help="quantum determinant in normal form")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(run=cmd_det)

    p = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--max-d", type=int, dest="max_d")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.qvalue == 0:
        parser.error("--qvalue must be nonzero")
    try:
        data, lines, code = args.run(args)
    except UsageError as exc:
        parser.error(str(exc))
    text = dumps(data)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    sys.stdout.write((text if args.format == "json" else "\n".join(lines)) + "\n")
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
