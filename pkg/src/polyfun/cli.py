"""Command-line interface.

Exit codes: 0 success (or verification passed), 1 verification failed,
2 parse or usage error, 3 budget exceeded.
"""
import argparse
import json
import sys

from . import numtheory
from .engine import (
    FunctionTable,
    compute_invariants,
    count_polyfunctions,
    represent,
    s_invariant,
    s_relative,
)
from .errors import BudgetError, PolyfunError
from .parsing import parse_function_table, parse_ring_spec
from .poly import is_null_polynomial, parse_polynomial
from .rings import build_ring, full_subring, prime_subring
from .verify import CHECKS, build_catalog

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write("error: %s\n" % message)
        sys.exit(EXIT_USAGE)


def _ring(text):
    return build_ring(parse_ring_spec(text))


def _subring(r, which):
    return prime_subring(r) if which == "prime" else full_subring(r)


def _indeterminate(r, var):
    if var:
        return var
    # the ring's own variable keeps the name x; the indeterminate moves to X
    return "X" if r.generator("x") is not None else "x"


def _emit(args, text, obj):
    if args.json:
        print(json.dumps(obj))
    else:
        print(text)


def cmd_invariants(args):
    rep = compute_invariants(_ring(args.ring), counts=args.count)
    if args.json:
        print(json.dumps(rep.as_json()))
    else:
        for k, v in rep.as_json().items():
            print("%-26s %s" % (k, str(v).lower() if isinstance(v, bool) else v))
    return EXIT_OK


def cmd_s(args):
    r = _ring(args.ring)
    s = s_invariant(r)
    _emit(args, str(s), {"ring": r.text, "s": s})
    return EXIT_OK


def cmd_s_relative(args):
    r = _ring(args.ring)
    s = s_relative(_subring(r, args.subring), r)
    _emit(args, str(s), {"ring": r.text, "subring": args.subring, "s": s})
    return EXIT_OK


def cmd_count(args):
    r = _ring(args.ring)
    n = count_polyfunctions(_subring(r, args.subring), r)
    _emit(args, str(n), {"ring": r.text, "subring": args.subring, "count": str(n)})
    return EXIT_OK


def cmd_represent(args):
    r = _ring(args.ring)
    f = FunctionTable(r, parse_function_table(args.function, r))
    p = represent(f, _subring(r, args.subring), r, args.max_deg)
    var = _indeterminate(r, args.var)
    text = "not representable" if p is None else p.text(var)
    _emit(args, text, {
        "ring": r.text,
        "representable": p is not None,
        "polynomial": None if p is None else p.text(var),
    })
    return EXIT_OK


def cmd_nullpoly(args):
    r = _ring(args.ring)
    var = _indeterminate(r, args.var)
    p = parse_polynomial(args.poly, r, var)
    null = is_null_polynomial(p)
    _emit(args, "null" if null else "not null",
          {"ring": r.text, "polynomial": p.text(var), "null": null})
    return EXIT_OK


def cmd_smarandache(args):
    s = numtheory.smarandache_nt(args.n)
    _emit(args, str(s), {"n": args.n, "s": s})
    return EXIT_OK


def cmd_psi(args):
    v = numtheory.psi(args.p, args.m)
    _emit(args, str(v), {"p": args.p, "m": args.m, "psi": str(v)})
    return EXIT_OK


def cmd_lambda(args):
    lam = numtheory.lambda_bound(args.n)
    endl = numtheory.endl_bound(args.n)
    obj = {
        "n": args.n,
        "lambda": lam.symbolic,
        "lambda_digits": lam.digits,
        "lambda_value": None if lam.value is None else str(lam.value),
        "endl_bound": None if endl.value is None else str(endl.value),
        "endl_symbolic": endl.symbolic,
    }
    if args.json:
        print(json.dumps(obj))
    else:
        shown = lam.value if lam.value is not None and lam.digits <= 80 else None
        print("Lambda = %s (%d digits)%s" % (lam.symbolic, lam.digits, "" if shown is None else " = %d" % shown))
        print("lcm(Lambda)+Lambda = %s" % (endl.value if endl.value is not None else "not evaluated: " + endl.symbolic))
    return EXIT_OK


def cmd_verify(args):
    rep = CHECKS[args.check](args)
    if args.json:
        print(json.dumps(rep.as_json()))
    else:
        print(rep.as_text())
    return EXIT_OK if rep.passed else EXIT_FAILED


def cmd_catalog(args):
    entries = build_catalog(args.max_order)
    if args.json:
        print(json.dumps([e.report.as_json() for e in entries]))
        return EXIT_OK
    print("%-28s %5s %5s %4s %4s %-6s %s" % ("ring", "order", "char", "s", "s'", "class", "count"))
    for e in entries:
        rep = e.report
        print("%-28s %5d %5d %4d %4d %-6s %d" % (
            rep.ring, rep.order, rep.characteristic, rep.s, rep.s_prime,
            rep.classification, rep.polyfunction_count))
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="polyfun", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", help="s, s', characteristic and class of a ring")
    p.add_argument("ring")
    p.add_argument("--count", action="store_true", help="also count polyfunctions")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("s", help="the Smarandache invariant s(R)")
    p.add_argument("ring")
    p.set_defaults(func=cmd_s)

    p = sub.add_parser("s-relative", help="s(S;R) for S the prime subring (default) or R")
    p.add_argument("ring")
    p.add_argument("--subring", choices=("prime", "full"), default="prime")
    p.set_defaults(func=cmd_s_relative)

    p = sub.add_parser("count", help="number of polyfunctions |G(S;R)|")
    p.add_argument("ring")
    p.add_argument("--subring", choices=("prime", "full"), default="full")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("represent", help="find a polynomial for a function table")
    p.add_argument("ring")
    p.add_argument("--function", required=True, help='"u:v,..." or a JSON object')
    p.add_argument("--subring", choices=("prime", "full"), default="full")
    p.add_argument("--max-deg", type=int, default=None)
    p.add_argument("--var", default=None, help="name of the polynomial indeterminate")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("nullpoly", help="test whether a polynomial vanishes on R")
    p.add_argument("ring")
    p.add_argument("--poly", required=True)
    p.add_argument("--var", default=None, help="name of the polynomial indeterminate")
    p.set_defaults(func=cmd_nullpoly)

    p = sub.add_parser("smarandache", help="least k with n | k!")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_smarandache)

    p = sub.add_parser("psi", help="number of polyfunctions over Z/p^m")
    p.add_argument("p", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("lambda", help="orbit bound and the derived bound on s(R';R)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("verify", help="run one verification check")
    p.add_argument("check", choices=sorted(CHECKS))
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="invariants of every catalog ring")
    p.add_argument("--max-order", type=int, required=True)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as exc:
        sys.stderr.write("budget exceeded: %s\n" % exc)
        return EXIT_BUDGET
    except (PolyfunError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % str(exc).splitlines()[0])
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
