"""Command line interface: ``abelicomp <command> ...`` or ``python -m abelicomp``."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import closed_forms, oracle, spectral, tables
from .bijections import check_bijection_prop5, check_s_independence
from .errors import AbelicompError, HypothesisViolated
from .finite_field import make_field
from .group_core import make_group
from .restriction import (
    build_class, carlitz_spec, check_condition2, cycle_gcd, is_strongly_connected,
    load_digraph, mullen_spec, product_spec, unrestricted_spec, window_sum_spec, UNKNOWN,
)
from .subset_waring import NotReached, diagonal_count, waring_number
from .transfer import count_all

CLASSES = ("mullen", "carlitz", "carlitz-weak", "window-sum", "product-ne-one", "unrestricted", "custom")


class UsageError(AbelicompError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text):
    return [int(x) for x in text.split(",") if x.strip() != ""]


def _resolve(args):
    """Return (group, spec or None, digraph, field or None) for class options."""
    field = None
    if args.cls == "custom":
        if not args.digraph:
            raise UsageError("--class custom needs --digraph FILE")
        with open(args.digraph) as fh:
            D = load_digraph(fh.read())
        return D.group, None, D, None
    if args.field:
        p, *rest = _ints(args.field)
        field = make_field(p, rest[0] if rest else 1)
        G = field.group
        if args.moduli and tuple(_ints(args.moduli)) != G.moduli:
            raise UsageError("--moduli contradicts --field")
    elif args.cls == "product-ne-one":
        raise UsageError("product-ne-one needs --field p[,n]")
    else:
        if not args.moduli:
            raise UsageError("--moduli is required")
        G = make_group(_ints(args.moduli))
    d = args.d
    if args.cls != "unrestricted" and d is None:
        raise UsageError(f"--class {args.cls} needs --d")
    if args.cls == "mullen":
        spec = mullen_spec(d)
    elif args.cls in ("carlitz", "carlitz-weak"):
        spec = carlitz_spec(d, weak=args.cls == "carlitz-weak" or args.weak,
                            first_d_nonzero=args.first_d_nonzero)
    elif args.cls == "window-sum":
        spec = window_sum_spec(d, weak=args.weak)
    elif args.cls == "product-ne-one":
        spec = product_spec(field, d)
    else:
        spec = unrestricted_spec(weak=args.weak)
    return G, spec, build_class(G, spec, args.span), field


def _closed_estimate(args, G, spec, b):
    n = G.order
    d = args.d
    if args.cls == "mullen":
        return closed_forms.theorem3_constants(n, d)
    if args.cls in ("carlitz", "carlitz-weak"):
        weak = args.cls == "carlitz-weak" or args.weak
        item = (3 if args.first_d_nonzero else 1) if weak else 2
        if args.first_d_nonzero and not weak:
            raise HypothesisViolated("no closed form for strict Carlitz with a first-block rule")
        return closed_forms.corollary2_constants(item, n, d, b)
    if args.cls == "window-sum" and args.weak:
        return closed_forms.corollary2_constants(4, n, d, b)
    if args.cls == "product-ne-one":
        return closed_forms.corollary2_constants(5, n, d, b)
    raise HypothesisViolated(f"no closed-form constants for class {args.cls}; use --source spectral")


def _add_class_options(p):
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    p.add_argument("--weak", action="store_true")
    p.add_argument("--first-d-nonzero", action="store_true")
    p.add_argument("--d", type=int)
    p.add_argument("--moduli")
    p.add_argument("--field", help="p or p,n")
    p.add_argument("--digraph")
    p.add_argument("--span", type=int)


def build_parser():
    parser = _Parser(prog="abelicomp", description="Exact and asymptotic counts of restricted "
                                                   "compositions over finite abelian groups.")
    parser.add_argument("--jobs", type=int, default=1)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count")
    _add_class_options(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s")
    p.add_argument("--all-s", action="store_true")

    p = sub.add_parser("table")
    p.add_argument("--preset", required=True, choices=sorted(tables.PRESETS))
    p.add_argument("--format", default="csv", choices=("csv", "json"))

    p = sub.add_parser("asymptotic")
    _add_class_options(p)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--source", default="closed", choices=("closed", "spectral"))

    p = sub.add_parser("verify")
    _add_class_options(p)
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--budget", type=int)

    p = sub.add_parser("bijection")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--moduli", required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("waring")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-m", type=int, default=64)

    p = sub.add_parser("diagonal")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--coeffs", required=True)
    p.add_argument("--exps", required=True)
    p.add_argument("--a", required=True)

    p = sub.add_parser("check-digraph")
    p.add_argument("file")
    p.add_argument("--l-max", type=int, default=4)
    return parser


def _verify_one(payload):
    G, spec, D, m, budget = payload
    exact = count_all(D, m)
    brute = oracle.brute_count_all(G, spec, m, budget)
    return m, exact, brute


def cmd_count(args, out):
    G, _, D, field = _resolve(args)
    vec = count_all(D, args.m)
    if args.all_s:
        out.write(json.dumps(vec.to_json()) + "\n")
        return 0
    if args.s is None:
        raise UsageError("give --s or --all-s")
    s = _ints(args.s)
    out.write(f"{vec[G.coerce(tuple(s))]}\n")
    return 0


def cmd_table(args, out):
    render = tables.render_csv if args.format == "csv" else tables.render_json
    out.write(render(args.preset))
    return 0


def cmd_asymptotic(args, out):
    G, spec, D, _ = _resolve(args)
    if args.source == "closed":
        if args.cls == "custom":
            raise HypothesisViolated("custom digraphs only have spectral constants")
        est = _closed_estimate(args, G, spec, args.b)
        out.write(json.dumps(est.to_json()) + "\n")
        return 0
    P = spectral.perron(D)
    est = spectral.asymptotic_constants(D, args.b, P)
    others = [spectral.asymptotic_constants(D, b, P) for b in range(D.span) if D.has_terminal(b)]
    if any(abs(o.A - est.A) > 1e-9 * est.A for o in others):
        sys.stderr.write("warning: A depends on the residue b of m modulo the span\n")
    data = est.to_json()
    data["perron"] = {"rho": P.rho, "iterations": P.iterations, "residual": P.residual}
    out.write(json.dumps(data) + "\n")
    return 0


def cmd_verify(args, out):
    G, spec, D, _ = _resolve(args)
    if spec is None:
        raise UsageError("verify needs a built-in class (the oracle enumerates its predicate)")
    jobs = [(G, spec, D, m, args.budget) for m in range(args.max_m + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]
    mismatches = []
    for m, exact, brute in results:
        if exact != brute:
            mismatches.append({"m": m, "transfer": [str(c) for c in exact.coeffs],
                               "oracle": [str(c) for c in brute.coeffs]})
    report = {"class": spec.name, "moduli": list(G.moduli), "max_m": args.max_m,
              "checked": len(results), "mismatches": mismatches}
    out.write(json.dumps(report) + "\n")
    return 1 if mismatches else 0


def cmd_bijection(args, out):
    G = make_group(_ints(args.moduli))
    report = {
        "prop5": check_bijection_prop5(G, args.d, args.m),
        "s_independence": check_s_independence(build_class(G, mullen_spec(args.d)), args.m,
                                                verify_maps=True),
    }
    out.write(json.dumps(report) + "\n")
    ok = report["prop5"]["bijection"] and report["s_independence"]["holds"]
    return 0 if ok else 1


def cmd_waring(args, out):
    F = make_field(args.p, args.n)
    g = waring_number(F, args.k, args.max_m)
    if isinstance(g, NotReached):
        out.write(json.dumps({"p": args.p, "n": args.n, "k": args.k, "not_reached": g.max_m}) + "\n")
        return 0
    out.write(json.dumps({"p": args.p, "n": args.n, "k": args.k, "waring_number": g}) + "\n")
    return 0


def _field_elem(F, text):
    vals = _ints(text)
    return F.element(vals[0] if F.n == 1 else tuple(vals))


def cmd_diagonal(args, out):
    F = make_field(args.p, args.n)
    if F.n == 1:
        coeffs = [F.element(c) for c in _ints(args.coeffs)]
    else:
        coeffs = [_field_elem(F, c) for c in args.coeffs.split(";")]
    exps = _ints(args.exps)
    value = diagonal_count(F, coeffs, exps, _field_elem(F, args.a))
    out.write(json.dumps({"p": args.p, "n": args.n, "count": str(value)}) + "\n")
    return 0


def cmd_check_digraph(args, out):
    with open(args.file) as fh:
        D = load_digraph(fh.read())
    w = check_condition2(D, args.l_max)
    report = {
        "recurrent": D.n_recurrent,
        "span": D.span,
        "strongly_connected": is_strongly_connected(D),
        "cycle_gcd": cycle_gcd(D),
        "condition2": UNKNOWN if w == UNKNOWN else [x.to_json(D) for x in w],
    }
    out.write(json.dumps(report) + "\n")
    return 0


COMMANDS = {
    "count": cmd_count, "table": cmd_table, "asymptotic": cmd_asymptotic, "verify": cmd_verify,
    "bijection": cmd_bijection, "waring": cmd_waring, "diagonal": cmd_diagonal,
    "check-digraph": cmd_check_digraph,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except AbelicompError as exc:
        sys.stderr.write(json.dumps({"error": exc.code, "message": str(exc)}) + "\n")
        return 2
    except OSError as exc:
        sys.stderr.write(json.dumps({"error": "io", "message": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
