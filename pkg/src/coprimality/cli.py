"""Command-line front end (``coprimality ...``).

Exit codes: 0 success / all checks passed, 1 a verification failed or a
probe row is unresolved, 2 usage or parse error.  Data goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import golomb, oracle, perset, primefam, topology
from .arith import INT64_MAX
from .expr import ExprError, evaluate_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit_json(obj):
    print(json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False))


def _table(rows, headers):
    widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h)) for i, h in enumerate(headers)]
    line = "  ".join(str(h).ljust(w) for h, w in zip(headers, widths))
    print(line.rstrip())
    print("  ".join("-" * w for w in widths))
    for r in rows:
        print("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip())


def cmd_eval(args):
    s = evaluate_text(args.expr)
    members = s.enumerate(args.members)
    if args.json:
        _emit_json({"set": s.to_json(), "render": s.render(), "members": members, "density": str(s.natural_density())})
    else:
        print(s.render())
        print(f"first {len(members)}: {', '.join(map(str, members))}")
        print(f"natural density: {s.natural_density()}")
    return EXIT_OK


def cmd_classify(args):
    s = evaluate_text(args.expr)
    report = topology.classify(s)
    if args.json:
        _emit_json({"set": s.to_json(), **report.to_json()})
        return EXIT_OK
    print(", ".join(report.flags()))
    _table(
        [
            ("set", s.render()),
            ("open", report.is_open),
            ("closed", report.is_closed),
            ("dense", report.is_dense),
            ("nowhere dense", report.is_nowhere_dense),
            ("closure", report.closure.render()),
            ("interior", report.interior.render()),
            ("boundary", report.boundary.render()),
        ],
        ("property", "value"),
    )
    return EXIT_OK


_OPERATORS = {"closure": topology.closure, "interior": topology.interior, "boundary": topology.boundary}


def cmd_operator(args):
    result = _OPERATORS[args.command](evaluate_text(args.expr))
    if args.json:
        _emit_json(result.to_json())
    else:
        print(result.render())
    return EXIT_OK


def cmd_sigma(args):
    if args.n < 1:
        raise ExprError("N must be a positive integer")
    s = topology.sigma(args.n)
    if args.json:
        out = {"n": args.n, "set": s.to_json()}
        if args.decompose:
            out["progressions"] = [{"first": a, "step": b} for a, b in topology.sigma_decomposition(args.n)]
        _emit_json(out)
        return EXIT_OK
    print(s.render())
    if args.decompose:
        for a, b in topology.sigma_decomposition(args.n):
            print(f"{a} + {b}*N0")
    return EXIT_OK


def _family(spec: str, family_file):
    spec = spec.strip()
    named = {
        "primes": primefam.ALL_PRIMES,
        "all": primefam.ALL_PRIMES,
        "all_primes": primefam.ALL_PRIMES,
        "mersenne": primefam.MERSENNE,
        "fermat": primefam.FERMAT,
        "twin": primefam.TWIN,
    }
    if spec in named:
        return named[spec]
    if spec == "custom":
        if not family_file:
            raise primefam.FamilyError("custom family needs --family-file")
        return primefam.load_family_file(family_file)
    for prefix in ("ap(", "progression("):
        if spec.startswith(prefix) and spec.endswith(")"):
            try:
                a, b = (int(t) for t in spec[len(prefix) : -1].split(","))
            except ValueError:
                break
            return primefam.progression(a, b)
    raise primefam.FamilyError(f"unknown family {spec!r} (primes, mersenne, fermat, twin, custom, ap(a,b))")


def cmd_probe(args):
    if args.family_file and args.family != "custom":
        kind = primefam.load_family_file(args.family_file)
    else:
        kind = _family(args.family, args.family_file)
    if args.nmax < 2:
        raise ExprError("--nmax must be >= 2")
    table = primefam.density_probe(kind, args.nmax, args.bound)
    if args.json:
        _emit_json(table.to_json())
    else:
        print(f"family: {table.family}")
        _table([(r.n, r.witness if r.witness is not None else "unresolved", r.bound) for r in table.rows], ("n", "witness", "bound"))
    if not table.resolved:
        print(f"unresolved rows at bound {args.bound}: {table.unresolved()}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_next_prime(args):
    text = args.primes.strip()
    try:
        known = [int(t) for t in text.split(",") if t.strip()] if text else []
    except ValueError:
        raise ExprError(f"expected comma-separated integers, got {args.primes!r}") from None
    print(primefam.next_new_prime(known))
    return EXIT_OK


def cmd_golomb(args):
    report = golomb.coarseness_demo(args.nmax)
    if args.json:
        _emit_json(report.to_json())
    else:
        _table(
            [
                ("sigma(n) checked up to", report.checked_sigma_max),
                ("all sigma(n) Golomb-open", report.all_sigma_golomb_open),
                ("witness", report.witness.render()),
                ("witness Golomb-open", report.witness_is_golomb_open),
                ("witness tau-open", report.witness_is_tau_open),
                ("tau strictly coarser", report.strict),
            ],
            ("property", "value"),
        )
    return EXIT_OK if report.strict else EXIT_FAIL


def _oracle_spot_checks():
    witness = golomb.golomb_basic(1, 4)
    return [
        ("closure M(6)", oracle.oracle_closure_check(perset.multiples(6), 100)),
        ("closure {12}", oracle.oracle_closure_check(perset.make_explicit({12}), 100)),
        ("closure sigma(2)", oracle.oracle_closure_check(topology.sigma(2), 50)),
        ("open ap(1,4)", oracle.oracle_open_check(witness, 5, 10**4)),
        ("open sigma(6)", oracle.oracle_open_check(topology.sigma(6), 20, 10**4)),
        ("golomb sigma(4)", oracle.oracle_golomb_check(topology.sigma(4), 10, 5000)),
        ("golomb M(2)", oracle.oracle_golomb_check(perset.multiples(2), 5, 5000)),
    ]


def cmd_verify(args):
    report = primefam.verify_paper_chain(args.level)
    spot = _oracle_spot_checks()
    passed = report.passed and all(v.agrees for _, v in spot)
    if args.json:
        data = report.to_json()
        data["oracle"] = [{"case": name, **v.to_json()} for name, v in spot]
        data["passed"] = passed
        _emit_json(data)
    else:
        for c in report.checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name:<24} {c.statement}  [{c.detail}]")
        for name, v in spot:
            print(f"{'PASS' if v.agrees else 'FAIL'}  oracle {name:<17} {len(v.discrepancies)} discrepancies")
        print("all checks passed" if passed else "verification FAILED")
    return EXIT_OK if passed else EXIT_FAIL


def build_parser():
    p = _Parser(prog="coprimality", description="Exact computations in the coprimality topology on N.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate a set expression")
    e.add_argument("expr")
    e.add_argument("--members", type=int, default=10, metavar="K")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("classify", help="open/closed/dense/nowhere-dense report")
    c.add_argument("expr")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    for name in _OPERATORS:
        o = sub.add_parser(name, help=f"{name} of a set expression")
        o.add_argument("expr")
        o.add_argument("--json", action="store_true")
        o.set_defaults(func=cmd_operator)

    s = sub.add_parser("sigma", help="basic open set sigma(N)")
    s.add_argument("n", type=int, metavar="N")
    s.add_argument("--decompose", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sigma)

    pr = sub.add_parser("probe", help="density probe of a prime family")
    pr.add_argument("family", metavar="FAMILY")
    pr.add_argument("--nmax", type=int, required=True)
    pr.add_argument("--bound", type=int, default=INT64_MAX)
    pr.add_argument("--family-file", metavar="PATH")
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(func=cmd_probe)

    n = sub.add_parser("next-prime", help="smallest prime coprime to a product of primes")
    n.add_argument("primes", metavar='"p1,p2,..."')
    n.set_defaults(func=cmd_next_prime)

    g = sub.add_parser("golomb-compare", help="strict coarseness against Golomb's topology")
    g.add_argument("--nmax", type=int, default=200)
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_golomb)

    v = sub.add_parser("verify", help="run the bounded checks of the density argument")
    v.add_argument("--level", choices=("quick", "full"), default="quick")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ExprError, primefam.FamilyError, ValueError, TypeError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
