"""Command-line front end.

Examples::

    pq bracket 3 --p 2 --q 1
    pq bracket 2.5 --p 2 --q 1 --json
    pq derive "0,0,1" --p 2 --q 1
    pq derive "pqpow(a=1, n=3)" --k 2 --p 2 --q 1/2
    pq taylor "0,0,1" 1 --p 2 --q 1/2
    pq integrate poly:0,1 0 1 --p 1 --q 1/2
    pq integrate recip 0 1 --p 2 --q 1
    pq integrate powneg:3 1 --to-inf --p 1 --q 1/2
    pq identities --seed 0 --trials 50
    pq identities --only heine

Exit codes: 0 success, 1 identity-suite failure, 2 usage or parse error.
Rationals are written as "num/den" or "int" everywhere, on input and in
JSON output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

from .errors import PqError
from .identities import CHECKS, run_suite
from .integration import (
    TruncationPolicy,
    integral,
    integral_improper,
    integral_to_infinity,
)
from .polynomials import NumericFn, Polynomial, pq_derive_poly_k
from .pqpower import derive_pq_power_iterated, format_power_expr, parse_power_expr
from .scalars import PqParams, bracket, bracket_alpha, rat, rat_str
from .taylor import taylor_expand, taylor_expand_reversed


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", default="1", metavar="RAT", help="parameter p (default 1)")
    parser.add_argument("--q", default="1/2", metavar="RAT", help="parameter q (default 1/2)")
    parser.add_argument("--json", action="store_true", help="machine-readable JSON output")


def _add_policy(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-terms", type=int, default=10_000, metavar="N")
    parser.add_argument("--tail-tol", type=float, default=1e-12, metavar="EPS")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pq",
        description="Exact and numeric (p,q)-calculus: brackets, derivatives, "
        "power-basis expansions and lattice integrals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bracket = sub.add_parser("bracket", help="twin-basic number [n], or [alpha] for real alpha")
    p_bracket.add_argument("n", help="integer for the exact bracket, real for the float one")
    _add_common(p_bracket)

    p_derive = sub.add_parser("derive", help="(p,q)-derivative of a polynomial or power expression")
    p_derive.add_argument("expr", help='polynomial "c0,c1,..." or "pqpow(a=…, n=…[, gamma=…])"')
    p_derive.add_argument("--k", type=int, default=1, help="apply the derivative k times")
    _add_common(p_derive)

    p_taylor = sub.add_parser("taylor", help="expansion over the (p,q)-power basis at a")
    p_taylor.add_argument("poly", help='polynomial "c0,c1,..."')
    p_taylor.add_argument("a", help="expansion point (rational)")
    p_taylor.add_argument("--reversed", action="store_true", help="use the (a-x) basis")
    _add_common(p_taylor)

    p_int = sub.add_parser("integrate", help="(p,q)-integral of a named function")
    p_int.add_argument("fn", help='"poly:c0,c1,...", "recip", "log" or "powneg:r"')
    p_int.add_argument("a", nargs="?", help="lower bound (omit with --improper)")
    p_int.add_argument("b", nargs="?", help="upper bound (omit with --improper/--to-inf)")
    mode = p_int.add_mutually_exclusive_group()
    mode.add_argument("--improper", action="store_true", help="integrate over [0, infinity)")
    mode.add_argument("--to-inf", action="store_true", help="integrate over [a, infinity)")
    _add_common(p_int)
    _add_policy(p_int)

    p_ident = sub.add_parser("identities", help="run the seeded identity suite")
    p_ident.add_argument("--seed", type=int, default=0)
    p_ident.add_argument("--trials", type=int, default=50)
    p_ident.add_argument(
        "--only",
        action="append",
        metavar="LABEL",
        help="run only matching checks (prefix match; repeatable)",
    )
    p_ident.add_argument(
        "--self-test-fail",
        action="store_true",
        help="inject a deliberately failing check to validate reporting",
    )
    p_ident.add_argument("--json", action="store_true", help="machine-readable JSON output")
    return parser


def _params(args: argparse.Namespace) -> PqParams:
    return PqParams(rat(args.p), rat(args.q))


def _emit(args: argparse.Namespace, payload: dict, human: str) -> None:
    print(json.dumps(payload) if args.json else human)


def cmd_bracket(args: argparse.Namespace) -> int:
    params = _params(args)
    try:
        n = int(args.n)
    except ValueError:
        n = None
    if n is not None:
        value = bracket(n, params)
        _emit(args, {"value": rat_str(value)}, rat_str(value))
    else:
        value = bracket_alpha(float(args.n), params).value
        _emit(args, {"value": value}, repr(value))
    return 0


def cmd_derive(args: argparse.Namespace) -> int:
    params = _params(args)
    if args.k < 0:
        raise ValueError(f"--k must be >= 0, got {args.k}")
    if args.expr.lstrip().startswith("pqpow"):
        expr = parse_power_expr(args.expr, params)
        coeff, residual = derive_pq_power_iterated(expr, args.k)
        text = format_power_expr(residual)
        _emit(
            args,
            {"coeff": rat_str(coeff), "expr": text},
            f"{rat_str(coeff)} * {text}",
        )
    else:
        result = pq_derive_poly_k(Polynomial.from_string(args.expr), args.k, params)
        _emit(args, {"poly": result.to_string()}, result.to_string())
    return 0


def cmd_taylor(args: argparse.Namespace) -> int:
    params = _params(args)
    f = Polynomial.from_string(args.poly)
    a = rat(args.a)
    expand = taylor_expand_reversed if args.reversed else taylor_expand
    expansion = expand(f, a, params)
    payload = expansion.to_json_dict()
    payload["exact"] = expansion.to_polynomial(params) == f
    print(json.dumps(payload) if args.json else json.dumps(payload, indent=2))
    return 0


def _parse_fn_spec(spec: str) -> NumericFn:
    if spec.startswith("poly:"):
        return NumericFn.from_polynomial(Polynomial.from_string(spec[len("poly:"):]))
    if spec == "recip":
        return NumericFn(lambda x: 1.0 / x)
    if spec == "log":
        return NumericFn(lambda x: math.log(x))
    if spec.startswith("powneg:"):
        text = spec[len("powneg:"):]
        try:
            r = float(rat(text))
        except (ValueError, ZeroDivisionError, TypeError):
            r = float(text)
        return NumericFn(lambda x: x**-r)
    raise ValueError(f"unknown function spec {spec!r} (use poly:…, recip, log, powneg:r)")


def cmd_integrate(args: argparse.Namespace) -> int:
    params = _params(args)
    policy = TruncationPolicy(max_terms=args.max_terms, tail_tol=args.tail_tol)
    f = _parse_fn_spec(args.fn)
    if args.improper:
        result = integral_improper(f, params, policy)
    elif args.to_inf:
        if args.a is None:
            raise ValueError("--to-inf needs the lower bound a")
        result = integral_to_infinity(f, float(rat(args.a)), params, policy)
    else:
        if args.a is None or args.b is None:
            raise ValueError("need both bounds a and b (or --improper / --to-inf)")
        result = integral(f, float(rat(args.a)), float(rat(args.b)), params, policy)
    payload = result.to_json_dict()
    human = (
        f"value={result.value:.12g} status={result.status.value} "
        f"terms={result.terms_used} tail={result.tail_estimate:.3g} regime={result.regime.value}"
    )
    _emit(args, payload, human)
    return 0


def _select_labels(queries: Optional[list[str]]) -> Optional[list[str]]:
    if not queries:
        return None
    selected = []
    for query in queries:
        matches = [name for name in CHECKS if name == query or name.startswith(query + "-")]
        if not matches:
            raise ValueError(
                f"no identity label matches {query!r}; known labels: {', '.join(CHECKS)}"
            )
        selected.extend(m for m in matches if m not in selected)
    return selected


def cmd_identities(args: argparse.Namespace) -> int:
    labels = _select_labels(args.only)
    results = run_suite(
        seed=args.seed,
        trials=args.trials,
        only=labels,
        include_forced_failure=args.self_test_fail,
    )
    passed = all(r.passed for r in results)
    if args.json:
        print(
            json.dumps(
                {
                    "seed": args.seed,
                    "trials": args.trials,
                    "passed": passed,
                    "results": [
                        {
                            "label": r.label,
                            "trials": r.trials,
                            "failures": r.failures,
                            "passed": r.passed,
                            "notes": list(r.notes),
                        }
                        for r in results
                    ],
                }
            )
        )
    else:
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            print(f"{r.label:28s} {r.trials:6d} trials {r.failures:5d} failures  {mark}")
            for note in r.notes:
                print(f"    {note}")
        total = sum(r.trials for r in results)
        print(f"overall: {'PASS' if passed else 'FAIL'} ({len(results)} checks, {total} trials)")
    return 0 if passed else 1


_COMMANDS = {
    "bracket": cmd_bracket,
    "derive": cmd_derive,
    "taylor": cmd_taylor,
    "integrate": cmd_integrate,
    "identities": cmd_identities,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (PqError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
