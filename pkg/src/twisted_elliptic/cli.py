"""Command line entry point: characters, expand, eval and verify."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import analytic
from .characters import character_by_name, enumerate_characters
from .qseries import EtaQuotientSpec, eisenstein_qexp, eta_quotient_expand, lambert_expand, qform_theta

DIGITS = 15


class UsageError(Exception):
    """Bad arguments that argparse cannot catch by itself."""


def _num(x: complex) -> str:
    x = complex(x)
    if x.imag == 0:
        return f"{x.real:.{DIGITS}g}"
    sign = "-" if x.imag < 0 else "+"
    return f"{x.real:.{DIGITS}g}{sign}{abs(x.imag):.{DIGITS}g}j"


def _complex_arg(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _character(name: str):
    try:
        return character_by_name(name)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from None


def _emit(payload: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_characters(args) -> int:
    if args.modulus < 1:
        raise UsageError("--modulus must be a positive integer")
    rows = []
    for idx, chi in enumerate(enumerate_characters(args.modulus)):
        rows.append(
            {
                "name": f"mod:{args.modulus}:{idx}",
                "order": chi.order,
                "parity": "even" if chi.is_even else "odd",
                "conductor": chi.conductor,
                "primitive": chi.is_primitive,
                "real": chi.is_real,
                "values": [str(chi.value(n)) for n in range(args.modulus)],
            }
        )
    lines = [f"{'name':12} {'order':>5} {'parity':6} {'cond':>4} {'prim':5} values"]
    for r in rows:
        vals = " ".join(r["values"]) if r["real"] else "(complex)"
        lines.append(f"{r['name']:12} {r['order']:>5} {r['parity']:6} {r['conductor']:>4} {str(r['primitive']):5} {vals}")
    lines.append(f"{len(rows)} characters mod {args.modulus}")
    _emit({"modulus": args.modulus, "count": len(rows), "characters": rows}, "\n".join(lines), args.format)
    return 0


def cmd_expand(args) -> int:
    T = args.order
    if T < 1:
        raise UsageError("--order must be positive")
    what = args.what
    if what == "eta":
        if not args.factors:
            raise UsageError("--what eta needs --factors, e.g. '1^5,5^-1'")
        try:
            spec = EtaQuotientSpec.parse(args.factors, args.q_power, args.scalar)
        except ValueError as exc:
            raise UsageError(f"bad eta quotient: {exc}") from None
        series = eta_quotient_expand(spec, T)
        label = str(spec)
    elif what == "lambert":
        chi = _character(args.chi or "kronecker:5")
        series = lambert_expand(chi, args.power, T)
        label = f"sum_(m,n) n^{args.power} chi(m) q^(mn), chi = {args.chi or 'kronecker:5'}"
    elif what == "eisenstein":
        chi = _character(args.chi or "kronecker:5")
        try:
            series = eisenstein_qexp(chi, args.weight, T)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        label = f"E_{args.weight}(tau, {args.chi or 'kronecker:5'}) without its constant term"
    else:
        try:
            form = tuple(int(x) for x in args.form.split(","))
        except ValueError:
            raise UsageError("--form must be 'a,b,c'") from None
        if len(form) != 3:
            raise UsageError("--form must be 'a,b,c'")
        try:
            series = qform_theta(form, T)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        label = f"theta series of {form}"
    payload = {"what": what, "label": label, "series": series.to_json()}
    text = label + "\n" + "\n".join(series.sparse()) + f"\nO(q^{series.order})"
    _emit(payload, text, args.format)
    return 0


def cmd_eval(args) -> int:
    z, tau = args.z, args.tau
    if tau.imag <= 0:
        raise UsageError("--tau must lie in the upper half plane")
    fn = args.fn
    if fn == "theta1":
        value = analytic.theta(1, z, tau)
    elif fn == "wp":
        value = analytic.weierstrass_p(z, tau)
    elif fn == "eta":
        value = analytic.dedekind_eta(tau)
    else:
        chi = _character(args.chi or "kronecker:5")
        if not chi.is_even:
            raise UsageError(f"{args.chi} is odd; g needs an even character")
        value = analytic.g_twisted(z, tau, chi) if fn == "g" else analytic.g_companion(z, tau, chi)
    payload = {
        "fn": fn,
        "z": [z.real, z.imag],
        "tau": [tau.real, tau.imag],
        "chi": args.chi if fn in ("g", "g-companion") else None,
        "value": [float(f"{value.real:.{DIGITS}g}"), float(f"{value.imag:.{DIGITS}g}")],
    }
    _emit(payload, _num(value), args.format)
    return 0


def cmd_verify(args) -> int:
    from .verify import VerifyConfig, run_suite

    if args.order is not None and args.order < 1:
        raise UsageError("--order must be positive")
    if args.samples < 0:
        raise UsageError("--samples must be nonnegative")
    config = VerifyConfig(order=args.order, samples=args.samples, seed=args.seed, tolerance=args.tolerance)
    result = run_suite(args.filter, config)
    payload = {"config": config.to_json(), **result.to_json(timing=not args.no_timing)}
    _emit(payload, result.table(), args.format)
    return result.exit_status


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="twisted-elliptic", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("characters", parents=[common], help="list the Dirichlet characters mod N")
    p.add_argument("--modulus", type=int, required=True)
    p.set_defaults(func=cmd_characters)

    p = sub.add_parser("expand", parents=[common], help="exact q-expansion")
    p.add_argument("--what", choices=("eta", "lambert", "eisenstein", "qform"), required=True)
    p.add_argument("--order", type=int, default=30, help="truncation order T")
    p.add_argument("--factors", help="eta quotient as 'a^e,...', e.g. '1^5,5^-1'")
    p.add_argument("--q-power", default="0", type=Fraction, help="leading power of q for eta quotients")
    p.add_argument("--scalar", default="1", type=Fraction)
    p.add_argument("--chi", help="character name, e.g. kronecker:8, psi10, mod:13:2")
    p.add_argument("--power", type=int, default=0, help="exponent l in the Lambert double sum")
    p.add_argument("--weight", type=int, default=4, help="even weight 2k of the Eisenstein series")
    p.add_argument("--form", default="1,0,1", help="binary quadratic form 'a,b,c'")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("eval", parents=[common], help="evaluate a function numerically")
    p.add_argument("--fn", choices=("theta1", "wp", "g", "g-companion", "eta"), required=True)
    p.add_argument("--z", type=_complex_arg, default=0j)
    p.add_argument("--tau", type=_complex_arg, required=True)
    p.add_argument("--chi", help="even character for g and g-companion")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common], help="run the identity catalog")
    p.add_argument("--filter", help="comma separated glob patterns on record ids")
    p.add_argument("--order", type=int, help="override the truncation order of exact records")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times so output is reproducible")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"{parser.prog}: evaluation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def run(argv: list[str] | None = None) -> int:
    """Like main, but converts argparse's SystemExit into a status."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
