"""Command-line interface.

Subcommands:
  expand   print a closed-form expansion of the p-th star power
  verify   run a named verification suite and report pass/fail
  pair     evaluate the split-reduction local pairing value
  hilbert  evaluate the degree-p tame symbol of two elements

Exit codes: 0 success, 1 a verification failed, 2 usage or validation error.
All output is deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .closed_forms import gamma_form, intermediate_form, rho_form
from .errors import AmbientMismatchError
from .local_pairing import TameFieldModel, hilbert, qk_split
from .render import (
    element_latex,
    expand_payload,
    hilbert_payload,
    pair_payload,
    poly_latex,
)
from .star_algebra import GammaAssignment, coboundary
from .suites import SUITE_NAMES, run_suites
from .torsion import basis, validate_odd_prime

SLOW_EXPANSION_PRIME = 7
MAX_EXPANSION_PRIME = 7


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tatestar",
        description="Exact expansions of twisted star powers and tame local pairing values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    expand = sub.add_parser("expand", help="expand the p-th star power in closed form")
    expand.add_argument("--p", type=int, required=True, help="odd prime, at most 7 here")
    expand.add_argument(
        "--form",
        choices=("gamma", "intermediate", "rho"),
        default="gamma",
        help="which expansion to print (default gamma)",
    )
    expand.add_argument("--latex", action="store_true", help="print LaTeX instead of JSON")
    expand.add_argument(
        "--allow-slow",
        action="store_true",
        help="permit the p=7 symbolic expansion (p^p-scale enumeration)",
    )
    expand.set_defaults(func=cmd_expand)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--p", type=int, required=True)
    verify.add_argument("--q", type=int, default=None, help="residue prime for the local suite")
    verify.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument(
        "--allow-slow", action="store_true", help="include the slow symbolic p=7 closed check"
    )
    verify.set_defaults(func=cmd_verify)

    pair = sub.add_parser("pair", help="evaluate the split-reduction pairing value")
    _add_model_flags(pair)
    pair.add_argument("--alpha-p", required=True, metavar="n:u", help="the element alpha_P")
    pair.add_argument("--alpha-q", required=True, metavar="n:u", help="the element alpha_Q")
    pair.set_defaults(func=cmd_pair)

    hil = sub.add_parser("hilbert", help="evaluate the degree-p tame symbol")
    _add_model_flags(hil)
    hil.add_argument("--a", required=True, metavar="n:u")
    hil.add_argument("--b", required=True, metavar="n:u")
    hil.set_defaults(func=cmd_hilbert)
    return parser


def _add_model_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument(
        "--q", type=int, default=None, help="residue prime, q = 1 mod p (default: smallest)"
    )
    sub.add_argument("--gen", type=int, default=None, help="primitive root mod q (default: smallest)")


def cmd_expand(args) -> int:
    p = validate_odd_prime(args.p)
    if p > MAX_EXPANSION_PRIME:
        raise ValueError(
            f"symbolic expansion at p={p} has p^p-scale terms; only p <= {MAX_EXPANSION_PRIME} "
            "is supported here (use `verify` for the larger primes)"
        )
    if p == SLOW_EXPANSION_PRIME and not args.allow_slow:
        raise ValueError("the p=7 expansion enumerates 7^7 tuples; pass --allow-slow to run it")
    P, Q = basis(p)
    gamma = GammaAssignment.symbolic(p)
    if args.form == "gamma":
        result = gamma_form(P, Q, gamma)
    elif args.form == "intermediate":
        result = intermediate_form(P, Q, gamma)
    else:
        result = rho_form(P, Q, coboundary(gamma))
    if args.latex:
        if args.form == "intermediate":
            print(element_latex(result.element))
        else:
            print(f"\\left({poly_latex(result.o_coefficient)}\\right) \\delta_{{O}}")
    else:
        print(json.dumps(expand_payload(p, args.form, result), indent=2))
    return 0


def cmd_verify(args) -> int:
    p = validate_odd_prime(args.p)
    outcomes = run_suites(args.suite, p, q=args.q, seed=args.seed, allow_slow=args.allow_slow)
    failures = 0
    for suite_name, check in outcomes:
        status = "ok" if check.ok else "FAIL"
        detail = f"  ({check.detail})" if check.detail else ""
        print(f"{status:4s} {suite_name}:{check.name}{detail}")
        failures += 0 if check.ok else 1
    total = len(outcomes)
    print(f"{total - failures}/{total} checks passed")
    return 0 if failures == 0 else 1


def _build_model(args) -> TameFieldModel:
    validate_odd_prime(args.p)
    return TameFieldModel.create(args.p, args.q, args.gen)


def cmd_pair(args) -> int:
    model = _build_model(args)
    alpha_p = model.parse(args.alpha_p)
    alpha_q = model.parse(args.alpha_q)
    value = qk_split(alpha_p, alpha_q)
    print(json.dumps(pair_payload(model, value), indent=2))
    return 0


def cmd_hilbert(args) -> int:
    model = _build_model(args)
    a = model.parse(args.a)
    b = model.parse(args.b)
    value = hilbert(a, b)
    print(json.dumps(hilbert_payload(model, value), indent=2))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
        sys.stdout.flush()
        return code
    except (ValueError, AmbientMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream consumer (e.g. head) closed the pipe; suppress the noise
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        try:
            sys.stdout.flush()
        except OSError:
            pass
        return 0


if __name__ == "__main__":
    sys.exit(main())
