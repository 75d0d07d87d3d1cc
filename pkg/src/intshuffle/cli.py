"""Command-line front end.

Exit codes: 0 for success / a check that holds, 1 for a check that fails,
2 for usage, parse, or input errors.  `--json` switches the output to a
versioned JSON schema; `--seed` feeds the randomized `props` command.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .conditions import (
    IdealCertificate,
    corollary_check,
    ideal_certificate,
    verify_ideal_certificate,
    wheel_check,
)
from .errors import ArityMismatch, ArityTooSmall, ExprSyntaxError
from .expr import as_element, eval_text
from .generators import (
    ModuleCertificate,
    reduce2,
    reduce3,
    verify_certificate,
    verify_lemma,
)
from .poly import render
from .shuffle import ShuffleElement, one_variable, shuffle, shuffle_word


def _parse_word_arg(text: str) -> tuple[int, ...]:
    body = text.strip()
    if body.startswith("sh["):
        body = body[2:]
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return ()
    try:
        return tuple(int(piece) for piece in body.split(","))
    except ValueError:
        raise ValueError(f"not a word: {text!r} (expected e.g. '[1,0,2]')") from None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_expand(args) -> int:
    value = eval_text(args.expr)
    if isinstance(value, ShuffleElement):
        payload = {"schema": 1, "kind": "element", "arity": value.arity,
                   "poly": render(value.poly)}
        _emit(args, payload, render(value.poly))
    else:
        payload = {"schema": 1, "kind": "scalar", "poly": render(value)}
        _emit(args, payload, render(value))
    return 0


def _cmd_wheel(args) -> int:
    element = as_element(eval_text(args.expr))
    holds = wheel_check(element)
    _emit(args, {"schema": 1, "holds": holds}, "true" if holds else "false")
    return 0 if holds else 1


def _cmd_corollary(args) -> int:
    element = as_element(eval_text(args.expr))
    holds, cofactor = corollary_check(element)
    payload = {"schema": 1, "holds": holds,
               "cofactor": render(cofactor) if holds else None}
    _emit(args, payload, render(cofactor) if holds else "not divisible")
    return 0 if holds else 1


def _cmd_lemma(args) -> int:
    word = _parse_word_arg(args.word)
    holds = verify_lemma(word, args.n, args.relation)
    _emit(args, {"schema": 1, "holds": holds}, "true" if holds else "false")
    return 0 if holds else 1


def _module_cert_text(cert: ModuleCertificate) -> str:
    lines = [f"target: {cert.target}"]
    for cofactor, word in cert.sorted().combination:
        lines.append(f"  ({render(cofactor)}) * {word}")
    return "\n".join(lines)


def _cmd_reduce(args, reducer) -> int:
    cert = reducer(_parse_word_arg(args.word)).sorted()
    verified = verify_certificate(cert) if args.verify else None
    if args.json:
        payload = json.loads(cert.to_json())
        if verified is not None:
            payload["verified"] = verified
        print(json.dumps(payload, indent=2))
    else:
        print(_module_cert_text(cert))
        if verified is not None:
            print(f"verified: {'true' if verified else 'false'}")
    return 1 if verified is False else 0


def _cmd_ideal_cert(args) -> int:
    cert = ideal_certificate(_parse_word_arg(args.word))
    verified = verify_ideal_certificate(cert) if args.verify else None
    if args.json:
        payload = json.loads(cert.to_json())
        if verified is not None:
            payload["verified"] = verified
        print(json.dumps(payload, indent=2))
    else:
        print(f"target: {cert.target}")
        print(f"A: {render(cert.A)}")
        print(f"B: {render(cert.B)}")
        if verified is not None:
            print(f"verified: {'true' if verified else 'false'}")
    return 1 if verified is False else 0


def _cmd_assoc(args) -> int:
    za, zb, zc = (one_variable(d) for d in (args.a, args.b, args.c))
    left = shuffle(shuffle(za, zb), zc)
    right = shuffle(za, shuffle(zb, zc))
    holds = left.poly == right.poly
    _emit(args, {"schema": 1, "holds": holds}, "true" if holds else "false")
    return 0 if holds else 1


def _cmd_verify_cert(args) -> int:
    with open(args.file, "r", encoding="utf-8") as handle:
        cert = ModuleCertificate.from_json(handle.read())
    holds = verify_certificate(cert)
    _emit(args, {"schema": 1, "holds": holds}, "true" if holds else "false")
    return 0 if holds else 1


def _cmd_verify_ideal_cert(args) -> int:
    with open(args.file, "r", encoding="utf-8") as handle:
        cert = IdealCertificate.from_json(handle.read())
    holds = verify_ideal_certificate(cert)
    _emit(args, {"schema": 1, "holds": holds}, "true" if holds else "false")
    return 0 if holds else 1


def _cmd_props(args) -> int:
    rng = random.Random(args.seed)
    checks: list[tuple[str, bool]] = []
    for _ in range(args.trials):
        a, b, c = (rng.randint(-2, 2) for _ in range(3))
        za, zb, zc = one_variable(a), one_variable(b), one_variable(c)
        ok = shuffle(shuffle(za, zb), zc).poly == shuffle(za, shuffle(zb, zc)).poly
        checks.append((f"assoc z^{a} z^{b} z^{c}", ok))

        word = tuple(rng.randint(-1, 2) for _ in range(rng.randint(2, 3)))
        n = rng.randint(-2, 2)
        which = rng.choice("ab")
        checks.append(
            (f"lemma {which} {list(word)} n={n}", verify_lemma(word, n, which))
        )

        word3 = tuple(rng.randint(0, 2) for _ in range(3))
        checks.append((f"wheel {list(word3)}", wheel_check(shuffle_word(word3))))
    all_ok = all(ok for _, ok in checks)
    if args.json:
        payload = {
            "schema": 1,
            "holds": all_ok,
            "checks": [{"check": name, "holds": ok} for name, ok in checks],
        }
        print(json.dumps(payload, indent=2))
    else:
        for name, ok in checks:
            print(f"{'ok  ' if ok else 'FAIL'} {name}")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted both before and after the subcommand; the
    # SUPPRESS defaults keep the subparser from clobbering a root-level value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized commands")

    parser = argparse.ArgumentParser(
        prog="intshuffle",
        description="Exact computations in the integral shuffle algebra.",
    )
    parser.add_argument("--json", action="store_true", default=False,
                        help=argparse.SUPPRESS)
    parser.add_argument("--seed", type=int, default=0, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common],
                       help="evaluate an expression and print it canonically")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("wheel", parents=[common],
                       help="test the wheel conditions for an expression")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_wheel)

    p = sub.add_parser("corollary", parents=[common],
                       help="test divisibility of the z2:=-z1 image")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_corollary)

    p = sub.add_parser("lemma", parents=[common],
                       help="verify a module-action relation by expansion")
    p.add_argument("relation", choices=("a", "b"))
    p.add_argument("word")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("reduce2", parents=[common],
                       help="certificate over the arity-2 basis")
    p.add_argument("word")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=lambda args: _cmd_reduce(args, reduce2))

    p = sub.add_parser("reduce3", parents=[common],
                       help="certificate over the arity-3 basis")
    p.add_argument("word")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=lambda args: _cmd_reduce(args, reduce3))

    p = sub.add_parser("ideal-cert", parents=[common],
                       help="cofactors over the two-generator ideal")
    p.add_argument("word")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_ideal_cert)

    p = sub.add_parser("assoc", parents=[common],
                       help="check (z^a * z^b) * z^c == z^a * (z^b * z^c)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=_cmd_assoc)

    p = sub.add_parser("verify-cert", parents=[common],
                       help="check a module certificate JSON file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify_cert)

    p = sub.add_parser("verify-ideal-cert", parents=[common],
                       help="check an ideal certificate JSON file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify_ideal_cert)

    p = sub.add_parser("props", parents=[common],
                       help="run randomized property checks")
    p.add_argument("--trials", type=int, default=5)
    p.set_defaults(func=_cmd_props)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ExprSyntaxError, ArityMismatch, ArityTooSmall) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
