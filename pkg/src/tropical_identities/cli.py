"""Command line front end.

Subcommands: ``check`` (decide an identity), ``witness`` (produce a verified
falsifying assignment), ``polys`` (inspect the polynomial families), ``eval``
(evaluate both sides under an assignment file), ``oracle`` (randomized
falsification). Exit codes: 0 the identity holds / sides agree, 1 it fails /
sides differ (witness in the report), 2 usage or input error.

Every run prints a report; ``--json`` switches the rendering, not the data.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .checking import (
    Verdict,
    bicyclic_witness,
    check_identity,
    check_poset,
    falsifying_witness,
    verify_witness,
)
from .matrices import TropMatrix, mat_mul
from .models import Bicyclic, Fmim, bicyclic_mul, eval_word, fmim_mul
from .oracle import OracleConfig, random_falsify
from .polynomials import essentialize, equivalent, poly_to_json, render_poly
from .posets import Poset, chain_poset
from .words import Identity, build_f_u_rho, parse_identity

MAX_UNFORCED_N = 4  # the subword loop is |alphabet|**(n-1); refuse beyond this


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropid",
        description="Exact identity checking in upper triangular max-plus matrix semigroups.",
    )
    parser.add_argument("--version", action="version", version=f"tropid {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("identity", help="identity such as 'ab^2a^2bab^2a = ab^2aba^2b^2a'")
        p.add_argument("--json", action="store_true", help="machine-readable report")

    p = sub.add_parser("check", help="decide whether the identity holds")
    add_common(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--n", type=int, default=None, help="matrix dimension (default 2)")
    group.add_argument("--poset", metavar="FILE", help="JSON poset file; uses its longest chain")
    p.add_argument("--fast-2letter", action="store_true", help="univariate route (n=2, two letters)")
    p.add_argument("--force", action="store_true", help=f"allow n > {MAX_UNFORCED_N}")

    p = sub.add_parser("witness", help="produce a verified falsifying assignment")
    add_common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="matrix dimension")
    group.add_argument("--bicyclic", action="store_true", help="bicyclic monoid witness")
    p.add_argument("--force", action="store_true", help=f"allow n > {MAX_UNFORCED_N}")

    p = sub.add_parser("polys", help="print the polynomial families of both sides")
    add_common(p)
    p.add_argument("--n", type=int, required=True, help="matrix dimension")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--raw", action="store_true", help="as built (default)")
    group.add_argument("--essential", action="store_true", help="essentialized canonical forms")
    p.add_argument("--force", action="store_true", help=f"allow n > {MAX_UNFORCED_N}")

    p = sub.add_parser("eval", help="evaluate both sides under an assignment file")
    add_common(p)
    p.add_argument("--model", required=True, choices=["utn", "bicyclic", "fmim"])
    p.add_argument("--assign", metavar="FILE", required=True, help="JSON letter -> element")

    p = sub.add_parser("oracle", help="randomized falsification")
    add_common(p)
    p.add_argument("--model", required=True, choices=["utn", "poset", "bicyclic", "fmim"])
    p.add_argument("--n", type=int, default=2, help="dimension for --model utn")
    p.add_argument("--poset", metavar="FILE", help="poset file for --model poset")
    p.add_argument("--trials", "--oracle-trials", dest="trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--range", dest="entry_range", type=int, default=None)
    p.add_argument("--bottom-prob", type=float, default=0.25)
    return parser


def _check_n(n: int, force: bool) -> None:
    if n < 1:
        raise ValueError("matrix dimension must be >= 1")
    if n > MAX_UNFORCED_N and not force:
        raise ValueError(
            f"n = {n} grows the subword loop exponentially; pass --force to proceed"
        )


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _cmd_check(args) -> tuple[dict, int]:
    identity = parse_identity(args.identity)
    if args.poset is not None:
        poset = Poset.from_json(_load_json(args.poset))
        n = poset.max_chain_length()
        _check_n(n, args.force)
        if args.fast_2letter:
            raise ValueError("--fast-2letter applies to --n 2, not poset input")
        verdict = check_poset(identity, poset)
        payload = verdict.to_json()
        payload["poset"] = poset.to_json()
    else:
        n = 2 if args.n is None else args.n
        _check_n(n, args.force)
        verdict = check_identity(identity, n, two_letter_fast=args.fast_2letter)
        payload = verdict.to_json()
    payload["identity"] = str(identity)
    return payload, 0 if verdict.holds else 1


def _cmd_witness(args) -> tuple[dict, int]:
    identity = parse_identity(args.identity)
    if args.bicyclic:
        verdict = check_identity(identity, 2)
        if verdict.holds:
            return {"identity": str(identity), "result": "holds", "witness": None}, 0
        witness = bicyclic_witness(identity)
    else:
        _check_n(args.n, args.force)
        verdict = check_identity(identity, args.n)
        if verdict.holds:
            return {"identity": str(identity), "result": "holds", "n": args.n, "witness": None}, 0
        witness = falsifying_witness(identity, args.n)
    if not verify_witness(identity, witness):
        raise AssertionError("witness failed re-verification")
    payload = {
        "identity": str(identity),
        "result": "fails",
        "witness": witness.to_json(),
        "verified": True,
    }
    return payload, 1


def _cmd_polys(args) -> tuple[dict, int]:
    identity = parse_identity(args.identity)
    _check_n(args.n, args.force)
    essential = bool(args.essential)
    families = []
    all_equivalent = True
    for i in range(args.n):
        tau = tuple(range(1, i + 2))
        for u_letters in itertools.product(identity.alphabet, repeat=i):
            u = "".join(u_letters)
            f = build_f_u_rho(identity.left, u, tau, identity.alphabet)
            g = build_f_u_rho(identity.right, u, tau, identity.alphabet)
            same = equivalent(f, g)
            all_equivalent = all_equivalent and same
            if essential:
                f, g = essentialize(f), essentialize(g)
            families.append(
                {
                    "u": u,
                    "path": [str(v) for v in tau],
                    "left": poly_to_json(f),
                    "left_text": render_poly(f),
                    "right": poly_to_json(g),
                    "right_text": render_poly(g),
                    "equivalent": same,
                }
            )
    payload = {
        "identity": str(identity),
        "n": args.n,
        "form": "essential" if essential else "raw",
        "families": families,
        "result": "holds" if all_equivalent else "fails",
    }
    return payload, 0 if all_equivalent else 1


def _decode_assignment(model: str, data: dict):
    if not isinstance(data, dict) or not data:
        raise ValueError("assignment file must map letters to elements")
    if model == "utn":
        sizes = {len(rows) for rows in data.values()}
        if len(sizes) != 1:
            raise ValueError("all matrices must share one dimension")
        poset = chain_poset(sizes.pop())
        return {s: TropMatrix.from_json(poset, rows) for s, rows in data.items()}, mat_mul
    if model == "bicyclic":
        def pair(v):
            if isinstance(v, dict):
                return Bicyclic(Fraction(str(v["i"])), Fraction(str(v["j"])))
            return Bicyclic(Fraction(str(v[0])), Fraction(str(v[1])))

        return {s: pair(v) for s, v in data.items()}, bicyclic_mul
    def triple(v):
        if isinstance(v, dict):
            return Fmim(int(v["i"]), int(v["j"]), int(v["k"]))
        return Fmim(int(v[0]), int(v[1]), int(v[2]))

    return {s: triple(v) for s, v in data.items()}, fmim_mul


def _cmd_eval(args) -> tuple[dict, int]:
    identity = parse_identity(args.identity)
    assignment, mul = _decode_assignment(args.model, _load_json(args.assign))
    missing = sorted(set(identity.left + identity.right) - set(assignment))
    if missing:
        raise ValueError(f"assignment missing letters {missing}")
    left = eval_word(identity.left, assignment, mul)
    right = eval_word(identity.right, assignment, mul)
    equal = left == right
    payload = {
        "identity": str(identity),
        "model": args.model,
        "left_value": left.to_json(),
        "right_value": right.to_json(),
        "result": "equal" if equal else "differs",
    }
    return payload, 0 if equal else 1


def _cmd_oracle(args) -> tuple[dict, int]:
    identity = parse_identity(args.identity)
    cfg = OracleConfig(
        trials=args.trials,
        entry_range=args.entry_range,
        bottom_probability=args.bottom_prob,
        seed=args.seed,
    )
    if args.model == "utn":
        model = args.n
    elif args.model == "poset":
        if not args.poset:
            raise ValueError("--model poset requires --poset FILE")
        model = Poset.from_json(_load_json(args.poset))
    else:
        model = args.model
    witness = random_falsify(identity, model, cfg)
    payload = {
        "identity": str(identity),
        "model": args.model,
        "trials": cfg.trials,
        "seed": cfg.seed,
        "result": "falsified" if witness else "no falsifier found",
        "witness": witness.to_json() if witness else None,
    }
    return payload, 1 if witness else 0


_COMMANDS = {
    "check": _cmd_check,
    "witness": _cmd_witness,
    "polys": _cmd_polys,
    "eval": _cmd_eval,
    "oracle": _cmd_oracle,
}


def _render_human(report: dict, indent: str = "") -> None:
    for key, value in report.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _render_human(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{indent}{key}:")
            for item in value:
                _render_human(item, indent + "  ")
                print()
        else:
            print(f"{indent}{key}: {value}")


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return int(exc.code or 0)
    started = time.perf_counter()
    try:
        payload, code = _COMMANDS[args.command](args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {
        "command": args.command,
        "version": __version__,
        "elapsed_seconds": round(time.perf_counter() - started, 6),
        "result": payload,
    }
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        _render_human(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
