"""Command-line entry point.

Exit codes: 0 success or all checks pass, 1 a check fails (or the input is
outside the domain of the requested map), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import betti, braid_betti as bb, braid_derham as bd, derham
from .algebra import Element, serialize
from .checks import Config, suites
from .magnus import Unbounded, filtration_degree, magnus
from .matrix import AlgebraMatrix
from .parse import ALGEBRA_IDS, ParseError, get_algebra, infer_algebra, parse
from .report import UnknownSuite, all_passed, run_suite, to_human, to_json


class DomainError(ValueError):
    """Input parses but lies outside the domain of the command."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"harmonica: {name} must be an integer, got {raw!r}")


def _matrix(m: AlgebraMatrix) -> list[list[str]]:
    return m.to_lists()


def _read(args, default: str | None = None) -> Element:
    alg = args.algebra or default or infer_algebra(args.expr)
    return parse(args.expr, get_algebra(alg))


def _expect(x: Element, *names: str) -> None:
    if x.algebra.name not in names:
        raise DomainError(f"expected an element of {' or '.join(names)}, got {x.algebra.name}")


# --- commands: each returns (payload, ok) --------------------------------------------

def cmd_eval(args):
    x = _read(args)
    return {"algebra": x.algebra.name, "value": serialize(x)}, True


def cmd_delta_betti(args):
    b = _read(args, "VB")
    _expect(b, "VB")
    d = betti.delta_OB(b)
    m = betti.wb_membership(d)
    return {"input": serialize(b), "delta": serialize(d), "in_wb_tensor_wb": m.member}, True


def cmd_delta_derham(args):
    v = _read(args, "VDR")
    _expect(v, "VDR")
    return {"input": serialize(v), "delta": serialize(derham.delta_ODR(v))}, True


def cmd_gr(args):
    x = _read(args)
    if x.algebra.kind != "group":
        raise DomainError("gr needs a group-algebra element (VB, VB2 or P5)")
    N = args.trunc
    if x.algebra == bb.P5:
        deg = bb.p5_filtration_degree(x, N)
        series = magnus(x, N, bb.GR_P5)
    else:
        deg = filtration_degree(x, N)
        series = magnus(x, N)
    comps = {str(d): serialize(series.component(d)) for d in range(N + 1) if not series.component(d).is_zero()}
    return {
        "input": serialize(x),
        "truncation": N,
        "filtration_degree": str(deg) if isinstance(deg, Unbounded) else deg,
        "leading_class": None if isinstance(deg, Unbounded) else serialize(series.component(deg)),
        "components": comps,
    }, True


def cmd_gr_compare(args):
    N = args.trunc
    objs = derham.gr_compare_betti(N)
    lit = derham.gr_delta_compare(N)
    lifted = derham.gr_delta_compare_lifted(N)
    out = {
        "truncation": N,
        "objects": {"ok": objs.ok, "items": objs.items},
        "delta_literal": {"ok": lit.ok, "items": lit.items},
        "delta_lifted": {"ok": lifted.ok, "items": lifted.items},
    }
    return out, objs.ok and lit.ok and lifted.ok


def cmd_p5_eval(args):
    x = _read(args, "P5")
    _expect(x, "P5")
    proj = {w: serialize(bb.project(w, x)) for w in ("pr1", "pr2", "pr5", "pr12")}
    return {"value": serialize(x), "projections": proj}, True


def cmd_fox(args):
    k = _read(args, "P5")
    _expect(k, "P5")
    if not bb.in_kernel_pr5(k):
        raise DomainError(f"{serialize(k)} is not in the kernel of pr5")
    left = bb.fox_decompose(k)
    right = bb.fox_decompose_right(k)
    return {
        "input": serialize(k),
        "left": {f"x{i}5": serialize(q) for i, q in zip((1, 2, 3), left)},
        "right": {f"x{i}5": serialize(q) for i, q in zip((1, 2, 3), right)},
        "roundtrip": bb.recompose(left) == k and bb.recompose_right(right) == k,
    }, True


def cmd_rvarpi(args):
    p = _read(args, "P5")
    _expect(p, "P5")
    return {"input": serialize(p), "rvarpi": _matrix(bb.rvarpi(p))}, True


def cmd_up5_eval(args):
    x = _read(args, "UP5")
    _expect(x, "UP5")
    proj = {w: serialize(bd.u_project(w, x)) for w in ("pr1", "pr2", "pr5", "pr12")}
    return {"value": serialize(x), "projections": proj}, True


def cmd_lie_rvarpi(args):
    p = _read(args, "UP5")
    _expect(p, "UP5")
    return {"input": serialize(p), "lie_rvarpi": _matrix(bd.lie_rvarpi(p))}, True


def cmd_wb_member(args):
    v = _read(args, "VB")
    _expect(v, "VB", "VB2")
    d = betti.wb_membership(v)
    out = {"input": serialize(v), "member": d.member}
    if v.algebra.name == "VB":
        if d.member:
            out.update(constant=str(d.constant), quotient=serialize(d.quotient))
    elif d.member:
        out.update(constant=str(d.constant), left=serialize(d.left), right=serialize(d.right), both=serialize(d.both))
    if not d.member:
        out["obstruction"] = str(d.obstruction)
    return out, True


def cmd_verify(args):
    cfg = Config(truncation=args.trunc, seed=args.seed, samples=args.samples)
    rep = run_suite(args.suite or ["all"], cfg)
    return rep, all_passed(rep)


def _human(payload) -> str:
    if isinstance(payload, dict) and "checks" in payload and "summary" in payload:
        return to_human(payload)
    lines = []

    def walk(prefix, x):
        if isinstance(x, dict):
            for k, v in x.items():
                walk(f"{prefix}{k}.", v)
        elif isinstance(x, list) and x and isinstance(x[0], list):
            lines.append(f"{prefix[:-1]}:")
            lines.extend("  [" + ", ".join(r) + "]" for r in x)
        else:
            lines.append(f"{prefix[:-1]}: {x}")

    walk("", payload)
    return "\n".join(lines)


COMMANDS = {
    "eval": (cmd_eval, "parse and normalize an element"),
    "delta-betti": (cmd_delta_betti, "Betti coproduct of b in V^B"),
    "delta-derham": (cmd_delta_derham, "de Rham coproduct of v in V^DR"),
    "gr": (cmd_gr, "filtration degree and Magnus components"),
    "gr-compare": (cmd_gr_compare, "graded comparison of the Betti and de Rham objects"),
    "p5-eval": (cmd_p5_eval, "normal form in k[P5*] and its projections"),
    "fox": (cmd_fox, "Fox decomposition of a kernel element of pr5"),
    "rvarpi": (cmd_rvarpi, "rvarpi matrix of an element of k[P5*]"),
    "up5-eval": (cmd_up5_eval, "normal form in U(p5) and its projections"),
    "lie-rvarpi": (cmd_lie_rvarpi, "Lie rvarpi matrix of an element of U(p5)"),
    "wb-member": (cmd_wb_member, "W^B membership with witness decomposition"),
    "verify": (cmd_verify, "run check suites and print a report"),
}

_NEEDS_EXPR = {"eval", "delta-betti", "delta-derham", "gr", "p5-eval", "fox", "rvarpi", "up5-eval", "lie-rvarpi", "wb-member"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trunc", type=int, default=_env_int("HARMONICA_TRUNC", 4), help="Magnus truncation N")
    common.add_argument("--seed", type=int, default=_env_int("HARMONICA_SEED", 0))
    common.add_argument("--samples", type=int, default=100)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--human", dest="fmt", action="store_const", const="human")
    common.add_argument("--algebra", choices=ALGEBRA_IDS, help="algebra to parse into (default: inferred)")

    p = argparse.ArgumentParser(prog="harmonica", description="Exact computations with the Betti and de Rham harmonic coproducts.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_)
        if name in _NEEDS_EXPR:
            sp.add_argument("expr")
        if name == "verify":
            sp.add_argument("--suite", action="append", choices=sorted(suites()), help="repeatable; default all")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.trunc < 2:
        print("harmonica: --trunc must be >= 2", file=sys.stderr)
        return 2
    if args.samples < 1:
        print("harmonica: --samples must be >= 1", file=sys.stderr)
        return 2
    fn = COMMANDS[args.command][0]
    try:
        payload, ok = fn(args)
    except ParseError as e:
        print(f"harmonica: parse error: {e}", file=sys.stderr)
        if e.text:
            print(f"  {e.text}\n  {' ' * e.position}^", file=sys.stderr)
        return 2
    except UnknownSuite as e:
        print(f"harmonica: {e.args[0]}", file=sys.stderr)
        return 2
    except (DomainError, bb.NotInKernel, bd.NotInKernel) as e:
        print(f"harmonica: {e}", file=sys.stderr)
        return 1
    if args.fmt == "human":
        print(_human(payload))
    else:
        print(to_json(payload) if args.command == "verify" else json.dumps(payload, indent=2))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
