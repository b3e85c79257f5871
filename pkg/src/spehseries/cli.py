"""Command-line front end: JSON in, JSON (or ASCII) out.

Exit codes: 0 on success, 1 when an agreement check fails or a closure
blows its node cap, 2 for bad flags or unusable input.  Errors are also
written to stderr as a one-line JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .composition import (
    compose,
    compose_zelevinsky,
    conjecture_jh,
    is_reducible,
    lattice_chain,
    render_diagram,
)
from .errors import AgreementFailure, ClosureTooLarge, SpehSeriesError
from .involution import mw_dual_left_trace, mw_dual_trace
from .line import HalfExp
from .multisegments import DEFAULT_MAX_NODES, Multisegment, minus_begins, minus_ends, speh
from .oracle import Oracle
from .ring import RingElement, derivative_ladder, derivative_ladder_dual, derivative_zeta
from .segments import DEFAULT_LINE
from .speh import make_params


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _fail(code: int, kind: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def _load(path: str):
    with open(path) as fh:
        return json.load(fh)


def _load_ms(path: str) -> Multisegment:
    obj = _load(path)
    if "segments" not in obj:
        raise ValueError(f"{path}: expected a multisegment object with a 'segments' list")
    return Multisegment.from_json(obj)


def _sign(text: str) -> str:
    if text not in ("+", "-", "plus", "minus"):
        raise argparse.ArgumentTypeError("sign must be + or -")
    return "+" if text in ("+", "plus") else "-"


def _basis(text: str) -> str:
    if text.lower() not in ("z", "l"):
        raise argparse.ArgumentTypeError("basis must be z or l")
    return text.upper()


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _halfexp(text: str) -> HalfExp:
    try:
        return HalfExp.parse(text)
    except (ValueError, SpehSeriesError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


# --- commands ---------------------------------------------------------------


def cmd_speh(args) -> int:
    _emit(speh(args.n, args.d, args.shift, args.line).to_json())
    return 0


def cmd_dual(args) -> int:
    a = _load_ms(args.infile)
    trace = mw_dual_left_trace(a) if args.side == "left" else mw_dual_trace(a)
    _emit(trace.to_json() if args.trace else trace.result.to_json())
    return 0


def cmd_derive(args) -> int:
    obj = _load(args.infile)
    if "terms" in obj:
        e = RingElement.from_json(obj)
        _emit(derivative_zeta(e).to_json())
        return 0
    a = Multisegment.from_json(obj)
    if args.highest:
        _emit((minus_begins(a) if args.dual else minus_ends(a)).to_json())
    elif args.dual:
        _emit(derivative_ladder_dual(a).to_json())
    else:
        _emit(derivative_ladder(a).to_json())
    return 0


def cmd_compose(args) -> int:
    report = compose(args.n, args.d, args.k, args.sign, args.basis)
    if args.ascii:
        sys.stdout.write(render_diagram(report.params) + "\n")
        for j, m in report.factors:
            tag = [t for t, hit in (("socle", m == report.socle), ("cosocle", m == report.cosocle)) if hit]
            sys.stdout.write(f"r_{j} = {m}" + (f"  ({', '.join(tag)})" if tag else "") + "\n")
        return 0
    _emit(report.to_json())
    return 0


def cmd_lattice(args) -> int:
    chain = lattice_chain(args.n, args.d, args.k, args.sign, args.basis)
    _emit(
        {
            "n": args.n,
            "d": args.d,
            "k": args.k,
            "sign": args.sign,
            "basis": args.basis,
            "chain": [{"indices": s, "factors": [m.to_json() for m in ms_]} for s, ms_ in chain],
        }
    )
    return 0


def cmd_oracle(args) -> int:
    result = Oracle(args.max_nodes).compose(args.n, args.d, args.k)
    _emit(result.to_json())
    return 0


def check_cells(nmax: int, dmax: int, kmax=None, jobs: int = 1, max_nodes: int = DEFAULT_MAX_NODES) -> list[dict]:
    """Compare oracle and closed form on every (n, d, k); sorted by cell."""
    cells = [
        (n, d, k)
        for n in range(1, nmax + 1)
        for d in range(1, dmax + 1)
        for k in range(0, (n + d + 1 if kmax is None else kmax) + 1)
    ]
    oracle = Oracle(max_nodes)

    def run(cell):
        n, d, k = cell
        got = oracle.compose(n, d, k).factors
        want = compose_zelevinsky(n, d, k).factor_set
        return {
            "n": n,
            "d": d,
            "k": k,
            "agree": set(got) == want,
            "oracle_length": len(got),
            "theorem_length": len(want),
        }

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(run, cells))
    else:
        rows = [run(c) for c in cells]
    return sorted(rows, key=lambda r: (r["n"], r["d"], r["k"]))


def cmd_check(args) -> int:
    rows = check_cells(args.nmax, args.dmax, args.kmax, args.jobs, args.max_nodes)
    ok = all(r["agree"] for r in rows)
    _emit({"all_agree": ok, "cells": rows})
    if not ok:
        bad = [(r["n"], r["d"], r["k"]) for r in rows if not r["agree"]]
        return _fail(1, "AgreementFailure", f"oracle and closed form disagree at {bad}")
    return 0


def cmd_render(args) -> int:
    obj = _load(args.infile)
    if "segments" in obj:
        target = Multisegment.from_json(obj)
    else:
        target = make_params(int(obj["n"]), int(obj["d"]), int(obj["k"]), obj.get("line", DEFAULT_LINE))
    sys.stdout.write(render_diagram(target) + "\n")
    return 0


def cmd_conjecture(args) -> int:
    res = conjecture_jh(_load_ms(args.left), _load_ms(args.right), args.side_condition)
    _emit(res.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spehseries", description="Speh pair composition series toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("speh", help="the Speh multisegment a(n,d) twisted by a shift")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--shift", type=_halfexp, default=HalfExp(0))
    p.add_argument("--line", default=DEFAULT_LINE)
    p.set_defaults(func=cmd_speh)

    p = sub.add_parser("dual", help="Zelevinsky involution of a multisegment")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--side", choices=("left", "right"), default="right")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("derive", help="derivative of a ladder or of a zeta-basis element")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--dual", action="store_true")
    p.add_argument("--highest", action="store_true")
    p.set_defaults(func=cmd_derive)

    for name, func, helptext in (
        ("compose", cmd_compose, "composition series of the Speh pair"),
        ("lattice", cmd_lattice, "chain of submodules of the Speh pair"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--n", type=_positive, required=True)
        p.add_argument("--d", type=_positive, required=True)
        p.add_argument("--k", type=_nonneg, required=True)
        p.add_argument("--sign", type=_sign, default="+")
        p.add_argument("--basis", type=_basis, default="Z")
        if name == "compose":
            p.add_argument("--ascii", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("oracle", help="independent recomputation of the factor set")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--max-nodes", type=_positive, default=DEFAULT_MAX_NODES)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="oracle against closed form over a grid")
    p.add_argument("--nmax", type=_positive, required=True)
    p.add_argument("--dmax", type=_positive, required=True)
    p.add_argument("--kmax", type=_nonneg, default=None)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--max-nodes", type=_positive, default=DEFAULT_MAX_NODES)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("render", help="ASCII picture of a multisegment or a pair {n,d,k}")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("conjecture", help="expected factors of a product of two Speh ladders")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--side-condition", choices=("none", "verbatim"), default="none")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _fail(2, "UsageError", str(exc))
    try:
        return args.func(args)
    except (AgreementFailure, ClosureTooLarge) as exc:
        return _fail(1, type(exc).__name__, str(exc))
    except (SpehSeriesError, ValueError, KeyError, TypeError, OSError) as exc:
        return _fail(2, type(exc).__name__, str(exc))


if __name__ == "__main__":
    sys.exit(main())
