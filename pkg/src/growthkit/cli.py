"""Command-line front end.

Commands: run, invert, verify (weights | diagram | bijection | duality),
list, render.  Exit status is 0 on success or a passing check, 1 on a failing
check, 2 on bad input.  GROWTHKIT_THREADS caps verification workers.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import catalog, duality, insdiag, oracle, render, wdgg
from .growth import extract_P, extract_Q, invert_growth, run_growth
from .lattice import parse_shape


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("GROWTHKIT_THREADS", "1")))
    except ValueError:
        return 1


def _alg(name: str):
    return catalog.get_algorithm(name)


def cmd_run(args) -> int:
    alg = _alg(args.algorithm)
    gp = render.parse_gp(args.perm, alg.r)
    g = run_growth(alg, gp)
    P, Q = extract_P(g), extract_Q(g)
    fmt = args.format
    if fmt == "records":
        print(render.render_tableau(P, "records", alg.p_suffixes, "P"))
        print(render.render_tableau(Q, "records", alg.q_suffixes, "Q"))
        if args.diagram:
            print(render.render_growth(g, "records", alg))
        return 0
    print(f"algorithm: {alg.name}")
    print(f"permutation: {render.format_gp(gp, alg.r)}")
    print(f"shape: {g.final_shape}")
    print("P:")
    print(render.render_tableau(P, fmt, alg.p_suffixes, "P"))
    print("Q:")
    print(render.render_tableau(Q, fmt, alg.q_suffixes, "Q"))
    if args.diagram:
        print("diagram:")
        print(render.render_growth(g, fmt, alg))
    return 0


def cmd_invert(args) -> int:
    alg = _alg(args.algorithm)
    with open(args.p) as fh:
        P = render.parse_tableau(fh.read(), alg.geometry)
    with open(args.q) as fh:
        Q = render.parse_tableau(fh.read(), alg.geometry)
    gp = invert_growth(alg, P, Q)
    print(f"permutation: {render.format_gp(gp, alg.r)}")
    return 0


def cmd_list(args) -> int:
    for name, alg in catalog.list_algorithms().items():
        inst = alg.instantiation
        print(f"{name:22s} r={inst.r} geometry={inst.geometry} "
              f"instantiation={inst.name:20s} {alg.description}")
    return 0


def cmd_render(args) -> int:
    alg = _alg(args.algorithm)
    gp = render.parse_gp(args.perm, alg.r)
    g = run_growth(alg, gp)
    if args.what == "growth":
        print(render.render_growth(g, args.format, alg))
    elif args.what == "p":
        print(render.render_tableau(extract_P(g), args.format, alg.p_suffixes, "P"))
    else:
        print(render.render_tableau(extract_Q(g), args.format, alg.q_suffixes, "Q"))
    return 0


def cmd_verify_weights(args) -> int:
    names = [args.instantiation] if args.instantiation else list(wdgg.BUILTIN_INSTANTIATIONS)
    status = 0
    for name in names:
        inst = wdgg.BUILTIN_INSTANTIATIONS.get(name)
        if inst is None:
            print(f"error: unknown instantiation {name!r}", file=sys.stderr)
            return 2
        report = wdgg.verify_instantiation(inst, args.max_size)
        print(report)
        status |= 0 if report.ok else 1
    return status


def cmd_verify_diagram(args) -> int:
    if args.file:
        if not (args.shape and args.instantiation):
            print("error: --file needs --shape and --instantiation", file=sys.stderr)
            return 2
        inst = wdgg.BUILTIN_INSTANTIATIONS.get(args.instantiation)
        if inst is None:
            print(f"error: unknown instantiation {args.instantiation!r}", file=sys.stderr)
            return 2
        shape = parse_shape(args.shape, inst.geometry)
        with open(args.file) as fh:
            d = insdiag.parse_diagram(fh.read(), shape)
        report = insdiag.validate(inst, d)
        print(report)
        return 0 if report.ok else 1
    if not args.algorithm:
        print("error: need --algorithm or --file", file=sys.stderr)
        return 2
    alg = _alg(args.algorithm)
    from .lattice import shapes_up_to
    bad = 0
    checked = 0
    for shape in shapes_up_to(alg.geometry, args.max_size):
        checked += 1
        report = insdiag.validate(alg.instantiation, alg.diagram(shape))
        if not report.ok:
            bad += 1
            print(report)
    print(f"{'PASS' if not bad else 'FAIL'} diagrams algorithm={alg.name} "
          f"shapes<= {args.max_size} checked={checked} failures={bad}")
    return 0 if not bad else 1


def cmd_verify_bijection(args) -> int:
    import json
    from math import factorial
    alg = _alg(args.algorithm)
    inputs = factorial(args.n) * alg.r ** args.n
    print(f"running algorithm={alg.name} n={args.n} inputs={inputs} workers={_workers()}")
    report = oracle.check_bijection(alg, args.n, workers=_workers())
    print(report)
    print(json.dumps({"check": "bijection", "algorithm": alg.name, "n": args.n,
                      "inputs": report.gp_count, "image": report.image_count,
                      "expected": report.expected_count, "ok": report.ok,
                      "failures": list(report.failures)}, sort_keys=True))
    return 0 if report.ok else 1


_ALPHA_MAPS = {
    "identity": duality.identity,
    "swap-uc": duality.swap_uc,
    "swap-circles": duality._swap_components,
}


def cmd_verify_duality(args) -> int:
    a, b = _alg(args.a), _alg(args.b or args.a)
    n = args.n if args.n is not None else (3 if a.r == 4 else 4)
    if args.kind == "inversion":
        report = duality.check_inversion_duality(a, b, n, workers=_workers())
    else:
        f = _ALPHA_MAPS[args.alpha_map]
        g = _ALPHA_MAPS[args.edge_map]
        report = duality.check_transpose_duality(a, b, f, g, n, workers=_workers())
    print(report)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="growthkit",
        description="Execute, invert, and verify tableau insertion algorithms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="insert a permutation and print P and Q")
    p.add_argument("--algorithm", required=True)
    p.add_argument("--perm", required=True, help='e.g. "2 3 4 1" or "6o 4o 7 5 2 3 1o"')
    p.add_argument("--format", choices=["text", "records", "latex"], default="text")
    p.add_argument("--diagram", action="store_true", help="also print the growth diagram")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("invert", help="recover the permutation from P and Q files")
    p.add_argument("--algorithm", required=True)
    p.add_argument("--p", required=True, metavar="FILE")
    p.add_argument("--q", required=True, metavar="FILE")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("list", help="list the built-in algorithms")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("render", help="render one artifact of a run")
    p.add_argument("--algorithm", required=True)
    p.add_argument("--perm", required=True)
    p.add_argument("--what", choices=["growth", "p", "q"], default="growth")
    p.add_argument("--format", choices=["text", "records", "latex"], default="text")
    p.set_defaults(func=cmd_render)

    v = sub.add_parser("verify", help="exhaustive checks")
    vsub = v.add_subparsers(dest="check", required=True)

    p = vsub.add_parser("weights", help="weight equation over all small shapes")
    p.add_argument("--instantiation", help="default: all built-ins")
    p.add_argument("--max-size", type=int, default=10)
    p.set_defaults(func=cmd_verify_weights)

    p = vsub.add_parser("diagram", help="validate insertion diagrams")
    p.add_argument("--algorithm")
    p.add_argument("--max-size", type=int, default=10)
    p.add_argument("--file", help="validate a user diagram file instead")
    p.add_argument("--shape", help="shape for --file, e.g. 3,1")
    p.add_argument("--instantiation", help="instantiation for --file")
    p.set_defaults(func=cmd_verify_diagram)

    p = vsub.add_parser("bijection", help="image equals all same-shape tableau pairs")
    p.add_argument("--algorithm", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify_bijection)

    p = vsub.add_parser("duality", help="inversion/transpose duality sweeps")
    p.add_argument("--kind", choices=["inversion", "transpose"], required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b")
    p.add_argument("--n", type=int, default=None,
                   help="bound on permutation size (default 4, or 3 when r=4)")
    p.add_argument("--alpha-map", choices=sorted(_ALPHA_MAPS), default="identity")
    p.add_argument("--edge-map", choices=sorted(_ALPHA_MAPS), default="identity")
    p.set_defaults(func=cmd_verify_duality)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
