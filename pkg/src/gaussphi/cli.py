"""Command line front end: ``gaussphi {phi,expand,eval,region,oracle,bench}``.

Exit codes: 0 ok, 1 check failed, 2 parse error, 3 phi(0), 4 bad digit,
5 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import _backend
from .bench import run_bench, stream_digest
from .core import _LITERAL, format_gaussian, parse_gaussian
from .errors import BudgetExceeded, DigitError, ParseError, RangeOverflow, RegionTooLarge, ZeroInput
from .expansion import eval_expansion, minimal_expansion_text, text_to_digits
from .growth import w
from .oracle import MAX_ORACLE_LEVEL, bfs_levels
from .phi import phi_breakdown, phi_fast
from .regions import (
    RegionSpec,
    Scheme,
    enumerate_preimage,
    enumerate_region,
    layer_decomposition,
    layer_index,
)
from .render import render_svg
from .validate import CHECKS

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_DOMAIN, EXIT_DIGITS, EXIT_BUDGET = range(6)


def _explain_lines(bd) -> list[str]:
    x, y = bd.a >> bd.j, bd.b >> bd.j
    s = x + y
    w_m, w_next = w(bd.m), w(bd.m + 1)
    lines = [
        f"a = {bd.a}, b = {bd.b}",
        f"j = {bd.j}  (2^{bd.j} divides both a and b)",
        f"a/2^j = {x}, b/2^j = {y}",
        f"p = {bd.p}  ({1 << bd.p} <= {x} + 2 = {x + 2} < {2 << bd.p})",
        f"m = {bd.m}  ({x} <= w_{bd.m} - 2 = {w_m - 2})",
    ]
    if bd.branch.value == "LOW":
        lines.append(f"{x} + {y} + 3 = {s + 3} <= {w_next} = w_{bd.m + 1}  -> LOW")
        lines.append(f"phi = {bd.m} + {2 * bd.j} = {bd.phi}")
    else:
        lines.append(f"{x} + {y} + 3 = {s + 3} > {w_next} = w_{bd.m + 1}  -> HIGH")
        lines.append(f"phi = {bd.m} + {2 * bd.j} + 1 = {bd.phi}")
    return lines


def cmd_phi(args) -> int:
    g = parse_gaussian(args.value)
    if not g:
        raise ZeroInput("phi undefined at 0")
    if args.explain or args.format == "json":
        bd = phi_breakdown(g)
        if args.format == "json":
            payload = {"value": format_gaussian(g), "phi": bd.phi}
            if args.explain:
                payload.update(bd.as_dict())
            print(json.dumps(payload))
        else:
            print("\n".join(_explain_lines(bd)))
            print(bd.phi)
        return EXIT_OK
    print(phi_fast(g))
    return EXIT_OK


def cmd_expand(args) -> int:
    g = parse_gaussian(args.value)
    digits = minimal_expansion_text(g)
    value_phi = phi_fast(g) if g else None
    if args.format == "json":
        print(json.dumps({"value": format_gaussian(g), "phi": value_phi, "digits": digits}))
    else:
        print(digits)
        print(f"phi {value_phi if value_phi is not None else 'undefined'}", file=sys.stderr)
    return EXIT_OK


def cmd_eval(args) -> int:
    g = eval_expansion(text_to_digits(args.digits))
    if args.format == "json":
        print(json.dumps({"value": format_gaussian(g), "digits": args.digits}))
    else:
        print(format_gaussian(g))
    return EXIT_OK


def cmd_region(args) -> int:
    spec = RegionSpec(args.kind, args.n)
    scheme = Scheme(args.scheme)
    if args.preimage:
        if spec.kind != "B":
            raise SystemExit("--preimage needs --kind B")
        points = enumerate_preimage(spec.n)
    else:
        points = enumerate_region(spec)
    if spec.kind == "B":
        layers = [layer_index(g, scheme) for g in points]
        n_layers = len(layer_decomposition(spec.n, scheme))
    else:
        layers = [-1] * len(points)
        n_layers = 1
    if args.format == "json":
        print(json.dumps([{"re": g.re, "im": g.im, "layer": j} for g, j in zip(points, layers)]))
    elif args.format == "svg":
        title = f"{spec} ({scheme.value} layers)" if spec.kind == "B" else str(spec)
        sys.stdout.write(render_svg([g.astuple() for g in points], layers, n_layers, spec.radius, title))
    else:
        for g in points:
            print(format_gaussian(g))
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.max_n > MAX_ORACLE_LEVEL:
        raise BudgetExceeded(f"--max-n must be <= {MAX_ORACLE_LEVEL}")
    t0 = time.perf_counter()
    levels = bfs_levels(args.max_n)
    names = list(CHECKS) if args.check == "all" else [args.check]
    reports = [CHECKS[name](levels) for name in names]
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps({
            "max_n": args.max_n,
            "ball_sizes": levels.ball_sizes(),
            "level_counts": levels.level_counts(),
            "checks": [
                {"name": r.name, "passed": r.passed, "checked": r.checked, "failures": r.failures}
                for r in reports
            ],
            "seconds": elapsed,
        }))
    else:
        print(f"oracle B_0..B_{args.max_n}: {len(levels)} points")
        print(f"{'n':>3} {'|phi^-1(n)|':>12} {'|B_n|':>10}")
        for n, (exact, total) in enumerate(zip(levels.level_counts(), levels.ball_sizes())):
            print(f"{n:>3} {exact:>12} {total:>10}")
        for r in reports:
            print(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.checked} checked")
            for msg in r.failures:
                print(f"    {msg}")
        print(f"elapsed {elapsed:.2f}s")
    return EXIT_OK if ok else EXIT_CHECK


def cmd_bench(args) -> int:
    found = _backend.available_backends()
    if args.backend == "all":
        names = list(found)
    elif args.backend == "active":
        names = [_backend.BACKEND]
    else:
        if args.backend not in found:
            print(f"backend {args.backend!r} not available (have: {', '.join(found)})", file=sys.stderr)
            return EXIT_PARSE
        names = [args.backend]
    results = run_bench(args.count, args.seed, names, args.expand_count)
    digest = stream_digest(args.seed, max(args.count, 0))
    if args.format == "json":
        print(json.dumps({
            "count": args.count,
            "seed": args.seed,
            "stream": digest,
            "results": [r.as_dict() for r in results],
        }))
        return EXIT_OK
    print(f"bench count={args.count} seed={args.seed} stream={digest} active backend={_backend.BACKEND}")
    for r in results:
        print(f"{r.backend:>9} {r.metric:<18} {r.count:>9} evals  {r.seconds:9.3f}s  {r.rate:14,.0f}/s")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gaussphi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", help="evaluate phi at a Gaussian integer")
    p.add_argument("value")
    p.add_argument("--explain", action="store_true", help="show j, p, m and the branch test")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("expand", help="minimal base-(1+i) digits, MSB first")
    p.add_argument("value")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("eval", help="evaluate a digit string (alphabet 0 1 n i m)")
    p.add_argument("digits")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("region", help="enumerate or draw S_n, D_n or B_n")
    p.add_argument("--kind", choices=("S", "D", "B"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--scheme", choices=[s.value for s in Scheme], default="snowflake")
    p.add_argument("--format", choices=("plain", "json", "svg"), default="plain")
    p.add_argument("--preimage", action="store_true", help="only B_n minus B_(n-1)")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("oracle", help="check closed forms against BFS level sets")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--check", choices=("phi", "decomp", "expansion", "all"), default="all")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="phi / expansion throughput")
    p.add_argument("--count", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", default="all", help="compiled, python, active or all")
    p.add_argument("--expand-count", type=int, default=100_000, help="cap on expansions timed")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_bench)
    return parser


def _protect_literals(argv: list[str]) -> list[str]:
    # "-i" or "-3+2i" would otherwise be taken for options
    if not argv or argv[0] not in ("phi", "expand"):
        return argv
    head, moved = [argv[0]], []
    for tok in argv[1:]:
        if tok.startswith("-") and not tok.startswith("--") and tok != "-h" and _LITERAL.match(tok):
            moved.append(tok)
        else:
            head.append(tok)
    return head + (["--"] + moved if moved else [])


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_protect_literals(argv))
    try:
        return args.func(args)
    except DigitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIGITS
    except (ParseError, RangeOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ZeroInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (RegionTooLarge, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
