"""Command line entry point: ``habicht {dp,subres,verify,reduce,gen}``.

Exit codes: 0 when every checked identity holds, 1 when at least one
fails, 2 for invalid input or parameters. Results go to stdout as JSON;
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from .detpoly import ShapeError, dp_list
from .instances import dump_instance, load_instance, load_polys, random_systems
from .reduction import PlanExecutionError, execute_plan, plan_reduction, render_plan
from .subresultant import InvalidIndexError, PolySystem, subresultant
from .theorem import derive_params, iter_params, verify_identity

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


def _int_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").strip("()[]").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(obj, args) -> None:
    text = json.dumps(obj, indent=2, sort_keys=False)
    print(text)
    if getattr(args, "json_out", None):
        Path(args.json_out).write_text(text + "\n")


def _systems(args) -> list[tuple[int | None, PolySystem]]:
    if args.input and args.random:
        raise UsageError("give either an instance file or --random, not both")
    if args.input:
        return [(None, load_instance(args.input))]
    if args.random:
        systems = random_systems(args.random, args.seed, args.trials)
        return [(t, F) for t, F in enumerate(systems)]
    raise UsageError("an instance file or --random DEGREES is required")


def cmd_dp(args) -> int:
    polys = load_polys(Path(args.input).read_text())
    _emit(list(dp_list(polys).coeffs), args)
    return EXIT_OK


def cmd_subres(args) -> int:
    F = load_instance(args.input)
    val = subresultant(F, args.delta)
    _emit({
        "delta": list(args.delta),
        "delta0": val.delta0,
        "R": list(val.poly.coeffs),
        "r": val.principal,
    }, args)
    return EXIT_OK


def _verify_system(F: PolySystem, params, eps_shift: int) -> list[dict]:
    rows = []
    for p in params:
        if eps_shift:
            p = dataclasses.replace(p, epsilon=p.epsilon + eps_shift)
        rows.append(verify_identity(F, p).as_dict())
    return rows


def cmd_verify(args) -> int:
    systems = _systems(args)
    d = systems[0][1].degrees
    if args.sweep:
        params = list(iter_params(d, args.k_max))
    else:
        if args.w0 is None or args.k is None or args.i is None:
            raise UsageError("--w0, --k and --i are required unless --sweep is given")
        try:
            params = [derive_params(d, args.w0, args.k, args.i)]
        except (InvalidIndexError, ValueError) as exc:
            _emit({"degrees": list(d), "cases": [{
                "params": {"w0": list(args.w0), "k": args.k, "i": args.i},
                "error": str(exc)}]}, args)
            return EXIT_INVALID
    shift = 1 if args.epsilon_off_by_one else 0

    if args.jobs > 1 and len(systems) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_system, [F for _, F in systems],
                                    [params] * len(systems), [shift] * len(systems)))
    else:
        results = [_verify_system(F, params, shift) for _, F in systems]

    cases, failures, degenerate = [], 0, 0
    for (trial, F), rows in zip(systems, results):
        for row in rows:
            if row["degenerate"]:
                degenerate += 1
            elif not row["equal"]:
                failures += 1
        cases.append({"trial": trial, "instance": dump_instance(F), "reports": rows})
    total = sum(len(r) for r in results)
    out = {
        "degrees": list(d),
        "seed": args.seed if args.random else None,
        "epsilon_shift": shift,
        "summary": {"total": total, "failures": failures, "degenerate": degenerate,
                    "all_equal": failures == 0},
        "systems": cases,
    }
    _emit(out, args)
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_reduce(args) -> int:
    if args.random:
        args.trials = 1
    _, F = _systems(args)[0]
    plan = plan_reduction(F.degrees, args.target, args.strategy)
    out = {"instance": dump_instance(F), "plan": plan.as_dict(), "diagram": render_plan(plan)}
    try:
        reports = execute_plan(F, plan)
    except PlanExecutionError as exc:
        out["error"] = {"step": exc.step, "produces": list(exc.produces), "message": str(exc)}
        _emit(out, args)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    out["reports"] = [reports[s.produces].as_dict() for s in plan.steps]
    _emit(out, args)
    return EXIT_OK if all(r.equal for r in reports.values()) else EXIT_FAIL


def cmd_gen(args) -> int:
    systems = random_systems(args.degrees, args.seed, args.trials)
    objs = [dump_instance(F, seed=args.seed) | {"trial": t} for t, F in enumerate(systems)]
    _emit(objs[0] if len(objs) == 1 else objs, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="habicht",
        description="Subresultants of several polynomials and exact checks of Habicht-type identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, instance=True, random=False):
        if instance:
            p.add_argument("input", nargs="?" if random else None, help="instance JSON file")
        if random:
            p.add_argument("--random", type=_int_vector, metavar="D0,D1,...",
                           help="generate systems with this degree vector")
        p.add_argument("--seed", type=int, default=0, help="u64 seed for --random")
        p.add_argument("--trials", type=int, default=20, help="number of random systems")
        p.add_argument("--json-out", metavar="PATH", help="also write the JSON result here")

    p = sub.add_parser("dp", help="determinant polynomial of a list of polynomials")
    common(p)
    p.set_defaults(func=cmd_dp)

    p = sub.add_parser("subres", help="delta-subresultant of an instance")
    common(p)
    p.add_argument("--delta", type=_int_vector, required=True)
    p.set_defaults(func=cmd_subres)

    p = sub.add_parser("verify", help="check the generalized Habicht identity")
    common(p, random=True)
    p.add_argument("--w0", type=_int_vector)
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--sweep", action="store_true", help="all (w0, k, i) with u in P(d0, n)")
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--epsilon-off-by-one", action="store_true",
                   help="negative control: raise every exponent by one")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for multi-system runs")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="plan and verify a reduction to the base frontier")
    common(p, random=True)
    p.add_argument("--target", type=_int_vector, required=True)
    p.add_argument("--strategy", choices=("A", "B"), default="A")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="emit seeded random instance(s)")
    common(p, instance=False)
    p.add_argument("--degrees", type=_int_vector, required=True)
    p.set_defaults(trials=1, func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidIndexError, ShapeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
