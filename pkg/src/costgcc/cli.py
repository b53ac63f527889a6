"""Command line entry point.

    costgcc run FILE... [--method both] [--select degree] [--landmarks 4]
    costgcc run --generate 100 --h-multiplier 2 --format csv --out report.csv
    costgcc generate --count 10 --out instances/
    costgcc filter FILE [--method landmark]

Exit codes: 0 success, 2 parse or validation failure, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import METHODS, ReportWriter, RunConfig, error_kind, run_benchmark
from .errors import CostGccError, NegativeReducedCost, ValidationError
from .generator import BOUND_STYLES, GeneratorSpec, generate_instance
from .io import load_instance, load_tsp, save_instance
from .landmarks import Method, SelectionPolicy
from .propagator import propagate

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _add_generator_args(parser: argparse.ArgumentParser) -> None:
    g = parser.add_argument_group("generator")
    g.add_argument("--variables", type=int, default=20)
    g.add_argument("--values", type=int, default=10)
    g.add_argument("--density", type=float, default=0.5)
    g.add_argument("--cost-min", type=int, default=1)
    g.add_argument("--cost-max", type=int, default=10)
    g.add_argument("--bounds", choices=BOUND_STYLES, default="loose")


def _spec(args, seed: int) -> GeneratorSpec:
    return GeneratorSpec(
        n_variables=args.variables,
        n_values=args.values,
        density=args.density,
        cost_min=args.cost_min,
        cost_max=args.cost_max,
        bounds=args.bounds,
        seed=seed,
        h_multiplier=args.h_multiplier or 1.0,
    )


def _policy_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--select", choices=[m.value for m in Method], default="degree")
    parser.add_argument("--landmarks", type=int, default=4, metavar="K")
    parser.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="costgcc", description="Arc consistency for the cardinality constraint with costs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="propagate instances and emit metric records")
    run.add_argument("paths", nargs="*", help="instance files (.json, or .tsp/.matrix with --h)")
    run.add_argument("--method", choices=(*METHODS, "both"), default="both")
    _policy_args(run)
    run.add_argument("--generate", type=int, default=0, metavar="N", help="also run N generated instances")
    run.add_argument("--h", type=int, default=None, help="override H of file instances")
    run.add_argument("--h-multiplier", type=float, default=None)
    run.add_argument("--format", choices=("json", "csv"), default="json")
    run.add_argument("--out", default="-")
    _add_generator_args(run)

    gen = sub.add_parser("generate", help="write random instances as JSON files")
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--h-multiplier", type=float, default=None)
    gen.add_argument("--out", default=".")
    _add_generator_args(gen)

    flt = sub.add_parser("filter", help="print the pairs removed from one instance")
    flt.add_argument("path")
    flt.add_argument("--method", choices=METHODS, default="landmark")
    flt.add_argument("--h", type=int, default=None)
    _policy_args(flt)
    return parser


def cmd_run(args) -> int:
    methods = METHODS if args.method == "both" else (args.method,)
    try:
        config = RunConfig(
            methods=methods,
            policy=SelectionPolicy(Method(args.select), args.landmarks, args.seed),
            paths=tuple(args.paths),
            generator=_spec(args, args.seed) if args.generate else None,
            count=args.generate,
            H=args.h,
            h_multiplier=args.h_multiplier,
            format=args.format,
        )
    except ValueError as exc:
        print(f"costgcc: {exc}", file=sys.stderr)
        return EXIT_INPUT
    stream = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    status = EXIT_OK
    try:
        writer = ReportWriter(stream, config.format)
        for record in run_benchmark(config):
            writer.write(record)
            status = max(status, error_kind(record))
            if record["error"]:
                print(f"costgcc: {record['instance_id']}: {record['error']}", file=sys.stderr)
    finally:
        if stream is not sys.stdout:
            stream.close()
    return status


def cmd_generate(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    try:
        for i in range(args.count):
            spec = _spec(args, args.seed + i)
            path = out / f"gen-{spec.seed}.json"
            save_instance(generate_instance(spec), path)
            print(path)
    except ValueError as exc:
        print(f"costgcc: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def cmd_filter(args) -> int:
    path = Path(args.path)
    if path.suffix in (".tsp", ".matrix", ".txt"):
        if args.h is None:
            print("costgcc: distance matrices need --h", file=sys.stderr)
            return EXIT_INPUT
        instance = load_tsp(path, args.h)
    else:
        instance = load_instance(path)
        if args.h is not None:
            instance = instance.with_H(args.h)
    policy = SelectionPolicy(Method(args.select), args.landmarks, args.seed)
    report = propagate(instance, args.method, policy)
    removed = sorted(instance.pair_names(report.removed))
    print(
        json.dumps(
            {
                "consistent": report.consistent,
                "min_cost": report.min_cost,
                "removed": [list(p) for p in removed],
                "sp_count": report.sp_count,
                "useless_sp_count": report.useless_sp_count,
            }
        )
    )
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"run": cmd_run, "generate": cmd_generate, "filter": cmd_filter}[args.command]
    try:
        return handler(args)
    except NegativeReducedCost as exc:
        print(f"costgcc: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (CostGccError, ValidationError, OSError) as exc:
        print(f"costgcc: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
