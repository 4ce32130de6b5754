#!/usr/bin/env python3
"""
Command line for secondary cohomology computations.

    python -m secoh compute problems/z2_z2.json [--out results.json] [--ceiling N]
    python -m secoh verify  problems/s3_z3_verify.json [--samples K]
    python -m secoh oracle  problems/z2_z2.json
    python -m secoh faces   problems/z2_z2.json --degree 2

Exit codes: 0 success, 1 validation error, 2 scale guard, 3 failed identity.
"""

import argparse
import logging
import os
import sys

# Add the project root directory to Python path to enable imports from the packages
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from secoh.problem import parse_problem
from secoh.report_utils import print_summary
from secoh.runner import all_passed, run
from utilities.config_utils import load_settings
from utilities.errors import (
    AxiomError,
    ComplexError,
    DimensionError,
    OracleGuardError,
    ProblemSpecError,
    ScaleGuardError,
)
from utilities.file_utils import read_json_from_file, write_json_to_file, dumps_canonical

# Flag to enable/disable printing the summary to the console
PRINT_SUMMARY = True

# Flag to enable/disable writing the result document (--out, or stdout)
SAVE_RESULTS = True

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_SCALE = 2
EXIT_IDENTITY = 3

COMMAND_MODES = {
    "compute": "cohomology",
    "verify": "verify",
    "oracle": "oracle",
    "faces": "faces-dump",
}


def build_parser():
    parser = argparse.ArgumentParser(prog="secoh", description="Secondary cohomology of groups")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    for command in COMMAND_MODES:
        p = sub.add_parser(command)
        p.add_argument("spec", help="problem document (JSON)")
        p.add_argument("--out", help="write the result document here")
        p.add_argument("--ceiling", type=int, help="largest ambient rank to assemble")
        if command == "verify":
            p.add_argument("--samples", type=int, help="random samples per pointwise check")
            p.add_argument("--seed", type=int, help="random seed")
        if command == "faces":
            p.add_argument("--degree", type=int, required=True, help="degree n of d_n^k")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        settings = load_settings().override(
            ceiling=args.ceiling,
            samples=getattr(args, "samples", None),
            seed=getattr(args, "seed", None),
        )
        document = read_json_from_file(args.spec)
        spec = parse_problem(dumps_canonical(document))
        degrees = [args.degree] if args.command == "faces" else None
        spec = spec.with_overrides(mode=COMMAND_MODES[args.command], degrees=degrees)
        print(f"🔍 Running {spec.mode} on {args.spec} (degrees {list(spec.degrees)})...")
        result = run(spec, settings)
    except ProblemSpecError as e:
        print(f"❌ Invalid problem: {e}")
        return EXIT_VALIDATION
    except (AxiomError, DimensionError, ValueError) as e:
        print(f"❌ Validation error: {e}")
        return EXIT_VALIDATION
    except (ScaleGuardError, OracleGuardError) as e:
        print(f"⚠️  Scale guard: {e}")
        return EXIT_SCALE
    except ComplexError as e:
        print(f"💥 FATAL ERROR: {e}")
        return EXIT_IDENTITY

    if SAVE_RESULTS:
        if args.out:
            write_json_to_file(result, args.out)
            print(f"\n✅ Results saved to: {args.out}")
        else:
            print(dumps_canonical(result))
    if PRINT_SUMMARY:
        print_summary(result)

    if not all_passed(result):
        print("❌ Some identities failed")
        return EXIT_IDENTITY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
