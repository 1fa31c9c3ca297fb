"""Command line front end for the experiment runner."""

import argparse
import logging
import sys

from ..errors import ConfigError
from . import io
from .config import SCENARIO_NAMES, ExperimentConfig
from .runner import header_for, run_scenario


def build_parser():
    parser = argparse.ArgumentParser(
        prog="oscnet",
        description="Run seeded transfer/noise experiments and write CSV or JSON records.",
    )
    parser.add_argument("--scenario", required=True, choices=SCENARIO_NAMES)
    parser.add_argument("--seed", type=int, default=1234, help="master seed (default 1234)")
    parser.add_argument("--ensemble", type=int, default=None, help="realizations (scenario default if omitted)")
    parser.add_argument("--communities", type=int, nargs="+", default=None,
                        help="community count; several values sweep a grid where supported")
    parser.add_argument("--community-size", type=int, nargs="+", default=None)
    parser.add_argument("--p-int", type=float, default=0.75, help="intra-community link probability")
    parser.add_argument("--p-bet", type=float, nargs="+", default=None,
                        help="inter-community link probability (several values sweep a grid)")
    parser.add_argument("--c", type=int, default=50, help="transfer time parameter")
    parser.add_argument("--squeezing", type=float, default=1.0, help="squeezing of the sent state")
    parser.add_argument("--detuning", type=float, nargs="+", default=None,
                        help="frequency offsets for the detuning scenarios")
    parser.add_argument("--window-samples", type=int, default=200)
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", default=None, help="output path (default <scenario>.<format>)")
    parser.add_argument("--threads", type=int, default=1)
    return parser


def main(argv=None):
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        config = ExperimentConfig(
            scenario=args.scenario,
            seed=args.seed,
            ensemble=args.ensemble,
            communities=args.communities,
            community_size=args.community_size,
            p_int=args.p_int,
            p_bet=args.p_bet,
            c=args.c,
            squeezing=args.squeezing,
            detuning=args.detuning,
            window_samples=args.window_samples,
            threads=args.threads,
        )
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    result = run_scenario(config)
    out = args.out or f"{config.scenario}.{args.format}"
    try:
        io.write_records(result.records, result.columns, header_for(result), out, fmt=args.format)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {len(result.records)} records to {out} ({result.failures} failed tasks)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
