"""Command-line entry point: ``abcdgen generate`` and ``abcdgen validate``.

Exit status: 0 success, 1 configuration or parse error, 2 infeasible
instance, 3 generation failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import fileio
from .config import parse_config
from .errors import ABCDError
from .pipeline import run_generate
from .stats import mixing_table

_GENERATE_FLAGS = [
    ("n", int, "number of vertices"),
    ("gamma", float, "degree power-law exponent"),
    ("min-degree", int, "minimum degree"),
    ("max-degree", int, "maximum degree"),
    ("avg-degree", float, "average degree (replaces min-degree)"),
    ("beta", float, "community-size power-law exponent"),
    ("min-community", int, "minimum community size"),
    ("max-community", int, "maximum community size"),
    ("xi", float, "background share of every vertex's weight"),
    ("mu", float, "target fraction of inter-community edges"),
    ("variant", str, "global or local (only with mu)"),
    ("model", str, "cl (expected degrees) or cm (exact degrees)"),
    ("seed", int, "random seed; drawn from OS entropy when omitted"),
    ("out-edges", str, "edge list output path"),
    ("out-communities", str, "partition output path"),
    ("out-degrees", str, "optional degree sequence output path"),
    ("out-sizes", str, "optional community size output path"),
    ("in-degrees", str, "read the degree sequence instead of sampling it"),
    ("in-sizes", str, "read the community sizes instead of sampling them"),
    ("max-iters", int, "resampling attempts for the sequences (default 100)"),
]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abcdgen", description="benchmark graph generator with ground-truth communities")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a graph with ground-truth communities")
    gen.add_argument("--config", help="key=value file; flags override its entries")
    for name, kind, help_text in _GENERATE_FLAGS:
        gen.add_argument(f"--{name}", type=kind, default=None, help=help_text)
    gen.add_argument("--skip-write", action="store_true", default=None, help="generate without writing files")
    gen.add_argument("--report", help="write the JSON run report here instead of stdout")

    val = sub.add_parser("validate", help="measure mixing of an edge list against a partition")
    val.add_argument("edges")
    val.add_argument("partition")
    val.add_argument("--degrees", help="degree file (one per line) used for community volumes")
    val.add_argument("--xi", type=float, help="add the predicted mixing column for this xi")
    val.add_argument("-o", "--output", help="write the table here instead of stdout")
    return parser


def _generate(args) -> int:
    overrides = {name.replace("-", "_"): getattr(args, name.replace("-", "_")) for name, _, _ in _GENERATE_FLAGS}
    overrides["skip_write"] = args.skip_write
    config = parse_config(args.config, overrides)
    report = run_generate(config)
    text = json.dumps(report.as_dict(), indent=2)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def run_validate(edges_path, partition_path, degrees_path=None, xi=None):
    """Read an edge list and a partition and return the mixing table."""
    weights = fileio.read_int_sequence(degrees_path) if degrees_path else None
    assignment = fileio.read_partition(partition_path, weights=weights)
    edges = fileio.read_edge_list(edges_path, n=assignment.n)
    if len(edges) == 0:
        raise ValueError(f"{edges_path}: edge list is empty")
    return mixing_table(edges, assignment, xi=xi)


def _validate(args) -> int:
    table = run_validate(args.edges, args.partition, args.degrees, args.xi)
    text = table.to_tsv()
    if args.output:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return _generate(args) if args.command == "generate" else _validate(args)
    except ABCDError as exc:
        stage = getattr(exc, "stage", None)
        prefix = f"error in stage {stage}: " if stage else "error: "
        print(prefix + str(exc), file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
