# Copyright 2025 Vijil, Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# The vijil trademark is owned by Vijil Inc.

"""
The ``walks`` command.

Exit status: 0 on success, 1 when a check fails, 2 on a usage error.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__, service
from .shared.config import Settings, get_settings, load_settings
from .shared.errors import DomainError, WalksError
from .shared.logs import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

FORMATS = ('json', 'csv', 'pretty')


def _add_output_options(p: argparse.ArgumentParser) -> None:
    """Output flags every subcommand also accepts after its name."""
    p.add_argument("--format", dest="sub_format", choices=FORMATS,
                   help="output format")
    p.add_argument("--json", dest="sub_format", action="store_const",
                   const="json", help="same as --format json")
    p.add_argument("--out", help="write the output to this file; a .csv or "
                   ".json suffix sets the format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walks",
        description="Exact enumeration and generating-function checks for "
                    "lattice walks confined to a quadrant",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="override YAML merged on top of "
                        "the packaged defaults")
    parser.add_argument("--format", choices=FORMATS,
                        help="output format (default from config: pretty)")
    parser.add_argument("--output", help="write the output to this file")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING, ...")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("criterion", help="x-axis symmetry and small height "
                       "variation test")
    p.add_argument("--steps", required=True,
                   help="preset name, '(0,1);(1,0)' or JSON [[0,1],[1,0]]")

    p = sub.add_parser("count", help="walk counts in the quadrant or the "
                       "right half-plane")
    p.add_argument("--steps", required=True)
    p.add_argument("--start", default="0,0", help="start point 'i,j'")
    p.add_argument("--nmax", type=int, help="largest walk length")
    p.add_argument("--region", choices=("quadrant", "half-plane"))
    p.add_argument("--aggregate", action="store_true",
                   help="sum the counts over all lengths")

    p = sub.add_parser("bijection", help="flip a walk, or compare both "
                       "sides of the flip correspondence")
    p.add_argument("--steps", required=True)
    p.add_argument("--start", default="0,0")
    p.add_argument("--walk", help="step names, e.g. 'N,N,E'")
    p.add_argument("--legend", help="custom names, e.g. 'A=(2,-1);B=(-1,2)'")
    p.add_argument("--direction", choices=("down", "up"), default="down")
    p.add_argument("--target", type=int, choices=(0, -1),
                   help="level of the half-plane side; default from the "
                   "end ordinate of the walk")
    p.add_argument("--cardinality", type=int, metavar="NMAX",
                   help="count both sides for every length up to NMAX")

    p = sub.add_parser("series", help="exact series coefficients")
    p.add_argument("name", nargs="?", choices=service.SERIES_NAMES)
    p.add_argument("--which", choices=service.SERIES_NAMES,
                   help="same as the positional name")
    p.add_argument("--order", type=int)

    p = sub.add_parser("verify", help="check a functional equation "
                       "coefficient by coefficient")
    p.add_argument("--identity", required=True,
                   help="main, knight-kernel, diagonal, main2 or cavalier")
    p.add_argument("--order", type=int)
    p.add_argument("--branch", type=int, default=0, choices=(0, 1, 2))

    p = sub.add_parser("analytic", help="numerical checks on the kernel "
                       "roots")
    p.add_argument("task", choices=service.ANALYTIC_TASKS)
    p.add_argument("--x", help="point for the branches task, e.g. 0.3+0.1j")
    p.add_argument("--sequence", choices=("G", "F"), default="G")
    p.add_argument("--order", type=int, default=300)
    p.add_argument("--stride", type=int)
    p.add_argument("--samples", type=int)

    p = sub.add_parser("recur", help="validate and evaluate a linear "
                       "recurrence")
    p.add_argument("--spec", help="JSON text or path to a JSON spec")
    p.add_argument("--preset", choices=("rec2", "walks"))
    p.add_argument("--steps", help="step set for the walks preset")
    p.add_argument("--start", help="start point for the walks preset")
    p.add_argument("--box", help="evaluation box, e.g. '0:6,0:6'")

    for p in sub.choices.values():
        _add_output_options(p)
    return parser


def _flag(e: DomainError) -> str:
    return f"--{e.field.replace('_', '-')}: " if e.field else ""


def _dispatch(args: argparse.Namespace, settings: Settings
              ) -> service.Report:
    if args.command == "criterion":
        return service.criterion(args.steps)
    if args.command == "count":
        return service.count(
            args.steps, args.start,
            settings.enumeration.n_max if args.nmax is None else args.nmax,
            args.region or settings.enumeration.region, args.aggregate,
        )
    if args.command == "bijection":
        if args.cardinality is not None:
            return service.cardinality(args.steps, args.start,
                                       args.cardinality)
        if args.walk is None:
            raise DomainError("Give --walk or --cardinality", field="walk")
        return service.bijection(args.steps, args.start, args.walk,
                                 args.legend, args.direction, args.target)
    if args.command == "series":
        name = args.which or args.name
        if name is None:
            raise DomainError("Name a series with --which or as the first "
                              "argument", field="which")
        if args.which and args.name and args.which != args.name:
            raise DomainError(f"Conflicting series names '{args.name}' and "
                              f"'{args.which}'", field="which")
        order = settings.series.order if args.order is None else args.order
        return service.series(name, order)
    if args.command == "verify":
        if args.order is not None:
            order = args.order
        elif args.identity in ("knight-kernel", "cavalier"):
            order = settings.series.total_degree
        else:
            order = settings.series.order
        return service.verify(args.identity, order, args.branch)
    if args.command == "analytic":
        return service.analytic_task(
            args.task, settings, x=args.x, sequence=args.sequence,
            order=args.order, stride=args.stride, samples=args.samples,
        )
    return service.recur(box=args.box, spec=args.spec, preset=args.preset,
                         steps=args.steps, start=args.start)


def render(report: service.Report, fmt: str) -> str:
    if fmt == "json":
        return report.to_json() + "\n"
    if fmt == "csv":
        if report.frame is None:
            return ",".join(report.payload) + "\n" + ",".join(
                str(v) for v in report.payload.values()) + "\n"
        return report.frame.to_csv(index=False)
    return (report.summary or report.to_json()) + "\n"


def _output_format(args: argparse.Namespace, out: Optional[str],
                   settings: Settings) -> str:
    fmt = args.sub_format or args.format
    if fmt is None and out:
        suffix = Path(out).suffix.lower().lstrip('.')
        if suffix in ('csv', 'json'):
            fmt = suffix
    return fmt or settings.cli.format


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        settings = (load_settings(args.config) if args.config
                    else get_settings())
        report = _dispatch(args, settings)
    except DomainError as e:
        print(f"walks {args.command}: error: {_flag(e)}{e}", file=sys.stderr)
        return EXIT_USAGE
    except WalksError as e:
        print(f"walks {args.command}: check failed: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED

    out = args.out or args.output
    text = render(report, _output_format(args, out, settings))
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
