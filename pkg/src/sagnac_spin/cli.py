"""Command-line interface.

Subcommands:

    single    evaluate one parameter point
    sweep     evaluate a grid over the single configured range, emit CSV
    validate  parse + validate the configuration and echo it

Exit codes: 0 success, 2 configuration invalid, 3 physics-domain error
(inputs that parse but leave the model's domain at run time).
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterator, Sequence

from .errors import ConfigError, PhysicsDomainError
from .sweep import (
    canonical_echo,
    csv_columns,
    csv_lines,
    human_single,
    human_sweep,
    load_config,
    run_single,
    sweep_records,
    validate_config,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PHYSICS = 3


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=str, default=None, help="Config file path.")
    parser.add_argument(
        "--set",
        dest="sets",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Override a config key (repeatable).",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sagnac-spin",
        description="Wigner rotation and Sagnac spin interferometry on a rotating platform.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    single = sub.add_parser("single", help="Evaluate one parameter point.")
    _add_common(single)
    single.add_argument("--out", type=str, default="-", help="Output path or '-' for stdout.")
    single.add_argument("--format", choices=("csv", "human"), default="csv")

    sweep = sub.add_parser("sweep", help="Evaluate a grid over the configured range.")
    _add_common(sweep)
    sweep.add_argument("--out", type=str, default="-", help="Output path or '-' for stdout.")
    sweep.add_argument("--format", choices=("csv", "human"), default="csv")
    sweep.add_argument(
        "--plot",
        type=str,
        default=None,
        metavar="PATH",
        help="Also render the swept outputs to a figure file.",
    )

    validate = sub.add_parser("validate", help="Check the configuration and echo it.")
    _add_common(validate)
    return parser


def _emit(lines: Iterator[str], out: str) -> None:
    if out == "-":
        for line in lines:
            sys.stdout.write(line + "\n")
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")


def _cmd_single(args: argparse.Namespace) -> int:
    cfg = load_config(args.config, args.sets)
    record = run_single(cfg)
    if args.format == "human":
        _emit(human_single(cfg, record), args.out)
    else:
        _emit(csv_lines(cfg, [record], None), args.out)
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = load_config(args.config, args.sets)
    key, records = sweep_records(cfg)
    if args.format == "human":
        _emit(human_sweep(cfg, records, key), args.out)
    else:
        _emit(csv_lines(cfg, records, key), args.out)
    if args.plot is not None:
        from .plots import render_sweep_plot

        render_sweep_plot(cfg, key, records, args.plot)
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    cfg = load_config(args.config, args.sets)
    errors = validate_config(cfg)
    if errors:
        for err in errors:
            sys.stderr.write(f"config error: {err}\n")
        return EXIT_CONFIG
    sys.stdout.write(f"config: {canonical_echo(cfg)}\n")
    sys.stdout.write(f"columns: {', '.join(csv_columns(cfg, None))}\n")
    sys.stdout.write("ok\n")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "single": _cmd_single,
        "sweep": _cmd_sweep,
        "validate": _cmd_validate,
    }
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return EXIT_CONFIG
    except OSError as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return EXIT_CONFIG
    except PhysicsDomainError as exc:
        sys.stderr.write(f"physics domain error: {exc}\n")
        return EXIT_PHYSICS


if __name__ == "__main__":
    sys.exit(main())
