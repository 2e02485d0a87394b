"""Command-line interface: ``eigenperm <subcommand> [flags]``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import BoundError, ConfigError
from .experiments import FORMATS, MODES, SCHEMA_PATH, SUBCOMMANDS, ExperimentConfig, run

EXIT_OK, EXIT_CONFIG, EXIT_BOUND = 0, 2, 3

# flag name -> (config field, type, help)
_FLAGS = {
    "--n": ("n", int, "permutation size"),
    "--k": ("k", int, "tensor power or subset size"),
    "--theta": ("theta", str, "Ewens parameter as an integer or 'p/q'"),
    "--alpha": ("alpha", str, "left endpoint: decimal string or sqrt2, sqrt3, sqrt5, sqrt7, golden"),
    "--beta": ("beta", str, "right endpoint"),
    "--alpha2": ("alpha2", str, "left endpoint of the second interval (crossmoments)"),
    "--beta2": ("beta2", str, "right endpoint of the second interval (crossmoments)"),
    "--samples": ("samples", int, "number of Monte Carlo samples (0 allowed)"),
    "--seed": ("seed", int, "master seed; sample i uses SeedSequence(seed, spawn_key=(i,))"),
    "--mode": ("mode", str, "statistic: " + ", ".join(MODES)),
    "--bins": ("bins", int, "histogram bins on [-1, 1] (density: grid intervals)"),
    "--format": ("format", str, "output format: csv or json"),
    "--out": ("out", str, "output path (default stdout)"),
    "--workers": ("workers", int, "worker processes; results do not depend on this"),
    "--max-moment": ("max_moment", int, "highest moment order reported (at most 8)"),
    "--centering": ("centering", str, "centering of X in tuple/set/irrep modes: auto, exact, sample-mean or a rational"),
    "--cycle-type": ("cycle_type", str, "spectrum: comma-separated cycle lengths, e.g. 4 or 2,1,1"),
    "--perm": ("perm", str, "spectrum: one-line permutation, e.g. 2,3,4,1"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigenperm",
        description="Eigenangle statistics of random permutation representations.",
    )
    parser.add_argument("--schema", action="store_true", help="print the RunRecord JSON schema and exit")
    sub = parser.add_subparsers(dest="subcommand")
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", help="JSON file of config fields; flags override it")
        for flag, (dest, typ, help_) in _FLAGS.items():
            kwargs = {"dest": dest, "type": typ, "default": None, "help": help_}
            if dest == "mode":
                kwargs["choices"] = MODES
            if dest == "format":
                kwargs["choices"] = FORMATS
            p.add_argument(flag, **kwargs)
        p.add_argument("--per-sample", dest="per_sample", action=argparse.BooleanOptionalAction, default=None,
                       help="include per-sample rows (default: only for sample)")
        p.add_argument("--timing", dest="timing", action="store_true", default=None,
                       help="record wall-clock seconds (breaks bit-identical output)")
        p.add_argument("--schema", action="store_true", help="print the RunRecord JSON schema and exit")
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    data: dict = {}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file {args.config}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a JSON object")
    data["subcommand"] = args.subcommand
    for dest, _, _ in _FLAGS.values():
        value = getattr(args, dest)
        if value is not None:
            data[dest] = value
    for dest in ("per_sample", "timing"):
        if getattr(args, dest) is not None:
            data[dest] = getattr(args, dest)
    try:
        return ExperimentConfig.from_dict(data)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.schema:
        sys.stdout.write(SCHEMA_PATH.read_text(encoding="utf-8"))
        return EXIT_OK
    if args.subcommand is None:
        parser.print_usage(sys.stderr)
        return EXIT_CONFIG
    try:
        cfg = config_from_args(args)
        record = run(cfg)
    except BoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ValueError as exc:  # ConfigError and other invalid input
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    text = record.to_json() if cfg.format == "json" else record.to_csv()
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
