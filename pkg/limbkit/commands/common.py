"""
    Flags and helpers shared by every subcommand.
"""
import argparse
import time
from pathlib import Path

from limbkit.config import ToolkitConfig, deep_merge, load_config


def add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--config", help="Configuration file (JSON); default $LIMBKIT_CONFIG, else the built-in design")
    parser.add_argument("--out", help="Output directory (default: <output_dir>/<timestamp> from the configuration)")
    parser.add_argument("--seed", type=int, help="Seed of every random draw (overrides the configuration)")
    parser.add_argument("--verbose", "-v", action="store_true", help="Print progress messages")
    parser.add_argument("--log-file", help="Save the log of this run to a file")


def resolve_config(args: argparse.Namespace, overrides: dict = None) -> ToolkitConfig:
    """
        Configuration with the command-line values merged last.
    """
    flags = {}
    if args.seed is not None:
        flags["seed"] = args.seed

    return load_config(args.config, deep_merge(flags, overrides or {}))


def output_dir(args: argparse.Namespace, config: ToolkitConfig) -> Path:
    if args.out:
        path = Path(args.out)
    else:
        path = config.output_dir / time.strftime("%Y%m%d-%H%M%S")
    path.mkdir(parents=True, exist_ok=True)

    return path
