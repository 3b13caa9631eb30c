"""
    Command-line entry point: ``limbkit <command> [--config PATH] [--out DIR] [--seed N] [flags]``.

    Exit codes: 0 success, 1 configuration, usage or input error, 2 infeasible or unsafe design, 3 numerical
    divergence.
"""
import argparse
import logging
import sys
from typing import List, Optional

from limbkit import __version__
from limbkit.commands import COMMANDS
from limbkit.errors import LimbkitError, NumericalDivergence
from limbkit.utils.reporter import get_reporter

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DIVERGED = 3


class ArgumentParser(argparse.ArgumentParser):
    """
        argparse exits 2 on usage errors; here they are configuration errors and exit 1.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="limbkit", description="Design toolkit for a linear-actuated transfemoral "
                                                        "prosthesis with a series elastic actuator.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=ArgumentParser)
    sub.required = True
    for command in COMMANDS:
        command.add_subparser(sub)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    reporter = get_reporter()
    reporter.set_verbose(args.verbose)

    try:
        return args.func(args)
    except NumericalDivergence as e:
        reporter.log(logging.ERROR, str(e))
        return EXIT_DIVERGED
    except LimbkitError as e:
        reporter.log(logging.ERROR, str(e))
        return EXIT_ERROR
    finally:
        if args.log_file:
            reporter.save_log(args.log_file)


if __name__ == "__main__":
    sys.exit(main())
