"""
Command-line front end.

    plaplace solve --config problem.json [--starts 10] [--trace]
    plaplace check --config problem.json [--hypotheses H1,H2,H3,H4]
    plaplace constants --T 3 --m 2 --m 3 --p 3
    plaplace depend --config problem.json --format csv
    plaplace sweep --config problem.json --format csv

Exit codes: 0 success, 1 input error, 2 numerical warning.
"""
import logging
import sys
from argparse import ArgumentParser

from plaplace.cli import COMMANDS, EXIT_INPUT
from plaplace.constants import PLAPLACE_VERSION
from plaplace.datatypes import PLaplaceError

logger = logging.getLogger("plaplace")


class _ArgumentParser(ArgumentParser):
    # Usage errors are input errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _ArgumentParser(
        prog="plaplace",
        description="Discrete anisotropic p(k)-Laplacian boundary-value problems",
    )
    parser.add_argument("--version", action="version", version=PLAPLACE_VERSION)

    output = _ArgumentParser(add_help=False)
    output.add_argument("--out", default=None, help="Directory for report files (default: stdout)")
    output.add_argument("--format", choices=("json", "csv"), default="json")
    output.add_argument("-v", "--verbose", action="store_true", help="Log debug messages")

    config = _ArgumentParser(add_help=False)
    config.add_argument("--config", required=True, help="JSON problem description")
    config.add_argument("--tol", type=float, default=None, help="Gradient max-norm tolerance")
    config.add_argument("--max-iter", dest="max_iter", type=int, default=None)
    config.add_argument("--starts", type=int, default=None, help="Random multistart points")
    config.add_argument("--seed", type=int, default=None)
    config.add_argument("--workers", type=int, default=None, help="Threads for independent runs")

    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", parents=[output, config], help="Minimize the energy")
    solve.add_argument("--trace", action="store_true", help="Write the iteration trace to HDF5")

    check = commands.add_parser("check", parents=[output, config], help="Check the hypotheses")
    check.add_argument("--hypotheses", default="H1,H2,H3", help="Comma separated subset of H1,H2,H3,H4")

    constants = commands.add_parser("constants", parents=[output], help="Embedding and coercivity constants")
    constants.add_argument("--T", type=int, required=True)
    constants.add_argument("--m", type=float, action="append", help="Exponent; repeat for several")
    constants.add_argument("--p", type=float, default=2.0, help="Constant exponent p")
    constants.add_argument("--no-sharp", dest="no_sharp", action="store_true")
    constants.add_argument("--seed", type=int, default=0)

    commands.add_parser("depend", parents=[output, config], help="Continuous dependence on u")
    commands.add_parser("sweep", parents=[output, config], help="Sweep lambda across regimes")
    return parser


def setup_logging(verbose: bool = False):
    for handler in list(logger.handlers):
        if getattr(handler, "_plaplace", False):
            logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler._plaplace = True
    handler.setFormatter(logging.Formatter("%(asctime)s - %(levelname)s - %(message)s", datefmt="%H:%M:%S"))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)


def main(argv=None, stream=None):
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    try:
        return COMMANDS[args.command](args, stream or sys.stdout)
    except (PLaplaceError, ValueError, KeyError) as e:
        logger.error(str(e))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
