import argparse
import os
import sys

from dotenv import load_dotenv
from loguru import logger

from betaproc import __version__
from betaproc.cli.config import ExperimentConfig
from betaproc.cli.driver import cmd_config_template, cmd_plot, cmd_sample, cmd_verify
from betaproc.errors import BetaProcError
from betaproc.logger import Logger


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betaproc",
        description="Simulate and verify beta-Hermite and beta-Laguerre matrix processes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-file", default=None, help="Log file; defaults to $BETAPROC_LOG_FILE.")
    parser.add_argument("--verbose", action="store_true", help="Echo info messages to stderr.")
    commands = parser.add_subparsers(dest="command", required=True)

    for name, text in (("sample", "write matrix snapshots"), ("verify", "run a verification experiment")):
        command = commands.add_parser(name, help=text)
        command.add_argument("--config", required=True, help="Experiment INI file.")
        command.add_argument("--seed", type=int, default=None, help="Override the master seed.")
        command.add_argument("--out", default=None, help="Override the output directory.")
        command.add_argument("--threads", type=int, default=None, help="Cap on replicate worker threads.")
        command.add_argument("--format", choices=("csv", "json"), default=None, help="Output file format.")

    plot = commands.add_parser("plot", help="render SVG plots of measure or curve tables")
    plot.add_argument("inputs", nargs="*", help="CSV or JSON tables written by sample or verify.")
    plot.add_argument("--out", default="plots", help="Directory for the SVG files.")

    template = commands.add_parser("config-template", help="write an INI file with every default")
    template.add_argument("path", nargs="?", default="experiment.ini")
    return parser


def _load_config(args) -> ExperimentConfig:
    config = ExperimentConfig.from_ini(args.config)
    return config.with_overrides(seed=args.seed, output_dir=args.out, threads=args.threads,
                                 output_format=args.format)


def main(argv=None) -> int:
    """
    Entry point of the `betaproc` command.

    Returns 0 on success, 1 when a verification check failed and 2 on
    invalid input or I/O errors.
    """
    args = build_parser().parse_args(argv)
    load_dotenv()
    logger.remove()
    run_logger = Logger(args.log_file or os.getenv("BETAPROC_LOG_FILE"), args.verbose)
    try:
        if args.command == "sample":
            cmd_sample(_load_config(args))
            return 0
        if args.command == "verify":
            return cmd_verify(_load_config(args))
        if args.command == "plot":
            cmd_plot(args.inputs, args.out)
            return 0
        cmd_config_template(args.path)
        return 0
    except BetaProcError as e:
        run_logger.log(str(e), "error")
        print(f"error: {e}", file=sys.stderr)
        return 2
    finally:
        run_logger.close()


if __name__ == "__main__":
    sys.exit(main())
