import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .commands import bounds, common_parser, export, hilbert, params, table, torus_check, verify
from .config import get_settings
from .errors import ToricCodesError
from .utils import Envelope, bad, render

logger = logging.getLogger("toriccodes")

COMMANDS = [params, table, export, hilbert, torus_check, bounds, verify]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toriccodes",
        description="Parameterized evaluation codes over algebraic toric sets",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    parents = [common_parser()]
    for command in COMMANDS:
        command.add_parser(subparsers, parents)
    return parser


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else get_settings().log_level
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def execute(args: argparse.Namespace) -> Envelope:
    try:
        configure_logging(args.verbose)
        return args.run(args)
    except ToricCodesError as e:
        logger.warning("%s: %s", e.code, e.message)
        return bad(e.exit_code, e.code, e.message, e.details)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    envelope = execute(args)
    output = render(envelope, args.format)
    if args.out:
        Path(args.out).write_text(output)
    else:
        sys.stdout.write(output)
    return envelope.exit_code
