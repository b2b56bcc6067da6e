import argparse
import asyncio
import logging
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional, Sequence

from App.repchar.commands import cmd_alt, cmd_char, cmd_dim, cmd_sectors, cmd_table, cmd_verify
from App.repchar.frobenius import SPINOR_DIMENSION
from App.repchar.output import FORMATS
from App.repchar.settings import RepcharSettings, load_settings

logger = logging.getLogger(__name__)


def configure_logging(settings: RepcharSettings) -> None:
    """Rotating file log plus console; the console goes to stderr so stdout stays clean"""
    level = getattr(logging, settings.log_level)
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if settings.log_file:
        file_handler = RotatingFileHandler(settings.log_file, maxBytes=10*1024*1024, backupCount=5)
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)


def nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative")
    return value


def positive_int(text: str) -> int:
    value = nonnegative_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def alt_degree(text: str) -> int:
    value = nonnegative_int(text)
    if value > SPINOR_DIMENSION:
        raise argparse.ArgumentTypeError(f"{text!r} exceeds {SPINOR_DIMENSION}")
    return value


def build_parser() -> argparse.ArgumentParser:
    formatting = argparse.ArgumentParser(add_help=False)
    formatting.add_argument('--format', choices=FORMATS, default=None,
                            help='output format (json when omitted; char and alt then print plain text)')

    workers = argparse.ArgumentParser(add_help=False)
    workers.add_argument('--parallel', type=positive_int, default=None,
                         help='worker processes for the sector decompositions')

    parser = argparse.ArgumentParser(
        prog='repchar',
        description='SO(9) x SU(2) content of the coordinate-independent SU(2) Matrix-theory state space',
    )
    commands = parser.add_subparsers(dest='command', required=True)

    dim = commands.add_parser('dim', parents=[formatting], help='dimension of an SO(9) irrep')
    dim.add_argument('label', type=nonnegative_int, nargs=4, metavar='q')
    dim.set_defaults(handler=cmd_dim)

    char = commands.add_parser('char', parents=[formatting], help='character of an SO(9) irrep')
    char.add_argument('label', type=nonnegative_int, nargs=4, metavar='q')
    char.set_defaults(handler=cmd_char)

    alt = commands.add_parser('alt', parents=[formatting], help='character of Alt_n(spinor) and its content')
    alt.add_argument('n', type=alt_degree, help=f'0..{SPINOR_DIMENSION}')
    alt.set_defaults(handler=cmd_alt)

    table = commands.add_parser('table', parents=[formatting, workers], help='full multiplicity table')
    table.add_argument('--spin', type=int, choices=range(9), default=None, help='print one spin column')
    table.set_defaults(handler=cmd_table)

    sectors = commands.add_parser('sectors', parents=[formatting], help='boson and fermion counts per spin')
    sectors.set_defaults(handler=cmd_sectors)

    verify = commands.add_parser('verify', parents=[formatting, workers], help='run every consistency check')
    verify.set_defaults(handler=cmd_verify)
    return parser


async def main(argv: Optional[Sequence[str]] = None, settings: Optional[RepcharSettings] = None) -> int:
    """Main async entry point; returns the exit code"""
    args = build_parser().parse_args(argv)
    settings = settings or load_settings()

    logger.info("=" * 60)
    logger.info(f"repchar {args.command}")
    logger.info("=" * 60)

    try:
        return await args.handler(args, settings)
    except Exception as e:
        logger.error(f"{args.command} failed: {e}")
        return 1


if __name__ == "__main__":
    startup_settings = load_settings()
    configure_logging(startup_settings)
    sys.exit(asyncio.run(main(settings=startup_settings)))
