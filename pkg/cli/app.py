"""
Argument parsing and error-to-exit-code mapping for the command line.

    securecut bound    NET.json [--cut S,A] [--q 101] [--seed 0]
    securecut code     NET.json [--trials 10000]
    securecut verify   NET.json --code CODE.json
    securecut simulate NET.json --code CODE.json --T 100
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from core.errors import ConstructionError, FieldError, InputError, LimitError, SecureCutError
from core.network import DEFAULT_NODE_CAP
from core.rankmax import DEFAULT_ENUM_CAP, DEFAULT_RETRIES

from cli.commands import COMMANDS
from cli.schemas import RunConfig


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONSTRUCTION = 3


def _node_list(text: str) -> List[str]:
    nodes = [node.strip() for node in text.split(",") if node.strip()]
    if not nodes:
        raise argparse.ArgumentTypeError("expected a comma-separated node list, e.g. S,A")
    return nodes


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="securecut",
        description="Cut-set secrecy bounds with backward edges, and codes that meet them.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="network JSON file")
    common.add_argument("--q", type=int, default=None, help="field size (prime); default: smallest safe prime")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cut", type=_node_list, default=None, help="source-side nodes, e.g. S,A")
    common.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    common.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    common.add_argument("--retries", type=int, default=DEFAULT_RETRIES)
    common.add_argument("--out", default=None, help="output file; stdout when omitted")
    common.add_argument("-v", "--verbose", action="count", default=0, dest="verbosity")

    subparsers.add_parser("bound", parents=[common], help="best reverse-edge cut-set bound")
    code = subparsers.add_parser("code", parents=[common], help="construct and certify a secure code")
    code.add_argument("--trials", type=int, default=0, help="Monte Carlo draws of G for the failure rate")
    verify = subparsers.add_parser("verify", parents=[common], help="check a code against its wiretap sets")
    verify.add_argument("--code", required=True)
    simulate = subparsers.add_parser("simulate", parents=[common], help="run a code with unit edge delays")
    simulate.add_argument("--code", required=True)
    simulate.add_argument("--T", type=int, default=10, dest="T")
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    args = create_parser().parse_args(argv)
    return RunConfig(**{key: value for key, value in vars(args).items() if value is not None})


def exit_code_for(exc: Exception) -> int:
    if isinstance(exc, ConstructionError):
        return EXIT_CONSTRUCTION
    if isinstance(exc, (InputError, LimitError, FieldError, ValidationError)):
        return EXIT_INPUT
    raise exc


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def run(config: RunConfig) -> int:
    try:
        return COMMANDS[config.subcommand](config)
    except (SecureCutError, ValidationError) as exc:
        code = exit_code_for(exc)
        print(f"error: {exc}", file=sys.stderr)
        diagnostics = getattr(exc, "diagnostics", None)
        if diagnostics:
            for entry in diagnostics:
                print(f"  {entry}", file=sys.stderr)
        return code


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    configure_logging(config.verbosity)
    logger.debug("run config: %s", config.model_dump())
    return run(config)
