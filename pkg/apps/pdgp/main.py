"""
pdgp command-line entry point.

Sub-commands:
  compute  evaluate an invariant on one graph
  chord    rank formula vs. face tracing for one chord diagram
  verify   identity sweeps (fourterm, theorem1, recurrence, beck, ...)
  project  evaluate a multiplicative invariant on the primitive projection
  bench    time pdgp across worker counts

Exit codes: 0 ok, 2 parse error, 3 size cap exceeded, 4 coefficient
overflow, 5 verification mismatch, 1 anything unexpected.
"""
from __future__ import annotations

import argparse
import logging
import sys

from dotenv import load_dotenv
from pydantic import ValidationError

from apps.pdgp import __version__
from apps.pdgp.commands import bench, chord, compute, project, verify
from apps.pdgp.commands.common import common_options
from apps.pdgp.core.config import apply_overrides, get_settings
from apps.pdgp.core.errors import BadParameter, PdgpError
from apps.pdgp.models.schemas import RunConfig

logger: logging.Logger = logging.getLogger("pdgp")

_COMMANDS = (compute, chord, verify, project, bench)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pdgp", description="Partial-dual genus polynomial toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    parent = common_options()
    for command in _COMMANDS:
        command.register(subparsers, parent)
    return parser


def _configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level: int | str = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = get_settings().PDGP_LOG_LEVEL.upper()
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _run_config(args: argparse.Namespace) -> RunConfig:
    threads = args.threads if args.threads is not None else get_settings().resolved_threads()
    try:
        return RunConfig(
            command=args.command,
            graph_file=getattr(args, "graph_file", None),
            edges=getattr(args, "edges", None),
            n=getattr(args, "n", None),
            word=getattr(args, "word", None),
            gen=getattr(args, "gen", None),
            invariant=getattr(args, "invariant", "pdgp"),
            threads=threads,
            cap=args.cap,
            output="json" if args.json else "text",
            seed=args.seed,
        )
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise BadParameter(f"{where}: {first['msg']}" if where else first["msg"]) from exc


def main(argv: list[str] | None = None) -> int:
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        _configure_logging(args.verbose)
        config = _run_config(args)
        try:
            apply_overrides(cap=config.cap, threads=args.threads)
        except ValueError as exc:
            raise BadParameter(str(exc)) from exc
        if config.cap is not None:
            logger.warning("Size caps overridden to %d for this run", config.cap)
        return int(args.handler(args, config))
    except PdgpError as exc:
        print(f"pdgp: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except Exception:
        logger.exception("Unexpected failure")
        return 1


if __name__ == "__main__":
    sys.exit(main())
