#!/usr/bin/env python3
"""
Command-line entry point for the localization engine.

Computes annihilators Ann(f^a) in the Weyl algebra, their truncations by
operator order and the annihilator order kappa(f^-1) of plane curves.
Commands are discovered from the commands/ package.
"""
import argparse
import asyncio
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from __version__ import __version__
from commands.context import CommandContext, RunConfig
from commands.registry import CommandRegistry
from core.errors import DModError
from core.logging_config import get_logger, set_level
from utils.report_formatter import ReportFormatter
from utils.validators import Validators

logger = get_logger("cli")


def build_parser() -> argparse.ArgumentParser:
    CommandRegistry.discover_commands()
    parser = argparse.ArgumentParser(
        prog="dmod",
        description="Annihilators of f^a in the Weyl algebra and kappa(f^-1) for plane curves",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for command_class in CommandRegistry.get_all_commands().values():
        command_class.add_parser(subparsers)
    return parser


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """Validated RunConfig from parsed flags"""
    get = lambda name, default=None: getattr(args, name, default)
    p_values = Validators.validate_range(get("p_range")) if get("p_range") else []
    return RunConfig(
        command=args.command,
        poly=get("poly"),
        variables=get("variables"),
        exponent=get("exponent", -1),
        order=get("order"),
        point=Validators.validate_point(get("point")),
        max_d=None if get("max_d") is None else Validators.validate_order(get("max_d"), "max-d", minimum=1),
        output="json" if get("json") else "text",
        jobs=Validators.validate_jobs(get("jobs")),
        p=get("p"),
        q=get("q"),
        p_values=p_values,
        q_offsets=Validators.validate_offsets(get("q_offset")),
        reuse_syzygies=get("reuse_syzygies"),
    )


async def run_command(context: CommandContext) -> dict:
    command_class = CommandRegistry.get_command(context.run.command)
    command = command_class(context)
    return await command.execute()


def _verbosity(count: int) -> None:
    if count >= 2:
        set_level(logging.DEBUG)
    elif count == 1:
        set_level(logging.INFO)


def _report_error(error: dict, as_json: bool) -> None:
    if as_json:
        print(ReportFormatter.error_json(error))
    else:
        print(ReportFormatter.error_text(error), file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)
    _verbosity(getattr(args, "verbose", 0))
    as_json = bool(getattr(args, "json", False))

    executor = None
    try:
        run = build_run_config(args)
        if run.jobs > 1:
            executor = ProcessPoolExecutor(max_workers=run.jobs)
        result = asyncio.run(run_command(CommandContext(run=run, executor=executor)))
    except DModError as e:
        logger.info(f"{args.command} failed with code {e.code}: {e.message}")
        _report_error(e.to_error_dict(), as_json)
        return e.code
    except KeyboardInterrupt:
        logger.info("Interrupted")
        return 1
    except Exception as e:
        logger.error(f"Internal error in {args.command}: {e}", exc_info=True)
        _report_error({"code": 1, "message": f"internal error: {e}"}, as_json)
        return 1
    finally:
        if executor is not None:
            executor.shutdown()

    if as_json:
        print(ReportFormatter.to_json(result["result"]))
    else:
        print(result["text"])
    return 0


if __name__ == "__main__":
    sys.exit(main())
