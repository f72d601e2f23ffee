"""agm command line."""

import argparse
import asyncio
import logging
import sys
from typing import Optional, Sequence

import voluptuous as vol

import agmpy
import agmpy.config as conf
import agmpy.exceptions
import agmpy.report
import agmpy.types as t

LOGGER = logging.getLogger(__name__)

EXIT_CONFIG_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agm", description="AGM dynamics over finite fields of odd order."
    )
    parser.add_argument("--version", action="version", version=agmpy.__version__)
    parser.add_argument(conf.CONF_COMMAND, choices=[c.value for c in t.Command])
    parser.add_argument("--field", dest=conf.CONF_FIELD, metavar="p,t")
    parser.add_argument("--range", dest=conf.CONF_RANGE, metavar="LO..HI")
    parser.add_argument(
        "--class", dest=conf.CONF_CLASS, choices=[c.value for c in t.CongruenceClass]
    )
    parser.add_argument(
        "--dir", dest=conf.CONF_DIRECTION, choices=[d.value for d in t.Direction]
    )
    parser.add_argument(
        "--format", dest=conf.CONF_FORMAT, choices=[f.value for f in t.OutputFormat]
    )
    parser.add_argument("--out", dest=conf.CONF_OUT, metavar="PATH")
    parser.add_argument("--quiet", dest=conf.CONF_QUIET, action="store_true", default=None)
    parser.add_argument("--max-q", dest=conf.CONF_MAX_Q)
    parser.add_argument("--workers", dest=conf.CONF_WORKERS)
    parser.add_argument("--node", dest=conf.CONF_NODE, metavar="a,b")
    parser.add_argument("--node-check-limit", dest=conf.CONF_NODE_CHECK_LIMIT)
    return parser


def setup_logging(quiet: bool) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.WARNING if quiet else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    # unset options must stay absent for the field/range exclusivity check
    raw = {k: v for k, v in vars(args).items() if v is not None}
    try:
        config = conf.RUN_CONFIG_SCHEMA(raw)
    except vol.Invalid as exc:
        sys.stderr.write(f"agm: invalid configuration: {exc}\n")
        return EXIT_CONFIG_ERROR

    setup_logging(config[conf.CONF_QUIET])
    command = agmpy.report.COMMANDS[config[conf.CONF_COMMAND]]
    try:
        return asyncio.run(command(config))
    except agmpy.exceptions.AgmException as exc:
        LOGGER.debug("command failed", exc_info=exc)
        sys.stderr.write(f"agm: {exc}\n")
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
