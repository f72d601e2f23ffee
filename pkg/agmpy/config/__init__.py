"""Config schemas and validation."""

import os

import voluptuous as vol

from agmpy.config.defaults import (
    CONF_CLASS_DEFAULT,
    CONF_DIRECTION_DEFAULT,
    CONF_MAX_Q_DEFAULT,
    CONF_NODE_CHECK_LIMIT_DEFAULT,
    CONF_QUIET_DEFAULT,
    CONF_WORKERS_DEFAULT,
    FORMAT_DEFAULTS,
)
from agmpy.config.validators import (
    cv_boolean,
    cv_command,
    cv_congruence,
    cv_direction,
    cv_field,
    cv_format,
    cv_int,
    cv_node,
    cv_range,
)
from agmpy.const import ENV_MAX_Q
import agmpy.types as t

CONF_COMMAND = "command"
CONF_FIELD = "field"
CONF_RANGE = "range"
CONF_CLASS = "class"
CONF_DIRECTION = "direction"
CONF_FORMAT = "format"
CONF_OUT = "out"
CONF_QUIET = "quiet"
CONF_MAX_Q = "max_q"
CONF_WORKERS = "workers"
CONF_NODE = "node"
CONF_NODE_CHECK_LIMIT = "node_check_limit"

_SELECTOR = "field_selector"

FORMATS_BY_COMMAND = {
    t.Command.EXPORT: (t.OutputFormat.DOT, t.OutputFormat.JSON),
    t.Command.VERIFY: (t.OutputFormat.TEXT, t.OutputFormat.CSV),
    t.Command.COUNT: (t.OutputFormat.TEXT, t.OutputFormat.CSV),
    t.Command.CLASSIFY: (t.OutputFormat.TEXT, t.OutputFormat.CSV),
    t.Command.SCAN: (t.OutputFormat.TEXT, t.OutputFormat.CSV),
}


def max_q_default() -> int:
    """Enumeration guard, overridable from the environment."""
    value = os.environ.get(ENV_MAX_Q)
    if value is None or not value.strip():
        return CONF_MAX_Q_DEFAULT
    max_q = cv_int(value)
    if max_q < 3:
        raise vol.Invalid(f"{ENV_MAX_Q} must be at least 3, got {max_q}")
    return max_q


def _require_selector(config: dict) -> dict:
    if config.get(CONF_FIELD) is None and config.get(CONF_RANGE) is None:
        raise vol.Invalid(f"one of '{CONF_FIELD}' or '{CONF_RANGE}' is required")
    return config


def _resolve_format(config: dict) -> dict:
    command = config[CONF_COMMAND]
    fmt = config.get(CONF_FORMAT)
    if fmt is None:
        return {**config, CONF_FORMAT: FORMAT_DEFAULTS[command]}
    if fmt not in FORMATS_BY_COMMAND[command]:
        raise vol.Invalid(f"format '{fmt}' is not available for '{command}'")
    return config


def _check_node(config: dict) -> dict:
    if config.get(CONF_NODE) is not None and config[CONF_COMMAND] != t.Command.CLASSIFY:
        raise vol.Invalid(f"'{CONF_NODE}' only applies to 'classify'")
    if config.get(CONF_NODE) is not None and config.get(CONF_FIELD) is None:
        raise vol.Invalid(f"'{CONF_NODE}' requires an explicit '{CONF_FIELD}'")
    return config


SCHEMA_RUN = vol.Schema(
    {
        vol.Required(CONF_COMMAND): cv_command,
        vol.Exclusive(CONF_FIELD, _SELECTOR): vol.Any(None, cv_field),
        vol.Exclusive(CONF_RANGE, _SELECTOR): vol.Any(None, cv_range),
        vol.Optional(CONF_CLASS, default=CONF_CLASS_DEFAULT): cv_congruence,
        vol.Optional(CONF_DIRECTION, default=CONF_DIRECTION_DEFAULT): cv_direction,
        vol.Optional(CONF_FORMAT, default=None): vol.Any(None, cv_format),
        vol.Optional(CONF_OUT, default=None): vol.Any(None, str),
        vol.Optional(CONF_QUIET, default=CONF_QUIET_DEFAULT): cv_boolean,
        vol.Optional(CONF_MAX_Q, default=max_q_default): vol.All(
            cv_int, vol.Range(min=3)
        ),
        vol.Optional(CONF_WORKERS, default=CONF_WORKERS_DEFAULT): vol.All(
            cv_int, vol.Range(min=1)
        ),
        vol.Optional(CONF_NODE, default=None): vol.Any(None, cv_node),
        vol.Optional(
            CONF_NODE_CHECK_LIMIT, default=CONF_NODE_CHECK_LIMIT_DEFAULT
        ): vol.All(cv_int, vol.Range(min=0)),
    }
)

RUN_CONFIG_SCHEMA = vol.All(SCHEMA_RUN, _require_selector, _check_node, _resolve_format)
