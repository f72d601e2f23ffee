from typing import Tuple, Union

import voluptuous as vol

import agmpy.types as t


def cv_boolean(value: Union[bool, int, str]) -> bool:
    """Validate and coerce a boolean value."""
    if isinstance(value, bool):
        return value
    if isinstance(value, str):
        value = value.lower().strip()
        if value in ("1", "true", "yes", "on", "enable"):
            return True
        if value in ("0", "false", "no", "off", "disable"):
            return False
    elif isinstance(value, int):
        return bool(value)
    raise vol.Invalid(f"invalid boolean '{value}' value")


def cv_int(value: Union[int, str]) -> int:
    """Convert a decimal or 0x-prefixed string into int."""
    if isinstance(value, bool):
        raise vol.Invalid(f"{value} is not a valid number")
    if isinstance(value, int):
        return value
    if not isinstance(value, str):
        raise vol.Invalid(f"{value} is not a valid number")

    try:
        if value.strip().lower().startswith("0x"):
            return int(value, base=16)
        return int(value)
    except ValueError:
        raise vol.Invalid(f"Could not convert '{value}' to number")


def _int_pair(value, sep: str, what: str) -> Tuple[int, int]:
    if isinstance(value, str):
        parts = value.split(sep)
    elif isinstance(value, (list, tuple)):
        parts = list(value)
    else:
        raise vol.Invalid(f"{value} is not a valid {what}")

    if len(parts) != 2:
        raise vol.Invalid(f"'{value}' is not a valid {what}")
    return cv_int(parts[0]), cv_int(parts[1])


def cv_field(value: Union[str, int, Tuple[int, int]]) -> Tuple[int, int]:
    """Parse 'p,t' (or a bare 'p') into a (p, t) pair."""
    if isinstance(value, int) or (isinstance(value, str) and "," not in value):
        p, deg = cv_int(value), 1
    else:
        p, deg = _int_pair(value, ",", "field")

    if p < 2:
        raise vol.Invalid(f"characteristic must be at least 2, got {p}")
    if deg < 1:
        raise vol.Invalid(f"extension degree must be positive, got {deg}")
    return p, deg


def cv_range(value: Union[str, Tuple[int, int]]) -> Tuple[int, int]:
    """Parse 'LO..HI' into an inclusive (lo, hi) pair."""
    lo, hi = _int_pair(value, "..", "range")
    if lo < 0 or hi < lo:
        raise vol.Invalid(f"invalid range {lo}..{hi}")
    return lo, hi


def cv_node(value: Union[str, Tuple[int, int], t.Node]) -> t.Node:
    """Parse 'a,b' or '(a,b)' into a Node."""
    if isinstance(value, t.Node):
        return value
    if isinstance(value, str):
        value = value.strip().strip("()")
    a, b = _int_pair(value, ",", "node")
    if a < 0 or b < 0:
        raise vol.Invalid(f"node coordinates must be canonical encodings: {value}")
    return t.Node(a, b)


def cv_enum(enum_type):
    """Build a validator coercing strings into enum_type members."""

    def validator(value):
        try:
            return enum_type(value)
        except ValueError:
            choices = ", ".join(m.value for m in enum_type)
            raise vol.Invalid(f"'{value}' is not one of {choices}")

    return validator


cv_congruence = cv_enum(t.CongruenceClass)
cv_direction = cv_enum(t.Direction)
cv_format = cv_enum(t.OutputFormat)
cv_command = cv_enum(t.Command)
