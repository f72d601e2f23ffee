import enum
import math
from typing import Union

# Longest-chain length, or INFINITY for chains that never end.
INFINITY = math.inf
Depth = Union[int, float]

# Canonical encoding of a field element: the integer itself for prime fields,
# sum(c_i * p**i) over the coefficient vector for extension fields.
FieldElement = int


def is_infinite(depth: Depth) -> bool:
    return depth == INFINITY


class enum_str(str, enum.Enum):
    """String enum parsed case-insensitively."""

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            lowered = value.lower().strip()
            for member in cls:
                if member.value == lowered or member.name.lower() == lowered:
                    return member
        return None

    def __str__(self):
        return self.value


class ResidueClass(enum_str):
    ZERO = "zero"
    FOURTH_POWER = "fourth_power"
    SQUARE_NOT_FOURTH = "square_not_fourth"
    NONSQUARE = "nonsquare"

    @property
    def is_square(self) -> bool:
        return self in (ResidueClass.FOURTH_POWER, ResidueClass.SQUARE_NOT_FOURTH)


class CongruenceClass(enum_str):
    """Regimes of q the dynamics distinguishes."""

    ALL = "all"
    Q_3_MOD_4 = "3mod4"
    Q_5_MOD_8 = "5mod8"
    Q_1_MOD_8 = "1mod8"

    @classmethod
    def of_order(cls, q: int) -> "CongruenceClass":
        if q % 4 == 3:
            return cls.Q_3_MOD_4
        if q % 8 == 5:
            return cls.Q_5_MOD_8
        return cls.Q_1_MOD_8

    def admits(self, q: int) -> bool:
        return self is CongruenceClass.ALL or CongruenceClass.of_order(q) is self


class Direction(enum_str):
    ADVANCE = "adv"
    BACKTRACK = "back"
    BOTH = "both"


class AppendageKind(enum_str):
    TENTACLED = "tentacled"
    COLONED = "coloned"


class CriterionSource(enum_str):
    CLOSED_FORM = "closed_form"
    ORACLE_ONLY = "oracle_only"


class OutputFormat(enum_str):
    DOT = "dot"
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class Command(enum_str):
    VERIFY = "verify"
    COUNT = "count"
    CLASSIFY = "classify"
    EXPORT = "export"
    SCAN = "scan"


class CheckStatus(enum_str):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"

    @classmethod
    def of(cls, ok: bool) -> "CheckStatus":
        return cls.PASS if ok else cls.FAIL
