"""Constants shared across agmpy."""

# Exhaustive enumerations log progress every this many nodes.
PROGRESS_INTERVAL = 10 ** 6

# Fields up to this order get precomputed root and character tables.
TABLE_LIMIT = 2 ** 20

# Largest order make_field accepts.
WIDTH_LIMIT = 2 ** 31

ENV_MAX_Q = "AGM_MAX_Q"

# JSON export keys
JSON_FIELD = "field"
JSON_DIRECTION = "direction"
JSON_COMPONENTS = "components"
JSON_CYCLE = "cycle"
JSON_APPENDAGES = "appendages"
JSON_KIND = "kind"
JSON_EDGES = "edges"

CSV_COUNT_COLUMNS = (
    "q",
    "p",
    "t",
    "class",
    "a_cm",
    "a_brute",
    "t_adv",
    "s_adv",
    "s_cyc",
    "cycles",
    "tentacle_max",
    "colon_max",
)

CSV_SCAN_COLUMNS = (
    "q",
    "p",
    "t",
    "class",
    "tentacle_max",
    "colon_max",
    "equal",
    "adv_single_valued",
    "back_single_valued",
)

CSV_VERIFY_COLUMNS = ("q", "statement", "status", "witness")

CSV_CLASSIFY_COLUMNS = ("q", "depth", "s_adv", "s_back")
CSV_NODE_COLUMNS = ("q", "node", "adv_depth", "back_depth", "kind")

EXPORT_FILE_TEMPLATE = "agm_F{q}_{direction}.{ext}"
