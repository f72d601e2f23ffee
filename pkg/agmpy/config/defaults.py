import agmpy.types as t

CONF_CLASS_DEFAULT = t.CongruenceClass.ALL
CONF_DIRECTION_DEFAULT = t.Direction.ADVANCE
CONF_MAX_Q_DEFAULT = 2 ** 20
CONF_NODE_CHECK_LIMIT_DEFAULT = 500
CONF_QUIET_DEFAULT = False
CONF_WORKERS_DEFAULT = 1

FORMAT_DEFAULTS = {
    t.Command.EXPORT: t.OutputFormat.DOT,
    t.Command.VERIFY: t.OutputFormat.TEXT,
    t.Command.COUNT: t.OutputFormat.TEXT,
    t.Command.CLASSIFY: t.OutputFormat.TEXT,
    t.Command.SCAN: t.OutputFormat.TEXT,
}
