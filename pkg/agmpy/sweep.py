"""Run one job per selected field."""

import asyncio
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
import functools
import logging
from typing import Any, Callable, List, Tuple

import agmpy.config as conf
from agmpy.field import make_field
import agmpy.util

LOGGER = logging.getLogger(__name__)


def selected_fields(config: dict) -> List[Tuple[int, int]]:
    """Explicit field, or every odd prime power in range, ascending by q."""
    field = config.get(conf.CONF_FIELD)
    if field is not None:
        # raises on an invalid field before any worker starts
        make_field(*field)
        return [field]
    lo, hi = config[conf.CONF_RANGE]
    return agmpy.util.prime_powers(lo, hi, config[conf.CONF_CLASS])


class Sweep(agmpy.util.LocalLogMixin):
    """Field scheduler."""

    def __init__(self, fields: List[Tuple[int, int]], workers: int = 1):
        self._fields = fields
        self._workers = workers

    @classmethod
    def new(cls, config: dict) -> "Sweep":
        return cls(selected_fields(config), config[conf.CONF_WORKERS])

    @property
    def fields(self) -> List[Tuple[int, int]]:
        return self._fields

    def log(self, lvl: int, msg: str, *args, **kwargs) -> None:
        return LOGGER.log(lvl, "[sweep] " + msg, *args, **kwargs)

    def _executor(self) -> Executor:
        if self._workers > 1:
            return ProcessPoolExecutor(max_workers=self._workers)
        return ThreadPoolExecutor(max_workers=1)

    async def run(self, job: Callable[..., Any], *args) -> List[Any]:
        """job(p, t, *args) for every field; results come back in field order."""
        if not self._fields:
            self.warning("no field matches the selection")
            return []
        self.info("%s fields on %s worker(s)", len(self._fields), self._workers)
        loop = asyncio.get_running_loop()
        with self._executor() as executor:
            futures = [
                loop.run_in_executor(executor, functools.partial(job, p, deg, *args))
                for p, deg in self._fields
            ]
            results = await asyncio.gather(*futures)
        self.debug("done")
        return list(results)
