import abc
from collections import deque
import logging
from typing import (
    Callable,
    Dict,
    Hashable,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
)

import networkx as nx
import sympy

import agmpy.types as t

LOGGER = logging.getLogger(__name__)

V = TypeVar("V", bound=Hashable)


class LocalLogMixin:
    @abc.abstractmethod
    def log(self, lvl: int, msg: str, *args, **kwargs):  # pragma: no cover
        pass

    def _log(self, lvl: int, msg: str, *args, **kwargs):
        # We have to exclude log, _log, and info
        return self.log(lvl, msg, *args, stacklevel=4, **kwargs)

    def exception(self, msg, *args, **kwargs):
        return self._log(logging.ERROR, msg, *args, **kwargs)

    def debug(self, msg, *args, **kwargs):
        return self._log(logging.DEBUG, msg, *args, **kwargs)

    def info(self, msg, *args, **kwargs):
        return self._log(logging.INFO, msg, *args, **kwargs)

    def warning(self, msg, *args, **kwargs):
        return self._log(logging.WARNING, msg, *args, **kwargs)

    def error(self, msg, *args, **kwargs):
        return self._log(logging.ERROR, msg, *args, **kwargs)


def longest_chain_depths(
    vertices: Iterable[V],
    successors: Callable[[V], Iterable[V]],
    on_progress: Optional[Callable[[int], None]] = None,
    progress_interval: int = 0,
) -> Dict[V, t.Depth]:
    """Length of the longest successor chain leaving every vertex.

    Sinks get depth 0 and are peeled first. A vertex is finalized once all of
    its successors are, with depth one more than the deepest of them. Vertices
    never finalized reach a cycle and get INFINITY.
    Successors outside `vertices` are ignored.
    """
    vertices = list(vertices)
    members = set(vertices)
    pending: Dict[V, int] = {}
    preds: Dict[V, List[V]] = {v: [] for v in vertices}

    for count, v in enumerate(vertices, 1):
        succ = [w for w in successors(v) if w in members]
        pending[v] = len(succ)
        for w in succ:
            preds[w].append(v)
        if on_progress is not None and progress_interval and count % progress_interval == 0:
            on_progress(count)

    depth: Dict[V, t.Depth] = {}
    best: Dict[V, int] = {}
    queue = deque(v for v in vertices if pending[v] == 0)
    for v in queue:
        depth[v] = 0

    while queue:
        v = queue.popleft()
        for u in preds[v]:
            best[u] = max(best.get(u, 0), depth[v] + 1)
            pending[u] -= 1
            if pending[u] == 0:
                depth[u] = best[u]
                queue.append(u)

    for v in vertices:
        depth.setdefault(v, t.INFINITY)
    return depth


def successor_graph(start: V, successors: Callable[[V], Iterable[V]]) -> nx.DiGraph:
    """The part of an implicit digraph reachable from start."""
    graph = nx.DiGraph()
    graph.add_node(start)
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for w in successors(v):
            if w not in graph:
                frontier.append(w)
            graph.add_edge(v, w)
    return graph


def prime_power_decomposition(q: int) -> Optional[Tuple[int, int]]:
    """(p, t) with q = p**t, or None if q is not a prime power."""
    if q < 2:
        return None
    factors = sympy.factorint(q)
    if len(factors) != 1:
        return None
    ((p, deg),) = factors.items()
    return int(p), int(deg)


def prime_powers(
    lo: int, hi: int, congruence: t.CongruenceClass = t.CongruenceClass.ALL
) -> List[Tuple[int, int]]:
    """Odd prime powers in [lo, hi] admitted by congruence, ascending by q."""
    found = []
    for p in sympy.primerange(3, hi + 1):
        p = int(p)
        q, deg = p, 1
        while q <= hi:
            if q >= lo and congruence.admits(q):
                found.append((q, p, deg))
            q *= p
            deg += 1
    return [(p, deg) for _, p, deg in sorted(found)]


def min_rotation(seq: Sequence) -> Tuple:
    """Lexicographically smallest rotation of seq."""
    seq = tuple(seq)
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))
