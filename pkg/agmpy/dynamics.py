"""Node-level AGM dynamics on S_K.

A node (a, b) advances to ((a + b)/2, d) for each square root d of ab, and
backtracks to the two orderings of the roots of x^2 - 2ax + b^2.
"""

import logging
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx

from agmpy.const import PROGRESS_INTERVAL
import agmpy.exceptions
from agmpy.field import FieldCtx
import agmpy.types as t
from agmpy.types import INFINITY, Node
import agmpy.util

LOGGER = logging.getLogger(__name__)


def is_nontrivial(ctx: FieldCtx, n: Node) -> bool:
    a, b = n
    return a != 0 and b != 0 and ctx.add(a, b) != 0 and a != b


def _require_nontrivial(ctx: FieldCtx, n: Node) -> None:
    if not is_nontrivial(ctx, n):
        raise agmpy.exceptions.TrivialNode(n)


def nontrivial_nodes(ctx: FieldCtx) -> Iterator[Node]:
    """S_K in ascending encoding order."""
    for a in ctx.units():
        minus_a = ctx.neg(a)
        for b in ctx.units():
            if b != a and b != minus_a:
                yield Node(a, b)


def children(ctx: FieldCtx, n: Node) -> Tuple[Node, ...]:
    """Both AGM children of n, or () when ab is not a square."""
    _require_nontrivial(ctx, n)
    a, b = n
    roots = ctx.sqrt_all(ctx.mul(a, b))
    if not roots:
        return ()
    gamma = ctx.mul(ctx.add(a, b), ctx.half)
    return tuple(Node(gamma, d) for d in roots)


def parents(ctx: FieldCtx, n: Node) -> Tuple[Node, ...]:
    """Both parents of n, each the reversal of the other, or ()."""
    _require_nontrivial(ctx, n)
    a, b = n
    roots = ctx.sqrt_all(ctx.sub(ctx.mul(a, a), ctx.mul(b, b)))
    if not roots:
        return ()
    r = roots[0]
    x1, x2 = ctx.add(a, r), ctx.sub(a, r)
    return tuple(sorted((Node(x1, x2), Node(x2, x1))))


def descendants(ctx: FieldCtx, n: Node, steps: int) -> FrozenSet[Node]:
    """Nodes reachable from n in exactly `steps` advancements."""
    layer = {n}
    for _ in range(steps):
        layer = {c for m in layer for c in children(ctx, m)}
    return frozenset(layer)


def ancestors(ctx: FieldCtx, n: Node, steps: int) -> FrozenSet[Node]:
    """Nodes m with n among the descendants of m after `steps` advancements."""
    layer = {n}
    for _ in range(steps):
        layer = {c for m in layer for c in parents(ctx, m)}
    return frozenset(layer)


def _depth(ctx: FieldCtx, n: Node, step, cap: Optional[int]) -> t.Depth:
    _require_nontrivial(ctx, n)
    if cap is None:
        cap = 2 * ctx.q
    if cap < 2:
        raise ValueError(f"depth cap must be at least 2, got {cap}")

    region = agmpy.util.successor_graph(n, lambda m: step(ctx, m))
    # every vertex of region descends from n, so the longest path starts there
    if not nx.is_directed_acyclic_graph(region):
        return INFINITY
    return min(nx.dag_longest_path_length(region), cap)


def adv_depth(ctx: FieldCtx, n: Node, cap: Optional[int] = None) -> t.Depth:
    """Length of the longest advancement chain from n.

    INFINITY iff some descendant lies on a cycle. Finite depths are clipped
    to `cap` (default 2q).
    """
    return _depth(ctx, n, children, cap)


def back_depth(ctx: FieldCtx, n: Node, cap: Optional[int] = None) -> t.Depth:
    """Length of the longest backtracking chain ending at n."""
    return _depth(ctx, n, parents, cap)


def classify(ctx: FieldCtx, n: Node) -> t.AdvClass:
    return t.AdvClass(adv_depth(ctx, n), back_depth(ctx, n))


def criterion_source(ctx: FieldCtx) -> t.CriterionSource:
    if ctx.congruence_class is t.CongruenceClass.Q_1_MOD_8:
        return t.CriterionSource.ORACLE_ONLY
    return t.CriterionSource.CLOSED_FORM


def adv_criterion_value(ctx: FieldCtx, n: Node) -> int:
    """4ab(a + b)^2."""
    a, b = n
    s = ctx.add(a, b)
    return ctx.mul(ctx.mul(ctx.from_int(4), ctx.mul(a, b)), ctx.mul(s, s))


def back_criterion_value(ctx: FieldCtx, n: Node) -> int:
    """a^2(a^2 - b^2)."""
    a, b = n
    a2 = ctx.mul(a, a)
    return ctx.mul(a2, ctx.sub(a2, ctx.mul(b, b)))


def is_adv_infinite_criterion(ctx: FieldCtx, n: Node) -> bool:
    _require_nontrivial(ctx, n)
    regime = ctx.congruence_class
    if regime is t.CongruenceClass.Q_3_MOD_4:
        return ctx.is_square(ctx.mul(n.a, n.b))
    if regime is t.CongruenceClass.Q_5_MOD_8:
        return ctx.is_fourth_power(adv_criterion_value(ctx, n))
    return adv_depth(ctx, n) == INFINITY


def is_back_infinite_criterion(ctx: FieldCtx, n: Node) -> bool:
    _require_nontrivial(ctx, n)
    regime = ctx.congruence_class
    if regime is t.CongruenceClass.Q_3_MOD_4:
        a, b = n
        return ctx.is_square(ctx.sub(ctx.mul(a, a), ctx.mul(b, b)))
    if regime is t.CongruenceClass.Q_5_MOD_8:
        return ctx.is_fourth_power(back_criterion_value(ctx, n))
    return back_depth(ctx, n) == INFINITY


def unique_advance(ctx: FieldCtx, n: Node) -> Node:
    """The one child of an indefinitely advanceable node that stays so."""
    if ctx.congruence_class is t.CongruenceClass.Q_1_MOD_8:
        raise agmpy.exceptions.UnsupportedCongruenceClass(ctx.q, "unique_advance")
    if not is_adv_infinite_criterion(ctx, n):
        raise agmpy.exceptions.NotInfinitelyAdvanceable(n)

    candidates = [c for c in children(ctx, n) if is_adv_infinite_criterion(ctx, c)]
    if len(candidates) > 1:
        LOGGER.error("[%s] ambiguous advancement of %s: %s", ctx.label, n, candidates)
        raise agmpy.exceptions.AmbiguousAdvance(n, candidates)
    if not candidates:
        raise agmpy.exceptions.StructureViolation(
            "indefinitely advanceable node without such a child", witness=n
        )
    return candidates[0]


def unique_backtrack(ctx: FieldCtx, n: Node) -> Node:
    """The one parent of an indefinitely backtrackable node that stays so."""
    if ctx.congruence_class is t.CongruenceClass.Q_1_MOD_8:
        raise agmpy.exceptions.UnsupportedCongruenceClass(ctx.q, "unique_backtrack")
    if not is_back_infinite_criterion(ctx, n):
        raise agmpy.exceptions.NotInfinitelyBacktrackable(n)

    candidates = [m for m in parents(ctx, n) if is_back_infinite_criterion(ctx, m)]
    if len(candidates) > 1:
        LOGGER.error("[%s] ambiguous backtracking of %s: %s", ctx.label, n, candidates)
        raise agmpy.exceptions.AmbiguousBacktrack(n, candidates)
    if not candidates:
        raise agmpy.exceptions.StructureViolation(
            "indefinitely backtrackable node without such a parent", witness=n
        )
    return candidates[0]


def inheritance_identity_holds(ctx: FieldCtx, parent: Node, child: Node) -> bool:
    """ab(a + b)(a - b)^2 == 8 g d^2 (g + d)(g - d) along an advancement."""
    a, b = parent
    g, d = child
    diff = ctx.sub(a, b)
    lhs = ctx.mul(ctx.mul(ctx.mul(a, b), ctx.add(a, b)), ctx.mul(diff, diff))
    rhs = ctx.mul(
        ctx.mul(ctx.from_int(8), ctx.mul(g, ctx.mul(d, d))),
        ctx.mul(ctx.add(g, d), ctx.sub(g, d)),
    )
    return lhs == rhs


def parent_identity_holds(ctx: FieldCtx, parent: Node, child: Node) -> bool:
    """4a^2 - 4b^2 of the child equals the squared difference of the parent."""
    four = ctx.from_int(4)
    a, b = child
    lhs = ctx.sub(ctx.mul(four, ctx.mul(a, a)), ctx.mul(four, ctx.mul(b, b)))
    diff = ctx.sub(*parent)
    return lhs == ctx.mul(diff, diff)


def twice_backtrack_identity_holds(ctx: FieldCtx, grandparent: Node, n: Node) -> bool:
    """a^2(a^2 - b^2) == ((a'' - b'')/4)^4 for any grandparent (a'', b'')."""
    x = ctx.mul(ctx.sub(*grandparent), ctx.inv(ctx.from_int(4)))
    return back_criterion_value(ctx, n) == ctx.pow(x, 4)


def sibling_product(ctx: FieldCtx, n: Node) -> Optional[Tuple[int, int]]:
    """(A, B) for the two children (a1, b1), (a1, -b1) of n.

    A = ((a1 + b1)/2)^2 a1 b1 and B = ((a1 - b1)/2)^2 a1 (-b1); their product
    equals -((a - b)/4)^4 (a1 b1)^2.
    """
    kids = children(ctx, n)
    if not kids:
        return None
    a1, b1 = kids[0]
    half = ctx.half
    plus = ctx.mul(ctx.add(a1, b1), half)
    minus = ctx.mul(ctx.sub(a1, b1), half)
    prod = ctx.mul(a1, b1)
    big_a = ctx.mul(ctx.mul(plus, plus), prod)
    big_b = ctx.mul(ctx.mul(minus, minus), ctx.neg(prod))
    return big_a, big_b


def sibling_product_identity_holds(ctx: FieldCtx, n: Node) -> bool:
    pair = sibling_product(ctx, n)
    if pair is None:
        return True
    a1, b1 = children(ctx, n)[0]
    quarter = ctx.mul(ctx.sub(*n), ctx.inv(ctx.from_int(4)))
    prod = ctx.mul(a1, b1)
    expected = ctx.neg(ctx.mul(ctx.pow(quarter, 4), ctx.mul(prod, prod)))
    return ctx.mul(*pair) == expected


def parental_backtrackability_holds(ctx: FieldCtx, n: Node) -> bool:
    """Either both parents of n have parents of their own or neither does."""
    return len({bool(parents(ctx, m)) for m in parents(ctx, n)}) <= 1


class NodeCensus(agmpy.util.LocalLogMixin):
    """Exhaustive advancement and backtracking depths over all of S_K."""

    def __init__(self, ctx: FieldCtx, limit: Optional[int] = None):
        if limit is not None:
            ctx.require_enumerable(limit)
        self._ctx = ctx
        self._adv: Dict[Node, t.Depth] = {}
        self._back: Dict[Node, t.Depth] = {}

    @classmethod
    def new(cls, ctx: FieldCtx, limit: Optional[int] = None) -> "NodeCensus":
        census = cls(ctx, limit)
        census.run()
        return census

    def log(self, lvl: int, msg: str, *args, **kwargs) -> None:
        msg = "[%s census] " + msg
        args = (self._ctx.label,) + args
        return LOGGER.log(lvl, msg, *args, **kwargs)

    def _progress(self, count: int) -> None:
        self.info("%s nodes visited", count)

    def run(self) -> None:
        ctx = self._ctx
        nodes = list(nontrivial_nodes(ctx))
        self.debug("classifying %s nodes", len(nodes))
        self._adv = agmpy.util.longest_chain_depths(
            nodes,
            lambda n: children(ctx, n),
            on_progress=self._progress,
            progress_interval=PROGRESS_INTERVAL,
        )
        self._back = agmpy.util.longest_chain_depths(
            nodes,
            lambda n: parents(ctx, n),
            on_progress=self._progress,
            progress_interval=PROGRESS_INTERVAL,
        )
        self.debug("done: %s indefinitely advanceable", len(self.adv_set(INFINITY)))

    @property
    def ctx(self) -> FieldCtx:
        return self._ctx

    @property
    def population(self) -> int:
        return len(self._adv)

    def adv_depth(self, n: Node) -> t.Depth:
        return self._adv[n]

    def back_depth(self, n: Node) -> t.Depth:
        return self._back[n]

    def classify(self, n: Node) -> t.AdvClass:
        return t.AdvClass(self._adv[n], self._back[n])

    def adv_set(self, n: t.Depth) -> FrozenSet[Node]:
        """S^adv_n: nodes advanceable at least n times."""
        return frozenset(v for v, d in self._adv.items() if d >= n)

    def back_set(self, n: t.Depth) -> FrozenSet[Node]:
        return frozenset(v for v, d in self._back.items() if d >= n)

    def cyclic_set(self) -> FrozenSet[Node]:
        return self.adv_set(INFINITY) & self.back_set(INFINITY)

    def tentacle_max(self) -> int:
        return _appendage_max(self._adv, self._back)

    def colon_max(self) -> int:
        return _appendage_max(self._back, self._adv)

    def nodes(self) -> List[Node]:
        return sorted(self._adv)


def _appendage_max(forward: Dict, backward: Dict) -> int:
    """Smallest n with S^fwd_inf & S^bwd_n equal to the cyclic set."""
    depths = [
        backward[v] + 1
        for v, d in forward.items()
        if d == INFINITY and backward[v] != INFINITY
    ]
    return int(max(depths, default=0))
