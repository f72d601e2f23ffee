"""Quotient dynamics on k = b/a.

Advancement descends to T_K = K minus {0, 1, -1} through the relation
(1 + k1)^2 k2^2 = 4 k1, and sigma(k) = (1 - k)/(1 + k) swaps the two directions.
"""

from collections import Counter
import logging
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import attr

import agmpy.dynamics
import agmpy.exceptions
from agmpy.field import FieldCtx
import agmpy.types as t
from agmpy.types import INFINITY, KEdge, Node
import agmpy.util

LOGGER = logging.getLogger(__name__)


def is_nontrivial_k(ctx: FieldCtx, k: int) -> bool:
    return k != 0 and k != 1 and k != ctx.neg(1)


def _require_k(ctx: FieldCtx, k: int) -> None:
    if not is_nontrivial_k(ctx, k):
        raise agmpy.exceptions.TrivialK(k)


def nontrivial_ks(ctx: FieldCtx) -> List[int]:
    minus_one = ctx.neg(1)
    return [k for k in ctx.elements() if k not in (0, 1, minus_one)]


def k_of(ctx: FieldCtx, n: Node) -> int:
    if not agmpy.dynamics.is_nontrivial(ctx, n):
        raise agmpy.exceptions.TrivialNode(n)
    return ctx.div(n.b, n.a)


def is_k_edge(ctx: FieldCtx, k1: int, k2: int) -> bool:
    s = ctx.add(1, k1)
    lhs = ctx.mul(ctx.mul(s, s), ctx.mul(k2, k2))
    return lhs == ctx.mul(ctx.from_int(4), k1)


def k_children(ctx: FieldCtx, k: int) -> Tuple[int, ...]:
    """Square roots of 4k/(1 + k)^2; empty exactly when k is a nonsquare."""
    _require_k(ctx, k)
    s = ctx.add(1, k)
    return ctx.sqrt_all(ctx.div(ctx.mul(ctx.from_int(4), k), ctx.mul(s, s)))


def k_parents(ctx: FieldCtx, k: int) -> Tuple[int, ...]:
    """k-values of the parents of the node (1, k)."""
    _require_k(ctx, k)
    return tuple(
        sorted(k_of(ctx, m) for m in agmpy.dynamics.parents(ctx, Node(1, k)))
    )


def sigma(ctx: FieldCtx, k: int) -> int:
    _require_k(ctx, k)
    return ctx.div(ctx.sub(1, k), ctx.add(1, k))


def lift(ctx: FieldCtx, k: int, a: int) -> Node:
    """The node (a, ka) over k."""
    _require_k(ctx, k)
    if a == 0:
        raise agmpy.exceptions.TrivialNode(Node(a, 0))
    return Node(a, ctx.mul(k, a))


def lift_edge(ctx: FieldCtx, edge: KEdge, a0: int) -> Tuple[Node, Node]:
    """Node advancement over `edge` starting at first coordinate a0."""
    a1 = ctx.mul(ctx.add(a0, ctx.mul(edge.k1, a0)), ctx.half)
    return lift(ctx, edge.k1, a0), lift(ctx, edge.k2, a1)


def lift_back_edge(ctx: FieldCtx, edge: KEdge, a1: int) -> Tuple[Node, Node]:
    """Node advancement over `edge` ending at first coordinate a1."""
    a0 = ctx.div(ctx.mul(ctx.from_int(2), a1), ctx.add(1, edge.k1))
    return lift(ctx, edge.k1, a0), lift(ctx, edge.k2, a1)


def k_edges(ctx: FieldCtx) -> Iterator[KEdge]:
    """G_K in ascending order."""
    for k1 in nontrivial_ks(ctx):
        for k2 in k_children(ctx, k1):
            yield KEdge(k1, k2)


class KCensus(agmpy.util.LocalLogMixin):
    """Exhaustive advancement and backtracking depths over T_K."""

    def __init__(self, ctx: FieldCtx, limit: Optional[int] = None):
        if limit is not None:
            ctx.require_enumerable(limit)
        self._ctx = ctx
        self._adv: Dict[int, t.Depth] = {}
        self._back: Dict[int, t.Depth] = {}

    @classmethod
    def new(cls, ctx: FieldCtx, limit: Optional[int] = None) -> "KCensus":
        census = cls(ctx, limit)
        census.run()
        return census

    def log(self, lvl: int, msg: str, *args, **kwargs) -> None:
        msg = "[%s k-census] " + msg
        args = (self._ctx.label,) + args
        return LOGGER.log(lvl, msg, *args, **kwargs)

    def run(self) -> None:
        ctx = self._ctx
        ks = nontrivial_ks(ctx)
        self._adv = agmpy.util.longest_chain_depths(ks, lambda k: k_children(ctx, k))
        self._back = agmpy.util.longest_chain_depths(ks, lambda k: k_parents(ctx, k))
        self.debug(
            "%s of %s k-values indefinitely advanceable",
            len(self.adv_set(INFINITY)),
            len(ks),
        )

    @property
    def ctx(self) -> FieldCtx:
        return self._ctx

    def adv_depth(self, k: int) -> t.Depth:
        return self._adv[k]

    def back_depth(self, k: int) -> t.Depth:
        return self._back[k]

    def adv_set(self, n: t.Depth) -> FrozenSet[int]:
        return frozenset(k for k, d in self._adv.items() if d >= n)

    def back_set(self, n: t.Depth) -> FrozenSet[int]:
        return frozenset(k for k, d in self._back.items() if d >= n)

    def cyclic_set(self) -> FrozenSet[int]:
        return self.adv_set(INFINITY) & self.back_set(INFINITY)

    def tentacle_max(self) -> int:
        return agmpy.dynamics._appendage_max(self._adv, self._back)

    def colon_max(self) -> int:
        return agmpy.dynamics._appendage_max(self._back, self._adv)


def t_adv_infinity(ctx: FieldCtx, census: Optional[KCensus] = None) -> FrozenSet[int]:
    """T^adv_inf: closed form unless q = 1 mod 8."""
    regime = ctx.congruence_class
    four = ctx.from_int(4)
    if regime is t.CongruenceClass.Q_3_MOD_4:
        return frozenset(k for k in nontrivial_ks(ctx) if ctx.is_square(k))
    if regime is t.CongruenceClass.Q_5_MOD_8:
        found = set()
        for k in nontrivial_ks(ctx):
            s = ctx.add(1, k)
            if ctx.is_fourth_power(ctx.mul(ctx.mul(four, k), ctx.mul(s, s))):
                found.add(k)
        return frozenset(found)
    return (census or KCensus.new(ctx)).adv_set(INFINITY)


def t_back_infinity(ctx: FieldCtx, census: Optional[KCensus] = None) -> FrozenSet[int]:
    """T^back_inf: 1 - k^2 a square (q = 3 mod 4) or fourth power (q = 5 mod 8)."""
    regime = ctx.congruence_class
    if regime is t.CongruenceClass.Q_1_MOD_8:
        return (census or KCensus.new(ctx)).back_set(INFINITY)
    test = ctx.is_square if regime is t.CongruenceClass.Q_3_MOD_4 else ctx.is_fourth_power
    return frozenset(
        k for k in nontrivial_ks(ctx) if test(ctx.sub(1, ctx.mul(k, k)))
    )


def verify_sigma_reversal(ctx: FieldCtx) -> bool:
    """sigma maps every edge k1 -> k2 to an edge sigma(k2) -> sigma(k1)."""
    edges = {e.as_tuple() for e in k_edges(ctx)}
    mapped = {(sigma(ctx, k2), sigma(ctx, k1)) for k1, k2 in edges}
    return mapped == edges


def sigma_identity_holds(ctx: FieldCtx, k1: int, k2: int) -> bool:
    """The edge polynomial transforms under sigma by a nonzero factor:

    s1^2 (s2 + 1)^2 - 4 s2 == 4/((1 + k1)^2 (1 + k2)^2) ((1 + k1)^2 k2^2 - 4 k1)
    with s1, s2 = sigma(k1), sigma(k2).
    """
    s1, s2 = sigma(ctx, k1), sigma(ctx, k2)
    four = ctx.from_int(4)
    p1, p2 = ctx.add(1, k1), ctx.add(1, k2)
    t2 = ctx.add(s2, 1)
    lhs = ctx.sub(ctx.mul(ctx.mul(s1, s1), ctx.mul(t2, t2)), ctx.mul(four, s2))
    factor = ctx.div(four, ctx.mul(ctx.mul(p1, p1), ctx.mul(p2, p2)))
    edge = ctx.sub(ctx.mul(ctx.mul(p1, p1), ctx.mul(k2, k2)), ctx.mul(four, k1))
    return lhs == ctx.mul(factor, edge)


def node_cycle_lengths(ctx: FieldCtx, census: Optional[KCensus] = None) -> List[int]:
    """Cycle lengths of the restricted node graph, computed over k-values.

    Requires single-valued advancement (q not 1 mod 8). Going once around a
    k-cycle k_0 .. k_{L-1} scales the first coordinate by
    c = prod (1 + k_i)/2, so each k-cycle carries (q - 1)/ord(c) node cycles
    of length L * ord(c).
    """
    if ctx.congruence_class is t.CongruenceClass.Q_1_MOD_8:
        raise agmpy.exceptions.UnsupportedCongruenceClass(ctx.q, "node_cycle_lengths")
    census = census or KCensus.new(ctx)
    cyclic = census.cyclic_set()
    adv = census.adv_set(INFINITY)
    seen = set()
    lengths = []
    for start in sorted(cyclic):
        if start in seen:
            continue
        cycle, k = [], start
        while k not in seen:
            seen.add(k)
            cycle.append(k)
            (k,) = [c for c in k_children(ctx, k) if c in adv]
        scale = 1
        for k in cycle:
            scale = ctx.mul(scale, ctx.mul(ctx.add(1, k), ctx.half))
        order = ctx.order(scale)
        lengths.extend([len(cycle) * order] * ((ctx.q - 1) // order))
    return sorted(lengths)


@attr.s
class BirationalReport:
    """Outcome of pushing every point of both curves through the maps.

    C is y^2 = 2x(1 + x^2) and Q is mu^4 = 1 - k^2.
    """

    q = attr.ib()
    curve_points = attr.ib(default=0)
    quartic_points = attr.ib(default=0)
    curve_excluded = attr.ib(factory=list)
    quartic_excluded = attr.ib(factory=list)
    outside_t = attr.ib(factory=list)
    roundtrip_failures = attr.ib(factory=list)
    diagram_failures = attr.ib(factory=list)

    @property
    def ok(self) -> bool:
        return not self.roundtrip_failures and not self.diagram_failures


def curve_points(ctx: FieldCtx) -> Iterator[Tuple[int, int]]:
    """Affine points of y^2 = 2x(1 + x^2)."""
    two = ctx.from_int(2)
    for x in ctx.elements():
        rhs = ctx.mul(ctx.mul(two, x), ctx.add(1, ctx.mul(x, x)))
        for y in ctx.sqrt_all(rhs):
            yield x, y


def quartic_points(ctx: FieldCtx) -> Iterator[Tuple[int, int]]:
    """Affine points of mu^4 = 1 - k^2."""
    for k in ctx.elements():
        rhs = ctx.sub(1, ctx.mul(k, k))
        for s in ctx.sqrt_all(rhs):
            for mu in ctx.sqrt_all(s):
                yield k, mu


def curve_to_quartic(ctx: FieldCtx, x: int, y: int) -> Optional[Tuple[int, int]]:
    """(k, mu) = ((1 - x^2)/(1 + x^2), y/(1 + x^2)); None where 1 + x^2 = 0."""
    x2 = ctx.mul(x, x)
    den = ctx.add(1, x2)
    if den == 0:
        return None
    inv = ctx.inv(den)
    return ctx.mul(ctx.sub(1, x2), inv), ctx.mul(y, inv)


def quartic_to_curve(ctx: FieldCtx, k: int, mu: int) -> Optional[Tuple[int, int]]:
    """(x, y) = (mu^2/(1 + k), 2mu/(1 + k)); None where k = -1."""
    den = ctx.add(1, k)
    if den == 0:
        return None
    inv = ctx.inv(den)
    return ctx.mul(ctx.mul(mu, mu), inv), ctx.mul(ctx.mul(ctx.from_int(2), mu), inv)


def _moebius(ctx: FieldCtx, z: int) -> Optional[int]:
    """(1 - z)/(1 + z) on all of K, None at z = -1."""
    den = ctx.add(1, z)
    if den == 0:
        return None
    return ctx.div(ctx.sub(1, z), den)


def chain_correspondence_holds(ctx: FieldCtx, x: int, y: int) -> bool:
    """sigma carries the chain x^2 -> 2x/(1+x^2) -> +-2y/(x+1)^2 of a point on C
    onto the backtracking chain through the image (k, mu) on Q.

    Points where some denominator vanishes impose nothing.
    """
    image = curve_to_quartic(ctx, x, y)
    if image is None:
        return True
    _, mu = image
    x2 = ctx.mul(x, x)
    mid = ctx.div(ctx.mul(ctx.from_int(2), x), ctx.add(1, x2))
    lhs = _moebius(ctx, mid)
    rhs = _moebius(ctx, ctx.mul(mu, mu))
    if lhs is not None and rhs is not None and lhs != rhs:
        return False

    xp1 = ctx.add(x, 1)
    plus, minus = ctx.add(1, mu), ctx.sub(1, mu)
    if xp1 == 0 or plus == 0 or minus == 0:
        return True
    ratio = ctx.div(plus, minus)
    targets = {ctx.mul(ratio, ratio), ctx.inv(ctx.mul(ratio, ratio))}
    step = ctx.div(ctx.mul(ctx.from_int(2), y), ctx.mul(xp1, xp1))
    for z in (step, ctx.neg(step)):
        image_z = _moebius(ctx, z)
        if image_z is not None and image_z not in targets:
            return False
    return True


def birational_roundtrip(ctx: FieldCtx) -> BirationalReport:
    report = BirationalReport(q=ctx.q)

    for x, y in curve_points(ctx):
        report.curve_points += 1
        image = curve_to_quartic(ctx, x, y)
        if image is None:
            report.curve_excluded.append((x, y))
            continue
        if not is_nontrivial_k(ctx, image[0]):
            report.outside_t.append((x, y))
        if quartic_to_curve(ctx, *image) != (x, y):
            report.roundtrip_failures.append((x, y))
        if not chain_correspondence_holds(ctx, x, y):
            report.diagram_failures.append((x, y))

    for k, mu in quartic_points(ctx):
        report.quartic_points += 1
        image = quartic_to_curve(ctx, k, mu)
        if image is None:
            report.quartic_excluded.append((k, mu))
            continue
        if curve_to_quartic(ctx, *image) != (k, mu):
            report.roundtrip_failures.append((k, mu))

    if not report.ok:
        LOGGER.error(
            "[%s] birational maps failed on %s",
            ctx.label,
            report.roundtrip_failures[:5] + report.diagram_failures[:5],
        )
    return report


def degree_profile(ctx: FieldCtx) -> Counter:
    """Multiset of (in-degree, out-degree) pairs over the whole of G_K."""
    out_deg: Dict[int, int] = {}
    in_deg: Dict[int, int] = {}
    for e in k_edges(ctx):
        out_deg[e.k1] = out_deg.get(e.k1, 0) + 1
        in_deg[e.k2] = in_deg.get(e.k2, 0) + 1
    return Counter(
        (in_deg.get(k, 0), out_deg.get(k, 0)) for k in nontrivial_ks(ctx)
    )
