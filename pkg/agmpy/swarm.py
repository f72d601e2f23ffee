"""Jellyfish swarms: F_K restricted to S^adv_inf and to S^back_inf."""

from collections import Counter, deque
import json
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import attr
import networkx as nx
from networkx.algorithms import isomorphism
import pydot

from agmpy.const import (
    JSON_APPENDAGES,
    JSON_COMPONENTS,
    JSON_CYCLE,
    JSON_DIRECTION,
    JSON_EDGES,
    JSON_FIELD,
    JSON_KIND,
)
import agmpy.dynamics
import agmpy.exceptions
from agmpy.field import FieldCtx
import agmpy.ratio
import agmpy.types as t
from agmpy.types import Node
import agmpy.util

LOGGER = logging.getLogger(__name__)

# Appendage shapes each cycle vertex must carry when advancement is single-valued
APPENDAGE_SHAPES = {
    t.CongruenceClass.Q_3_MOD_4: ((),),
    t.CongruenceClass.Q_5_MOD_8: (((), ()),),
}
COMPONENT_FACTOR = {
    t.CongruenceClass.Q_3_MOD_4: 2,
    t.CongruenceClass.Q_5_MOD_8: 4,
}

Appendages = Dict[Node, dict]


@attr.s(frozen=True, order=True)
class ComponentSignature:
    """Cycle length and the rotation-minimal sequence of tree shapes."""

    cycle_length: int = attr.ib()
    shapes: Tuple = attr.ib()


def tree_shape(tree: dict) -> Tuple:
    """Unlabelled shape of a nested {vertex: subtree} dict, a leaf being ()."""
    return tuple(sorted(tree_shape(sub) for sub in tree.values()))


def tree_size(tree: dict) -> int:
    return sum(1 + tree_size(sub) for sub in tree.values())


@attr.s(frozen=True)
class JellyfishComponent:
    """A cycle with the trees hanging off each of its vertices.

    The cycle is listed in functional order: along the arrows for TENTACLED
    components, against them for COLONED ones.
    """

    cycle: Tuple[Node, ...] = attr.ib(converter=tuple)
    appendages: Appendages = attr.ib(eq=False)
    kind: t.AppendageKind = attr.ib()

    @property
    def size(self) -> int:
        return len(self.cycle) + sum(tree_size(self.appendages[c]) for c in self.cycle)

    @property
    def signature(self) -> ComponentSignature:
        shapes = [tree_shape(self.appendages[c]) for c in self.cycle]
        return ComponentSignature(len(self.cycle), agmpy.util.min_rotation(shapes))

    def vertices(self) -> FrozenSet[Node]:
        found = set(self.cycle)
        stack = [self.appendages[c] for c in self.cycle]
        while stack:
            tree = stack.pop()
            found.update(tree)
            stack.extend(tree.values())
        return frozenset(found)


class SwarmGraph(agmpy.util.LocalLogMixin):
    """Restricted AGM graph; arrows always point in the advancement direction."""

    def __init__(self, ctx: FieldCtx, direction: t.Direction, graph: nx.DiGraph):
        self._ctx = ctx
        self._direction = direction
        self._graph = graph

    def log(self, lvl: int, msg: str, *args, **kwargs) -> None:
        msg = "[%s %s] " + msg
        args = (self._ctx.label, self._direction.value) + args
        return LOGGER.log(lvl, msg, *args, **kwargs)

    @property
    def ctx(self) -> FieldCtx:
        return self._ctx

    @property
    def direction(self) -> t.Direction:
        return self._direction

    @property
    def graph(self) -> nx.DiGraph:
        return self._graph

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def vertices(self) -> List[Node]:
        return sorted(self._graph.nodes)

    def edges(self) -> List[Tuple[Node, Node]]:
        return sorted(self._graph.edges)

    def functional_neighbours(self, v: Node) -> List[Node]:
        """Successors on the advance graph, predecessors on the back graph."""
        if self._direction is t.Direction.ADVANCE:
            return sorted(self._graph.successors(v))
        return sorted(self._graph.predecessors(v))

    def feeding_neighbours(self, v: Node) -> List[Node]:
        if self._direction is t.Direction.ADVANCE:
            return sorted(self._graph.predecessors(v))
        return sorted(self._graph.successors(v))

    @property
    def single_valued(self) -> bool:
        """Every vertex has exactly one functional neighbour."""
        return all(len(self.functional_neighbours(v)) == 1 for v in self._graph)

    def cyclic_vertices(self) -> FrozenSet[Node]:
        return frozenset(v for core in _cyclic_cores(self._graph) for v in core)


def _cyclic_cores(graph: nx.DiGraph) -> List[FrozenSet[Node]]:
    return [
        frozenset(scc)
        for scc in nx.strongly_connected_components(graph)
        if len(scc) > 1 or any(graph.has_edge(v, v) for v in scc)
    ]


def _lifted_vertices(ctx: FieldCtx, ks: Iterable[int]) -> List[Node]:
    return [agmpy.ratio.lift(ctx, k, a) for k in sorted(ks) for a in ctx.units()]


def build_adv_graph(
    ctx: FieldCtx, census: Optional[agmpy.ratio.KCensus] = None
) -> SwarmGraph:
    """F_K on S^adv_inf, enumerated k-value first."""
    ks = agmpy.ratio.t_adv_infinity(ctx, census)
    graph = nx.DiGraph()
    graph.add_nodes_from(_lifted_vertices(ctx, ks))
    single = ctx.congruence_class is not t.CongruenceClass.Q_1_MOD_8
    for v in list(graph.nodes):
        if single:
            graph.add_edge(v, agmpy.dynamics.unique_advance(ctx, v))
        else:
            graph.add_edges_from(
                (v, c) for c in agmpy.dynamics.children(ctx, v) if c in graph
            )
    swarm = SwarmGraph(ctx, t.Direction.ADVANCE, graph)
    swarm.debug("%s vertices, %s edges", len(swarm), graph.number_of_edges())
    return swarm


def build_back_graph(
    ctx: FieldCtx, census: Optional[agmpy.ratio.KCensus] = None
) -> SwarmGraph:
    """F_K on S^back_inf."""
    ks = agmpy.ratio.t_back_infinity(ctx, census)
    graph = nx.DiGraph()
    graph.add_nodes_from(_lifted_vertices(ctx, ks))
    single = ctx.congruence_class is not t.CongruenceClass.Q_1_MOD_8
    for v in list(graph.nodes):
        if single:
            graph.add_edge(agmpy.dynamics.unique_backtrack(ctx, v), v)
        else:
            graph.add_edges_from(
                (m, v) for m in agmpy.dynamics.parents(ctx, v) if m in graph
            )
    swarm = SwarmGraph(ctx, t.Direction.BACKTRACK, graph)
    swarm.debug("%s vertices, %s edges", len(swarm), graph.number_of_edges())
    return swarm


def build_k_graph(
    ctx: FieldCtx,
    direction: t.Direction,
    census: Optional[agmpy.ratio.KCensus] = None,
) -> nx.DiGraph:
    """G_K restricted to T^adv_inf or T^back_inf."""
    if direction is t.Direction.ADVANCE:
        ks = agmpy.ratio.t_adv_infinity(ctx, census)
    else:
        ks = agmpy.ratio.t_back_infinity(ctx, census)
    graph = nx.DiGraph()
    graph.add_nodes_from(sorted(ks))
    graph.add_edges_from(
        e.as_tuple()
        for e in agmpy.ratio.k_edges(ctx)
        if e.k1 in graph and e.k2 in graph
    )
    return graph


def k_graph_single_valued(graph: nx.DiGraph, direction: t.Direction) -> bool:
    degree = graph.out_degree if direction is t.Direction.ADVANCE else graph.in_degree
    return all(d <= 1 for _, d in degree)


def _cycle_order(g: SwarmGraph, core: FrozenSet[Node]) -> List[Node]:
    """Functional order from the minimal vertex when the core is a simple cycle."""
    start = min(core)
    order = [start]
    while True:
        nxt = [w for w in g.functional_neighbours(order[-1]) if w in core]
        if len(nxt) != 1:
            return sorted(core)
        if nxt[0] == start:
            break
        if nxt[0] in order:
            return sorted(core)
        order.append(nxt[0])
    if len(order) != len(core):
        return sorted(core)
    return order


def _attach_trees(g: SwarmGraph, core: FrozenSet[Node]) -> Appendages:
    """Breadth-first trees fed into the core, first discovery wins."""
    appendages: Appendages = {c: {} for c in core}
    placed: Dict[Node, dict] = dict(appendages)
    queue = deque(sorted(core))
    while queue:
        v = queue.popleft()
        for w in g.feeding_neighbours(v):
            if w in placed:
                continue
            placed[v][w] = {}
            placed[w] = placed[v][w]
            queue.append(w)
    return appendages


def _validate(g: SwarmGraph, comp: JellyfishComponent, vertex_count: int) -> None:
    regime = g.ctx.congruence_class
    expected = APPENDAGE_SHAPES[regime]
    for c in comp.cycle:
        if tree_shape(comp.appendages[c]) != expected:
            g.error("cycle vertex %s carries %s", c, comp.appendages[c])
            raise agmpy.exceptions.StructureViolation(
                f"cycle vertex does not carry shape {expected}", witness=c
            )
    if vertex_count != COMPONENT_FACTOR[regime] * len(comp.cycle):
        g.error("component at %s has %s vertices", comp.cycle[0], vertex_count)
        raise agmpy.exceptions.StructureViolation(
            "component size is not a fixed multiple of its cycle", witness=comp.cycle[0]
        )


def decompose(g: SwarmGraph) -> List[JellyfishComponent]:
    """Split g into jellyfish, sorted by (cycle length, minimal vertex).

    Shapes are validated unless advancement is multi-valued (q = 1 mod 8), in
    which case each core is the union of the cyclic strongly connected
    components and is not claimed to be a simple cycle.
    """
    validate = g.ctx.congruence_class is not t.CongruenceClass.Q_1_MOD_8
    if validate:
        for v in g.graph:
            if len(g.functional_neighbours(v)) != 1:
                g.error("%s has functional neighbours %s", v, g.functional_neighbours(v))
                raise agmpy.exceptions.StructureViolation(
                    "restricted graph is not single-valued", witness=v
                )

    kind = (
        t.AppendageKind.TENTACLED
        if g.direction is t.Direction.ADVANCE
        else t.AppendageKind.COLONED
    )
    cores = _cyclic_cores(g.graph)
    components = []
    for weak in nx.weakly_connected_components(g.graph):
        mine = [core for core in cores if core <= weak]
        if validate and len(mine) != 1:
            raise agmpy.exceptions.StructureViolation(
                f"component with {len(mine)} cycles", witness=min(weak)
            )
        if not mine:
            continue
        core = frozenset().union(*mine)
        cycle = _cycle_order(g, core) if len(mine) == 1 else sorted(core)
        comp = JellyfishComponent(cycle, _attach_trees(g, core), kind)
        if validate:
            _validate(g, comp, len(weak))
        components.append(comp)

    components.sort(key=lambda c: (len(c.cycle), min(c.cycle)))
    g.debug("cycle lengths %s", [len(c.cycle) for c in components])
    return components


def signature_multiset(components: Iterable[JellyfishComponent]) -> Counter:
    return Counter(c.signature for c in components)


def reversal_isomorphic(adv: SwarmGraph, back: SwarmGraph) -> bool:
    """adv and back with every arrow reversed have the same jellyfish."""
    return signature_multiset(decompose(adv)) == signature_multiset(decompose(back))


def reversal_isomorphic_oracle(adv: SwarmGraph, back: SwarmGraph) -> bool:
    """VF2 cross-check of reversal_isomorphic on whole graphs."""
    matcher = isomorphism.DiGraphMatcher(adv.graph, back.graph.reverse(copy=True))
    return matcher.is_isomorphic()


def max_tentacle_length(
    ctx: FieldCtx, census: Optional[agmpy.ratio.KCensus] = None
) -> int:
    """Computed on k-values, whose depths coincide with those of their lifts."""
    return (census or agmpy.ratio.KCensus.new(ctx)).tentacle_max()


def max_colon_length(
    ctx: FieldCtx, census: Optional[agmpy.ratio.KCensus] = None
) -> int:
    return (census or agmpy.ratio.KCensus.new(ctx)).colon_max()


def whole_graph_profile_symmetric(ctx: FieldCtx) -> bool:
    """Degree profile of G_K against that of its reversal.

    Reported as data only; a mismatch would rule out a contravariant
    self-isomorphism of the unrestricted graph.
    """
    profile = agmpy.ratio.degree_profile(ctx)
    reversed_profile = Counter({(o, i): n for (i, o), n in profile.items()})
    return profile == reversed_profile


def _dot_id(v: Node) -> str:
    return f"n_{v.a}_{v.b}"


def _export_dot(g: SwarmGraph) -> bytes:
    dot = pydot.Dot(f"F_{g.ctx.q}_{g.direction.value}", graph_type="digraph")
    cyclic = g.cyclic_vertices()
    for v in g.vertices():
        attrs = {"label": f'"{v}"'}
        if v in cyclic:
            attrs["shape"] = "doublecircle"
        dot.add_node(pydot.Node(_dot_id(v), **attrs))
    for u, w in g.edges():
        dot.add_edge(pydot.Edge(_dot_id(u), _dot_id(w)))
    text = dot.to_string()
    if not text.endswith("\n"):
        text += "\n"
    return text.encode("utf-8")


def _labelled(tree: dict) -> dict:
    return {str(v): _labelled(sub) for v, sub in sorted(tree.items())}


def _export_json(g: SwarmGraph, components: List[JellyfishComponent]) -> bytes:
    """Components as cycles with their trees.

    Trees keep one edge per vertex. Graphs where some vertex has several
    functional neighbours also carry the full edge list.
    """
    doc = {
        JSON_FIELD: {"p": g.ctx.p, "t": g.ctx.degree, "q": g.ctx.q},
        JSON_DIRECTION: g.direction.value,
        JSON_COMPONENTS: [
            {
                JSON_CYCLE: [str(v) for v in c.cycle],
                JSON_APPENDAGES: {str(v): _labelled(c.appendages[v]) for v in c.cycle},
                JSON_KIND: c.kind.value,
            }
            for c in components
        ],
    }
    if not g.single_valued:
        doc[JSON_EDGES] = [[str(u), str(w)] for u, w in g.edges()]
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def export_graph(
    g: SwarmGraph,
    fmt: t.OutputFormat,
    components: Optional[List[JellyfishComponent]] = None,
) -> bytes:
    fmt = t.OutputFormat(fmt)
    if fmt is t.OutputFormat.DOT:
        return _export_dot(g)
    if fmt is t.OutputFormat.JSON:
        if components is None:
            components = decompose(g)
        return _export_json(g, components)
    raise agmpy.exceptions.UnsupportedFormat(fmt)


@attr.s(frozen=True)
class SwarmDocument:
    field: t.FieldSpec = attr.ib()
    direction: t.Direction = attr.ib()
    components: List[JellyfishComponent] = attr.ib()
    edges: Optional[List[Tuple[Node, Node]]] = attr.ib(default=None)


def _parsed(tree: dict) -> dict:
    return {Node.parse(label): _parsed(sub) for label, sub in tree.items()}


def load_json(data: bytes) -> SwarmDocument:
    """Read back what export_graph wrote in JSON."""
    doc = json.loads(data)
    field = doc[JSON_FIELD]
    components = [
        JellyfishComponent(
            [Node.parse(v) for v in c[JSON_CYCLE]],
            {Node.parse(v): _parsed(sub) for v, sub in c[JSON_APPENDAGES].items()},
            t.AppendageKind(c[JSON_KIND]),
        )
        for c in doc[JSON_COMPONENTS]
    ]
    edges = None
    if JSON_EDGES in doc:
        edges = [(Node.parse(u), Node.parse(w)) for u, w in doc[JSON_EDGES]]
    return SwarmDocument(
        t.FieldSpec(field["p"], field["t"]),
        t.Direction(doc[JSON_DIRECTION]),
        components,
        edges,
    )
