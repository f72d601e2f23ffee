import json

import networkx as nx
import pytest

import agmpy.exceptions
from agmpy.field import make_field
import agmpy.ratio
import agmpy.swarm as swarm
import agmpy.types as t
from agmpy.types import Node

F7_CYCLE = [Node(1, 2), Node(5, 3), Node(4, 1), Node(6, 5), Node(2, 4), Node(3, 6)]


@pytest.fixture
def adv7():
    return swarm.build_adv_graph(make_field(7))


@pytest.fixture
def back7():
    return swarm.build_back_graph(make_field(7))


@pytest.fixture(scope="module")
def graphs29():
    ctx = make_field(29)
    census = agmpy.ratio.KCensus.new(ctx)
    return swarm.build_adv_graph(ctx, census), swarm.build_back_graph(ctx, census)


def test_tree_shape():
    assert swarm.tree_shape({}) == ()
    assert swarm.tree_shape({Node(1, 4): {}}) == ((),)
    y_tree = {Node(1, 2): {Node(3, 4): {}, Node(5, 6): {}}}
    assert swarm.tree_shape(y_tree) == (((), ()),)
    assert swarm.tree_size(y_tree) == 3


def test_adv_graph_f7(adv7):
    assert len(adv7) == 12
    assert adv7.graph.number_of_edges() == 12
    assert adv7.direction is t.Direction.ADVANCE
    assert adv7.single_valued
    assert adv7.functional_neighbours(Node(1, 4)) == [Node(6, 5)]
    assert adv7.feeding_neighbours(Node(6, 5)) == [Node(1, 4), Node(4, 1)]
    assert adv7.cyclic_vertices() == frozenset(F7_CYCLE)

    # (1,4) -> (6,5) -> (2,4) -> (3,6) -> (1,2) -> (5,3) -> (4,1) -> (6,5)
    chain = [Node(1, 4), Node(6, 5), Node(2, 4), Node(3, 6), Node(1, 2), Node(5, 3)]
    chain += [Node(4, 1), Node(6, 5)]
    for u, w in zip(chain, chain[1:]):
        assert adv7.graph.has_edge(u, w)


def test_back_graph_f7(back7):
    assert len(back7) == 12
    assert back7.single_valued
    assert all(d == 1 for _, d in back7.graph.in_degree)
    assert back7.functional_neighbours(Node(1, 2)) == [Node(3, 6)]
    assert back7.cyclic_vertices() == frozenset(F7_CYCLE)


def test_decompose_f7(adv7):
    (comp,) = swarm.decompose(adv7)
    assert list(comp.cycle) == F7_CYCLE
    assert comp.kind is t.AppendageKind.TENTACLED
    assert comp.appendages[Node(6, 5)] == {Node(1, 4): {}}
    assert comp.size == 12
    assert comp.vertices() == frozenset(adv7.graph)
    assert comp.signature == swarm.ComponentSignature(6, (((),),) * 6)


def test_decompose_back_f7(back7):
    (comp,) = swarm.decompose(back7)
    assert comp.kind is t.AppendageKind.COLONED
    # functional order runs against the arrows
    assert list(comp.cycle) == [F7_CYCLE[0]] + F7_CYCLE[:0:-1]
    assert comp.size == 12


def test_decompose_f29(graphs29):
    adv, back = graphs29
    assert len(adv) == len(back) == 224
    adv_components = swarm.decompose(adv)
    assert [len(c.cycle) for c in adv_components] == [7, 7, 7, 7, 28]
    for comp in adv_components:
        assert comp.size == 4 * len(comp.cycle)
        for c in comp.cycle:
            assert swarm.tree_shape(comp.appendages[c]) == (((), ()),)
    assert len(adv.cyclic_vertices()) == 56
    assert adv.cyclic_vertices() == back.cyclic_vertices()
    assert swarm.reversal_isomorphic(adv, back)


def test_decompose_empty():
    g = swarm.build_adv_graph(make_field(13))
    assert len(g) == 0
    assert swarm.decompose(g) == []


def test_decompose_rejects_branching():
    ctx = make_field(7)
    graph = nx.DiGraph()
    graph.add_edges_from(
        [(Node(1, 2), Node(5, 3)), (Node(5, 3), Node(1, 2)), (Node(1, 2), Node(1, 4))]
    )
    g = swarm.SwarmGraph(ctx, t.Direction.ADVANCE, graph)
    with pytest.raises(agmpy.exceptions.StructureViolation):
        swarm.decompose(g)


def test_decompose_rejects_shape():
    ctx = make_field(7)
    graph = nx.DiGraph()
    graph.add_edges_from([(Node(1, 2), Node(5, 3)), (Node(5, 3), Node(1, 2))])
    g = swarm.SwarmGraph(ctx, t.Direction.ADVANCE, graph)
    with pytest.raises(agmpy.exceptions.StructureViolation) as exc:
        swarm.decompose(g)
    assert exc.value.witness in (Node(1, 2), Node(5, 3))


@pytest.mark.parametrize("p, deg", ((7, 1), (11, 1), (19, 1), (3, 3), (29, 1), (37, 1)))
def test_reversal_isomorphic(p, deg):
    ctx = make_field(p, deg)
    adv = swarm.build_adv_graph(ctx)
    back = swarm.build_back_graph(ctx)
    assert swarm.reversal_isomorphic(adv, back)


@pytest.mark.parametrize("p", (7, 11, 19))
def test_reversal_isomorphic_oracle(p):
    ctx = make_field(p)
    assert swarm.reversal_isomorphic_oracle(
        swarm.build_adv_graph(ctx), swarm.build_back_graph(ctx)
    )


def test_multivalued_graphs():
    ctx = make_field(17)
    census = agmpy.ratio.KCensus.new(ctx)
    adv = swarm.build_adv_graph(ctx, census)
    assert len(adv) == 16 * len(census.adv_set(t.INFINITY))
    # no shape claim, but every core is still found
    components = swarm.decompose(adv)
    assert sum(len(c.cycle) for c in components) == len(adv.cyclic_vertices())


def test_k_graph_f113_not_single_valued():
    ctx = make_field(113)
    census = agmpy.ratio.KCensus.new(ctx)
    adv = swarm.build_k_graph(ctx, t.Direction.ADVANCE, census)
    back = swarm.build_k_graph(ctx, t.Direction.BACKTRACK, census)
    for k in (9, 88, 26, 100):
        assert adv.out_degree(k) >= 2
    for k in (46, 67, 20, 93):
        assert back.in_degree(k) >= 2
    assert not swarm.k_graph_single_valued(adv, t.Direction.ADVANCE)
    assert not swarm.k_graph_single_valued(back, t.Direction.BACKTRACK)


def test_k_graph_single_valued_f29():
    ctx = make_field(29)
    for direction in (t.Direction.ADVANCE, t.Direction.BACKTRACK):
        graph = swarm.build_k_graph(ctx, direction)
        assert swarm.k_graph_single_valued(graph, direction)


def test_max_lengths():
    assert swarm.max_tentacle_length(make_field(7)) == 1
    assert swarm.max_colon_length(make_field(7)) == 1
    assert swarm.max_tentacle_length(make_field(29)) == 2
    assert swarm.max_colon_length(make_field(29)) == 2
    assert swarm.max_tentacle_length(make_field(13)) == 0


def test_whole_graph_profile_symmetric():
    assert swarm.whole_graph_profile_symmetric(make_field(7))


def test_export_dot(adv7):
    text = swarm.export_graph(adv7, t.OutputFormat.DOT).decode("utf-8")
    assert text.startswith("digraph F_7_adv {")
    assert text.endswith("\n")
    assert text.count("doublecircle") == 6
    assert text.count("->") == 12
    assert 'label="(1,4)"' in text
    assert "n_1_4 -> n_6_5" in text


def test_export_json(adv7):
    data = swarm.export_graph(adv7, "json")
    assert data.endswith(b"\n")
    doc = json.loads(data)
    assert doc["field"] == {"p": 7, "t": 1, "q": 7}
    assert doc["direction"] == "adv"
    (comp,) = doc["components"]
    assert comp["cycle"] == [str(v) for v in F7_CYCLE]
    assert comp["appendages"]["(6,5)"] == {"(1,4)": {}}
    assert comp["kind"] == "tentacled"
    assert "edges" not in doc

    loaded = swarm.load_json(data)
    assert loaded.field == t.FieldSpec(7, 1)
    assert loaded.direction is t.Direction.ADVANCE
    assert loaded.components[0].signature == swarm.decompose(adv7)[0].signature
    assert loaded.edges is None


def test_export_json_multivalued_keeps_every_edge():
    ctx = make_field(113)
    adv = swarm.build_adv_graph(ctx)
    assert not adv.single_valued
    doc = json.loads(swarm.export_graph(adv, t.OutputFormat.JSON))
    assert len(doc["edges"]) == adv.graph.number_of_edges()

    loaded = swarm.load_json(swarm.export_graph(adv, t.OutputFormat.JSON))
    assert loaded.edges == adv.edges()
    tree_edges = sum(
        swarm.tree_size(c.appendages[v]) for c in loaded.components for v in c.cycle
    )
    assert tree_edges < len(loaded.edges)


def test_export_unsupported(adv7):
    with pytest.raises(agmpy.exceptions.UnsupportedFormat):
        swarm.export_graph(adv7, t.OutputFormat.CSV)


def test_swarm_logging(caplog, adv7):
    with caplog.at_level("DEBUG"):
        swarm.decompose(adv7)
    assert "[F_7 adv] cycle lengths [6]" in caplog.text
