from collections import Counter
import itertools

import pytest

import agmpy.dynamics as dyn
import agmpy.exceptions
from agmpy.field import make_field
import agmpy.ratio as ratio
from agmpy.types import INFINITY, KEdge, Node


@pytest.fixture
def f7():
    return make_field(7)


def test_nontrivial_ks(f7):
    assert ratio.nontrivial_ks(f7) == [2, 3, 4, 5]
    assert not ratio.is_nontrivial_k(f7, 6)
    assert ratio.is_nontrivial_k(f7, 3)


def test_k_of(f7):
    assert ratio.k_of(f7, Node(1, 4)) == 4
    assert ratio.k_of(f7, Node(5, 3)) == 2
    with pytest.raises(agmpy.exceptions.TrivialNode):
        ratio.k_of(f7, Node(3, 4))


def test_k_children_f7(f7):
    assert ratio.k_children(f7, 2) == (2, 5)
    assert ratio.k_children(f7, 4) == (2, 5)
    assert ratio.k_children(f7, 3) == ()
    assert ratio.k_children(f7, 5) == ()
    with pytest.raises(agmpy.exceptions.TrivialK):
        ratio.k_children(f7, 1)


def test_k_parents_f7(f7):
    assert ratio.k_parents(f7, 2) == (2, 4)
    assert ratio.k_parents(f7, 5) == (2, 4)
    assert ratio.k_parents(f7, 3) == ()
    with pytest.raises(agmpy.exceptions.TrivialK):
        ratio.k_parents(f7, 0)


def test_k_edges_f7(f7):
    edges = [e.as_tuple() for e in ratio.k_edges(f7)]
    assert edges == [(2, 2), (2, 5), (4, 2), (4, 5)]
    for k1, k2 in edges:
        assert ratio.is_k_edge(f7, k1, k2)
    assert not ratio.is_k_edge(f7, 3, 2)


@pytest.mark.parametrize("p, deg", ((11, 1), (13, 1), (17, 1), (3, 2)))
def test_k_edges_descend_from_nodes(p, deg):
    ctx = make_field(p, deg)
    edges = set(ratio.k_edges(ctx))
    for n in dyn.nontrivial_nodes(ctx):
        k = ratio.k_of(ctx, n)
        for c in dyn.children(ctx, n):
            assert KEdge(k, ratio.k_of(ctx, c)) in edges
        assert sorted(ratio.k_of(ctx, m) for m in dyn.parents(ctx, n)) == list(
            ratio.k_parents(ctx, k)
        )


def test_sigma_f7(f7):
    assert [ratio.sigma(f7, k) for k in (2, 3, 4, 5)] == [2, 3, 5, 4]
    with pytest.raises(agmpy.exceptions.TrivialK):
        ratio.sigma(f7, 6)


@pytest.mark.parametrize("p, deg", ((7, 1), (13, 1), (29, 1), (17, 1), (3, 2), (5, 3)))
def test_sigma_involution_and_reversal(p, deg):
    ctx = make_field(p, deg)
    for k in ratio.nontrivial_ks(ctx):
        assert ratio.sigma(ctx, ratio.sigma(ctx, k)) == k
    assert ratio.verify_sigma_reversal(ctx)


@pytest.mark.parametrize("p, deg", ((7, 1), (13, 1), (3, 2)))
def test_sigma_identity(p, deg):
    ctx = make_field(p, deg)
    ks = ratio.nontrivial_ks(ctx)
    for k1, k2 in itertools.product(ks, repeat=2):
        assert ratio.sigma_identity_holds(ctx, k1, k2)


def test_lift(f7):
    assert ratio.lift(f7, 2, 1) == Node(1, 2)
    assert ratio.lift(f7, 4, 3) == Node(3, 5)
    with pytest.raises(agmpy.exceptions.TrivialNode):
        ratio.lift(f7, 2, 0)
    with pytest.raises(agmpy.exceptions.TrivialK):
        ratio.lift(f7, 1, 3)


def test_lift_edge(f7):
    edge = KEdge(2, 2)
    assert ratio.lift_edge(f7, edge, 1) == (Node(1, 2), Node(5, 3))
    assert ratio.lift_back_edge(f7, edge, 5) == (Node(1, 2), Node(5, 3))


def test_lifted_edges_are_advancements():
    ctx = make_field(13)
    for edge in ratio.k_edges(ctx):
        for a in ctx.units():
            parent, child = ratio.lift_edge(ctx, edge, a)
            assert child in dyn.children(ctx, parent)
            assert ratio.lift_back_edge(ctx, edge, child.a) == (parent, child)


def test_kcensus_f7(f7):
    census = ratio.KCensus.new(f7)
    assert census.adv_set(INFINITY) == {2, 4}
    assert census.back_set(INFINITY) == {2, 5}
    assert census.cyclic_set() == {2}
    assert census.adv_depth(3) == 0
    assert census.back_depth(4) == 0
    assert census.tentacle_max() == 1
    assert census.colon_max() == 1


def test_kcensus_limit():
    with pytest.raises(agmpy.exceptions.FieldTooLarge):
        ratio.KCensus(make_field(29), limit=28)


@pytest.mark.parametrize("p, deg", ((7, 1), (11, 1), (3, 3), (5, 1), (13, 1), (29, 1), (37, 1), (5, 3)))
def test_closed_forms_match_census(p, deg):
    ctx = make_field(p, deg)
    census = ratio.KCensus.new(ctx)
    assert ratio.t_adv_infinity(ctx) == census.adv_set(INFINITY)
    assert ratio.t_back_infinity(ctx) == census.back_set(INFINITY)


def test_closed_forms_f7(f7):
    assert ratio.t_adv_infinity(f7) == {2, 4}
    assert ratio.t_back_infinity(f7) == {2, 5}


def test_closed_forms_f29():
    ctx = make_field(29)
    adv = ratio.t_adv_infinity(ctx)
    back = ratio.t_back_infinity(ctx)
    assert len(adv) == len(back) == 8
    assert {6, 20} <= adv & back
    assert ratio.sigma(ctx, 6) == 20
    assert {ratio.sigma(ctx, k) for k in adv} == back


def test_multivalued_uses_census():
    ctx = make_field(17)
    census = ratio.KCensus.new(ctx)
    assert ratio.t_adv_infinity(ctx, census) == census.adv_set(INFINITY)
    assert ratio.t_back_infinity(ctx) == census.back_set(INFINITY)


@pytest.mark.parametrize("p, deg", ((7, 1), (11, 1), (29, 1), (37, 1), (3, 3)))
def test_k_depths_match_node_depths(p, deg):
    ctx = make_field(p, deg)
    kc = ratio.KCensus.new(ctx)
    nc = dyn.NodeCensus.new(ctx)
    for n in nc.nodes():
        k = ratio.k_of(ctx, n)
        assert nc.adv_depth(n) == kc.adv_depth(k)
        assert nc.back_depth(n) == kc.back_depth(k)
    assert nc.tentacle_max() == kc.tentacle_max()
    assert nc.colon_max() == kc.colon_max()


def test_node_cycle_lengths():
    assert ratio.node_cycle_lengths(make_field(7)) == [6]
    assert ratio.node_cycle_lengths(make_field(29)) == [7, 7, 7, 7, 28]
    assert ratio.node_cycle_lengths(make_field(13)) == []
    with pytest.raises(agmpy.exceptions.UnsupportedCongruenceClass):
        ratio.node_cycle_lengths(make_field(17))


@pytest.mark.parametrize("p, deg", ((5, 1), (7, 1), (13, 1), (29, 1), (17, 1), (3, 2), (5, 3)))
def test_birational_roundtrip(p, deg):
    ctx = make_field(p, deg)
    report = ratio.birational_roundtrip(ctx)
    assert report.ok
    assert report.q == ctx.q
    assert report.curve_points == len(list(ratio.curve_points(ctx)))
    assert report.quartic_points == len(list(ratio.quartic_points(ctx)))


def test_curve_and_quartic_maps(f7):
    for x, y in ratio.curve_points(f7):
        image = ratio.curve_to_quartic(f7, x, y)
        k, mu = image
        assert f7.pow(mu, 4) == f7.sub(1, f7.mul(k, k))
        assert ratio.quartic_to_curve(f7, k, mu) == (x, y)
    assert ratio.quartic_to_curve(f7, 6, 0) is None


def test_curve_to_quartic_undefined():
    ctx = make_field(13)
    # 5^2 = -1 in F_13
    assert ratio.curve_to_quartic(ctx, 5, 3) is None


def test_chain_correspondence():
    ctx = make_field(29)
    for x, y in ratio.curve_points(ctx):
        assert ratio.chain_correspondence_holds(ctx, x, y)


def test_degree_profile(f7):
    assert ratio.degree_profile(f7) == Counter(
        {(2, 2): 1, (0, 0): 1, (0, 2): 1, (2, 0): 1}
    )
