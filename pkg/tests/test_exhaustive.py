"""Whole-range sweeps over every odd prime power up to a bound."""

import pytest

import agmpy.curve as curve
import agmpy.dynamics as dyn
from agmpy.field import make_field
import agmpy.ratio
import agmpy.report as report
import agmpy.swarm as swarm
import agmpy.types as t
from agmpy.types import INFINITY
from agmpy.util import prime_powers

Q_5_MOD_8 = prime_powers(5, 500, t.CongruenceClass.Q_5_MOD_8)
Q_3_MOD_4 = prime_powers(3, 500, t.CongruenceClass.Q_3_MOD_4)
Q_1_MOD_8 = prime_powers(9, 500, t.CongruenceClass.Q_1_MOD_8)


def test_ranges_include_prime_powers():
    assert (5, 3) in Q_5_MOD_8
    assert (3, 5) in Q_3_MOD_4
    assert (3, 2) in Q_1_MOD_8
    assert (7, 3) in Q_3_MOD_4


def _graphs(p, deg):
    ctx = make_field(p, deg)
    census = agmpy.ratio.KCensus.new(ctx)
    return ctx, swarm.build_adv_graph(ctx, census), swarm.build_back_graph(ctx, census)


@pytest.mark.parametrize("p, deg", Q_5_MOD_8)
def test_swarm_population_5mod8(p, deg):
    ctx, adv, back = _graphs(p, deg)
    q = ctx.q
    a = curve.cm_trace(p, deg)
    assert a == q + 1 - curve.brute_point_count(ctx)
    assert len(adv) == (q - 1) * (q - 7 - a) // 4
    assert len(back) == len(adv)

    assert adv.single_valued
    assert back.single_valued
    assert 4 * len(adv.cyclic_vertices()) == len(adv)
    assert 4 * len(back.cyclic_vertices()) == len(back)
    assert swarm.reversal_isomorphic(adv, back)


@pytest.mark.parametrize("p, deg", Q_3_MOD_4)
def test_swarm_population_3mod4(p, deg):
    ctx, adv, back = _graphs(p, deg)
    q = ctx.q
    assert len(adv) == (q - 1) * (q - 3) // 2
    assert len(back) == len(adv)
    assert adv.single_valued
    assert back.single_valued
    assert swarm.reversal_isomorphic(adv, back)


@pytest.mark.parametrize("p, deg", Q_5_MOD_8)
def test_stabilization_5mod8(p, deg):
    census = dyn.NodeCensus.new(make_field(p, deg))
    assert census.adv_set(2) == census.adv_set(INFINITY)
    assert census.back_set(2) == census.back_set(INFINITY)


@pytest.mark.parametrize("p, deg", prime_powers(3, 300))
def test_populations_match_per_depth(p, deg):
    census = dyn.NodeCensus.new(make_field(p, deg))
    for n in (0, 1, 2, INFINITY):
        assert len(census.adv_set(n)) == len(census.back_set(n)), n
    assert census.tentacle_max() == census.colon_max()


@pytest.mark.parametrize("p, deg", prime_powers(3, 3000))
def test_cm_trace_matches_point_count_and_hasse(p, deg):
    ctx = make_field(p, deg)
    a = curve.cm_trace(p, deg)
    assert a == ctx.q + 1 - curve.brute_point_count(ctx)
    assert curve.hasse_holds(ctx.q, a)


@pytest.mark.parametrize("p, deg", prime_powers(3, 200))
def test_children_and_parents_are_inverse(p, deg):
    ctx = make_field(p, deg)
    for n in dyn.nontrivial_nodes(ctx):
        for c in dyn.children(ctx, n):
            assert n in dyn.parents(ctx, c)
        for m in dyn.parents(ctx, n):
            assert n in dyn.children(ctx, m)


def test_scan_1mod8_finds_long_tentacles():
    rows = [report.scan_field(p, deg, 2 ** 20) for p, deg in Q_1_MOD_8]
    assert all(row.equal for row in rows)
    assert max(row.tentacle_max for row in rows) >= 3
    assert report.scan_field(113, 1, 2 ** 20).tentacle_max == 3
