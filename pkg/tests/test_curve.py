import pytest

import agmpy.curve as curve
import agmpy.exceptions
from agmpy.field import make_field
import agmpy.ratio


@pytest.mark.parametrize(
    "p, result", ((5, (0, 1)), (13, (1, 1)), (29, (2, 1)), (17, (0, 2)), (37, (0, 3)))
)
def test_two_square_decomposition(p, result):
    n, m = curve.two_square_decomposition(p)
    assert (n, m) == result
    assert 4 * m * m + (2 * n + 1) ** 2 == p


@pytest.mark.parametrize(
    "p, exc",
    (
        (7, agmpy.exceptions.NoDecomposition),
        (2, agmpy.exceptions.CharTwo),
        (9, agmpy.exceptions.NotPrime),
    ),
)
def test_two_square_decomposition_invalid(p, exc):
    with pytest.raises(exc):
        curve.two_square_decomposition(p)


def test_gaussian_arithmetic():
    assert curve.gaussian_mul((1, 2), (3, -1)) == (5, 5)
    assert curve.gaussian_pow((-1, 2), 0) == (1, 0)
    assert curve.gaussian_pow((-1, 2), 3) == (11, -2)


def test_frobenius_pi():
    assert curve.frobenius_pi(5) == (-1, 2)
    assert curve.frobenius_pi(13) == (3, 2)
    assert curve.frobenius_pi(29) == (-5, 2)


@pytest.mark.parametrize(
    "p, deg, trace",
    (
        (5, 1, -2),
        (13, 1, 6),
        (29, 1, -10),
        (17, 1, 2),
        (37, 1, -2),
        (5, 3, 22),
        (5, 2, -6),
        (7, 1, 0),
        (3, 2, -6),
        (3, 3, 0),
        (3, 4, 18),
    ),
)
def test_cm_trace(p, deg, trace):
    assert curve.cm_trace(p, deg) == trace


@pytest.mark.parametrize("p, deg", ((5, 1), (13, 1), (29, 1), (17, 1), (7, 1), (3, 2), (5, 2), (3, 3), (5, 3)))
def test_cm_trace_matches_point_count(p, deg):
    ctx = make_field(p, deg)
    assert curve.cm_trace(p, deg) == ctx.q + 1 - curve.brute_point_count(ctx)


def test_cm_trace_invalid():
    with pytest.raises(agmpy.exceptions.InvalidDegree):
        curve.cm_trace(5, 0)
    with pytest.raises(agmpy.exceptions.NotPrime):
        curve.cm_trace(15)


def test_brute_point_count():
    assert curve.brute_point_count(make_field(5)) == 8
    assert curve.brute_point_count(make_field(7)) == 8
    assert curve.brute_point_count(make_field(29)) == 40
    with pytest.raises(agmpy.exceptions.FieldTooLarge):
        curve.brute_point_count(make_field(29), limit=10)


@pytest.mark.parametrize("p", (5, 13, 29, 37))
def test_curve_isomorphism_check(p):
    assert curve.curve_isomorphism_check(make_field(p))


def test_hasse():
    assert curve.hasse_holds(125, 22)
    assert curve.hasse_holds(29, -10)
    assert not curve.hasse_holds(5, 5)


@pytest.mark.parametrize(
    "q, result", ((7, (2, 12)), (11, (4, 40)), (29, (8, 224)), (5, (0, 0)), (13, (0, 0)))
)
def test_predicted_population(q, result):
    assert curve.predicted_population(q) == result


def test_predicted_population_invalid():
    with pytest.raises(agmpy.exceptions.UnsupportedCongruenceClass):
        curve.predicted_population(17)
    with pytest.raises(agmpy.exceptions.NotPrime):
        curve.predicted_population(15)


@pytest.mark.parametrize("p, deg", ((5, 1), (13, 1), (29, 1), (37, 1), (53, 1), (5, 3)))
def test_curve_counts_t_adv(p, deg):
    ctx = make_field(p, deg)
    assert curve.excluded_point_count(ctx) == 8
    t_adv = len(agmpy.ratio.t_adv_infinity(ctx))
    assert curve.t_adv_from_curve(ctx) == t_adv
    assert curve.predicted_population(ctx.q)[0] == t_adv


def test_trace_record():
    record = curve.trace_record(make_field(29))
    assert record.q == 29
    assert record.a_q_cm == record.a_q_brute == -10
    assert record.point_count == 40
    assert (record.predicted_t_adv, record.predicted_s_adv) == (8, 224)
    assert record.consistent


def test_trace_record_without_brute():
    record = curve.trace_record(make_field(17), limit=10)
    assert record.a_q_brute is None
    assert record.a_q_cm == 2
    assert record.predicted_t_adv is None
    assert record.consistent


def test_trace_mismatch_logged(caplog, monkeypatch):
    monkeypatch.setattr(curve, "cm_trace", lambda p, deg: 0)
    with caplog.at_level("ERROR"):
        record = curve.trace_record(make_field(13))
    assert not record.consistent
    assert "trace mismatch" in caplog.text
