"""Trace of Frobenius of E: y^2 = x^3 - x.

Two routes: the closed form through the CM Frobenius in Z[i], and a direct
point count. Population predictions for the swarm are wired to the trace.
"""

import logging
from typing import Callable, Optional, Tuple

import attr
import sympy

from agmpy.config.defaults import CONF_MAX_Q_DEFAULT
import agmpy.exceptions
from agmpy.field import FieldCtx
import agmpy.types as t
import agmpy.util

LOGGER = logging.getLogger(__name__)

GaussianInt = Tuple[int, int]


@attr.s(frozen=True)
class TraceRecord:
    q: int = attr.ib()
    a_q_cm: int = attr.ib()
    a_q_brute: Optional[int] = attr.ib()
    point_count: int = attr.ib()
    predicted_t_adv: Optional[int] = attr.ib(default=None)
    predicted_s_adv: Optional[int] = attr.ib(default=None)

    @property
    def consistent(self) -> bool:
        return self.a_q_brute is None or self.a_q_brute == self.a_q_cm


def _check_prime(p: int) -> None:
    if p == 2:
        raise agmpy.exceptions.CharTwo()
    if not sympy.isprime(p):
        raise agmpy.exceptions.NotPrime(p)


def two_square_decomposition(p: int) -> Tuple[int, int]:
    """The unique (n, m), both >= 0, with p = 4m^2 + (2n + 1)^2."""
    _check_prime(p)
    if p % 4 != 1:
        raise agmpy.exceptions.NoDecomposition(p)
    found = []
    m = 0
    while 4 * m * m < p:
        root, exact = sympy.integer_nthroot(p - 4 * m * m, 2)
        if exact and root % 2 == 1:
            found.append(((int(root) - 1) // 2, m))
        m += 1
    if len(found) != 1:
        LOGGER.error("%s decompositions of %s as 4m^2 + (2n+1)^2", len(found), p)
        raise agmpy.exceptions.NoDecomposition(p)
    return found[0]


def gaussian_mul(x: GaussianInt, y: GaussianInt) -> GaussianInt:
    return x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]


def gaussian_pow(z: GaussianInt, n: int) -> GaussianInt:
    result = (1, 0)
    while n:
        if n & 1:
            result = gaussian_mul(result, z)
        z = gaussian_mul(z, z)
        n >>= 1
    return result


def frobenius_pi(p: int) -> GaussianInt:
    """(-1)^(n+m) (2n + 1) + 2m i for p = 1 mod 4."""
    n, m = two_square_decomposition(p)
    sign = -1 if (n + m) % 2 else 1
    return sign * (2 * n + 1), 2 * m


def cm_trace(p: int, t: int = 1) -> int:
    """a_q for q = p**t as pi^t + conj(pi)^t, in exact integers."""
    _check_prime(p)
    if t < 1:
        raise agmpy.exceptions.InvalidDegree(t)
    if p % 4 == 3:
        # pi = sqrt(-p): pi^t is purely imaginary for odd t
        if t % 2:
            return 0
        return 2 * (-p) ** (t // 2)
    re, _ = gaussian_pow(frobenius_pi(p), t)
    return 2 * re


def count_points(ctx: FieldCtx, rhs: Callable[[int], int]) -> int:
    """Affine solutions of y^2 = rhs(x) over ctx."""
    return sum(_solutions(ctx, rhs(x)) for x in ctx.elements())


def _solutions(ctx: FieldCtx, v: int) -> int:
    if v == 0:
        return 1
    return 2 if ctx.is_square(v) else 0


def _legendre_rhs(ctx: FieldCtx) -> Callable[[int], int]:
    return lambda x: ctx.sub(ctx.mul(x, ctx.mul(x, x)), x)


def _agm_curve_rhs(ctx: FieldCtx) -> Callable[[int], int]:
    two = ctx.from_int(2)
    return lambda x: ctx.mul(ctx.mul(two, x), ctx.add(1, ctx.mul(x, x)))


def brute_point_count(ctx: FieldCtx, limit: int = CONF_MAX_Q_DEFAULT) -> int:
    """#E(F_q) for y^2 = x^3 - x, the point at infinity included."""
    ctx.require_enumerable(limit)
    return count_points(ctx, _legendre_rhs(ctx)) + 1


def curve_isomorphism_check(ctx: FieldCtx, limit: int = CONF_MAX_Q_DEFAULT) -> bool:
    """y^2 = 2x(1 + x^2), y^2 = x^3 - x and y^2 = x^3 + 4x have equal counts."""
    ctx.require_enumerable(limit)
    four = ctx.from_int(4)
    counts = {
        count_points(ctx, _agm_curve_rhs(ctx)),
        count_points(ctx, _legendre_rhs(ctx)),
        count_points(ctx, lambda x: ctx.add(ctx.mul(x, ctx.mul(x, x)), ctx.mul(four, x))),
    }
    return len(counts) == 1


def hasse_holds(q: int, a: int) -> bool:
    return a * a <= 4 * q


def predicted_population(q: int) -> Tuple[int, int]:
    """Predicted (|T^adv_inf|, |S^adv_inf|)."""
    decomposition = agmpy.util.prime_power_decomposition(q)
    if decomposition is None:
        raise agmpy.exceptions.NotPrime(q)
    regime = t.CongruenceClass.of_order(q)
    if regime is t.CongruenceClass.Q_3_MOD_4:
        return (q - 3) // 2, (q - 1) * (q - 3) // 2
    if regime is t.CongruenceClass.Q_5_MOD_8:
        t_adv = (q - cm_trace(*decomposition) - 7) // 4
        return t_adv, (q - 1) * t_adv
    raise agmpy.exceptions.UnsupportedCongruenceClass(q, "predicted_population")


def _is_excluded_x(ctx: FieldCtx, x: int) -> bool:
    x2 = ctx.mul(x, x)
    return x2 in (0, 1, ctx.neg(1))


def excluded_point_count(ctx: FieldCtx, limit: int = CONF_MAX_Q_DEFAULT) -> int:
    """Points of y^2 = 2x(1 + x^2) with x^2 in {-1, 0, 1}, plus infinity."""
    ctx.require_enumerable(limit)
    rhs = _agm_curve_rhs(ctx)
    return 1 + sum(
        _solutions(ctx, rhs(x)) for x in ctx.elements() if _is_excluded_x(ctx, x)
    )


def t_adv_from_curve(ctx: FieldCtx, limit: int = CONF_MAX_Q_DEFAULT) -> int:
    """|T^adv_inf| as a quarter of the non-excluded affine points."""
    ctx.require_enumerable(limit)
    rhs = _agm_curve_rhs(ctx)
    total = 0
    for x in ctx.elements():
        if _is_excluded_x(ctx, x):
            continue
        total += _solutions(ctx, rhs(x))
    return total // 4


def trace_record(
    ctx: FieldCtx, limit: int = CONF_MAX_Q_DEFAULT, brute: bool = True
) -> TraceRecord:
    a_cm = cm_trace(ctx.p, ctx.degree)
    a_brute = None
    if brute and ctx.q <= limit:
        a_brute = ctx.q + 1 - brute_point_count(ctx, limit)
        if a_brute != a_cm:
            LOGGER.error("[%s] trace mismatch: cm=%s brute=%s", ctx.label, a_cm, a_brute)
    predicted: Tuple[Optional[int], Optional[int]] = (None, None)
    if ctx.congruence_class is not t.CongruenceClass.Q_1_MOD_8:
        predicted = predicted_population(ctx.q)
    return TraceRecord(
        q=ctx.q,
        a_q_cm=a_cm,
        a_q_brute=a_brute,
        point_count=ctx.q + 1 - a_cm,
        predicted_t_adv=predicted[0],
        predicted_s_adv=predicted[1],
    )
