"""Finite fields F_q, q = p**t with p odd, and their residue characters."""

import abc
import functools
import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from sympy.ntheory import primitive_root, sqrt_mod
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_irreducible_p,
    gf_mul,
    gf_pow_mod,
    gf_rem,
    gf_strip,
)

from agmpy.const import TABLE_LIMIT, WIDTH_LIMIT
import agmpy.exceptions
import agmpy.types as t
import agmpy.util

LOGGER = logging.getLogger(__name__)

_CLASS_CODES = (
    t.ResidueClass.ZERO,
    t.ResidueClass.FOURTH_POWER,
    t.ResidueClass.SQUARE_NOT_FOURTH,
    t.ResidueClass.NONSQUARE,
)


class FieldCtx(agmpy.util.LocalLogMixin, abc.ABC):
    """Arithmetic and residue characters of one finite field.

    Elements are canonical integer encodings in [0, q). Contexts are immutable
    once constructed and may be shared between workers.
    """

    def __init__(self, spec: t.FieldSpec, table_limit: int = TABLE_LIMIT):
        self._spec = spec
        self._table_limit = table_limit
        self._unit_order_factors: Dict[int, int] = {
            int(r): int(e) for r, e in sympy.factorint(spec.q - 1).items()
        }
        self._generator: Optional[int] = None
        self._root: Optional[List[int]] = None
        self._class: Optional[bytearray] = None
        self._nonsquare: Optional[int] = None

    def _finalize(self) -> None:
        self._generator = self._find_generator()
        if self.q <= self._table_limit:
            self._build_tables()
        elif self.q % 8 == 1:
            self._nonsquare = next(z for z in self.units() if not self.is_square(z))
        self.debug(
            "generator %s, tables %s", self._generator, self._root is not None
        )

    @property
    def spec(self) -> t.FieldSpec:
        return self._spec

    @property
    def p(self) -> int:
        return self._spec.p

    @property
    def degree(self) -> int:
        return self._spec.t

    @property
    def q(self) -> int:
        return self._spec.q

    @property
    def congruence_class(self) -> t.CongruenceClass:
        return self._spec.congruence_class

    @property
    def generator(self) -> int:
        return self._generator

    @property
    def label(self) -> str:
        return str(self._spec)

    @property
    def has_tables(self) -> bool:
        return self._root is not None

    def log(self, lvl: int, msg: str, *args, **kwargs) -> None:
        msg = "[%s] " + msg
        args = (self.label,) + args
        return LOGGER.log(lvl, msg, *args, **kwargs)

    def __repr__(self):
        return f"<{type(self).__name__} {self.label}>"

    # arithmetic

    @abc.abstractmethod
    def add(self, x: int, y: int) -> int:
        pass

    @abc.abstractmethod
    def neg(self, x: int) -> int:
        pass

    @abc.abstractmethod
    def mul(self, x: int, y: int) -> int:
        pass

    @abc.abstractmethod
    def _pow(self, x: int, n: int) -> int:
        """x**n for n >= 0."""

    @abc.abstractmethod
    def coefficients(self, x: int) -> List[int]:
        """Coefficient vector of x over F_p, constant term first."""

    def from_coefficients(self, coeffs: Sequence[int]) -> int:
        value = 0
        for c in reversed(coeffs):
            value = value * self.p + c % self.p
        return value

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def pow(self, x: int, n: int) -> int:
        if n < 0:
            return self._pow(self.inv(x), -n)
        return self._pow(x, n)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.label}")
        return self._pow(x, self.q - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    @property
    def half(self) -> int:
        return self.from_int((self.p + 1) // 2)

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def order(self, x: int) -> int:
        """Multiplicative order of a unit."""
        if x == 0:
            raise ZeroDivisionError("0 is not a unit")
        order = self.q - 1
        for r in self._unit_order_factors:
            while order % r == 0 and self.pow(x, order // r) == 1:
                order //= r
        return order

    def _find_generator(self) -> int:
        for g in range(1, self.q):
            if self.order(g) == self.q - 1:
                return g
        raise agmpy.exceptions.FieldException(f"{self.label} has no generator")

    # residues

    def _build_tables(self) -> None:
        q = self.q
        root = [0] * q
        for y in range(1, q):
            s = self.mul(y, y)
            if root[s] == 0:
                root[s] = y
        classes = bytearray(q)
        for x in range(1, q):
            r = root[x]
            if r == 0:
                classes[x] = 3
            elif root[r] or root[self.neg(r)]:
                classes[x] = 1
            else:
                classes[x] = 2
        self._root = root
        self._class = classes

    def residue_class(self, x: int) -> t.ResidueClass:
        if self._class is not None:
            return _CLASS_CODES[self._class[x]]
        if x == 0:
            return t.ResidueClass.ZERO
        q = self.q
        if self.pow(x, (q - 1) // 2) != 1:
            return t.ResidueClass.NONSQUARE
        g4 = 4 if q % 4 == 1 else 2
        if self.pow(x, (q - 1) // g4) == 1:
            return t.ResidueClass.FOURTH_POWER
        return t.ResidueClass.SQUARE_NOT_FOURTH

    def is_square(self, x: int) -> bool:
        """True for nonzero squares."""
        return self.residue_class(x).is_square

    def is_fourth_power(self, x: int) -> bool:
        """True for nonzero fourth powers."""
        return self.residue_class(x) is t.ResidueClass.FOURTH_POWER

    def quartic_character(self, x: int) -> int:
        """x**((q-1)/4), a fourth root of unity; q must be 1 mod 4."""
        if self.q % 4 != 1:
            raise agmpy.exceptions.UnsupportedCongruenceClass(
                self.q, "quartic_character"
            )
        return self.pow(x, (self.q - 1) // 4)

    def is_minus_one_square(self) -> bool:
        return self.is_square(self.neg(1))

    def is_minus_one_fourth_power(self) -> bool:
        return self.is_fourth_power(self.neg(1))

    @abc.abstractmethod
    def _sqrt_untabled(self, x: int) -> Optional[int]:
        """Some square root of a nonzero square x."""

    def sqrt(self, x: int) -> Optional[int]:
        """Smaller square root of x, or None for nonsquares."""
        if x == 0:
            return 0
        if self._root is not None:
            return self._root[x] or None
        if not self.is_square(x):
            return None
        r = self._sqrt_untabled(x)
        return min(r, self.neg(r))

    def sqrt_all(self, x: int) -> Tuple[int, ...]:
        """All square roots of x, smaller encoding first."""
        r = self.sqrt(x)
        if r is None:
            return ()
        if r == 0:
            return (0,)
        return tuple(sorted((r, self.neg(r))))

    def _exponent_sqrt(self, x: int) -> int:
        q = self.q
        if q % 4 == 3:
            return self.pow(x, (q + 1) // 4)
        if q % 8 == 5:
            r = self.pow(x, (q + 3) // 8)
            if self.mul(r, r) == x:
                return r
            # 2 is a nonsquare, so 2**((q-1)/4) squares to -1
            return self.mul(r, self.pow(self.from_int(2), (q - 1) // 4))
        return self._tonelli_shanks(x)

    def _tonelli_shanks(self, x: int) -> int:
        odd, twos = self.q - 1, 0
        while odd % 2 == 0:
            odd //= 2
            twos += 1
        m = twos
        c = self.pow(self._nonsquare, odd)
        tt = self.pow(x, odd)
        r = self.pow(x, (odd + 1) // 2)
        while tt != 1:
            i, probe = 0, tt
            while probe != 1:
                probe = self.mul(probe, probe)
                i += 1
            b = c
            for _ in range(m - i - 1):
                b = self.mul(b, b)
            m = i
            c = self.mul(b, b)
            tt = self.mul(tt, c)
            r = self.mul(r, b)
        return r

    def require_enumerable(self, limit: int) -> None:
        if self.q > limit:
            raise agmpy.exceptions.FieldTooLarge(self.q, limit)


class PrimeField(FieldCtx):
    """F_p with native modular arithmetic."""

    def __init__(self, p: int, table_limit: int = TABLE_LIMIT):
        super().__init__(t.FieldSpec(p, 1), table_limit)
        self._finalize()

    def _find_generator(self) -> int:
        return int(primitive_root(self.p))

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def neg(self, x: int) -> int:
        return -x % self.p

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p

    def _pow(self, x: int, n: int) -> int:
        return pow(x, n, self.p)

    def coefficients(self, x: int) -> List[int]:
        return [x]

    def _sqrt_untabled(self, x: int) -> Optional[int]:
        return int(sqrt_mod(x, self.p))


class ExtensionField(FieldCtx):
    """F_{p^t}, t > 1, modulo the smallest monic irreducible of degree t."""

    def __init__(self, p: int, deg: int, table_limit: int = TABLE_LIMIT):
        super().__init__(t.FieldSpec(p, deg), table_limit)
        self._modulus = list(smallest_irreducible(p, deg))
        self._powers = [p ** i for i in range(deg)]
        self._exp_table: Optional[List[int]] = None
        self._log_table: Optional[List[int]] = None
        self._finalize()

    @property
    def modulus(self) -> List[int]:
        """Coefficients of the modulus, leading coefficient first."""
        return list(self._modulus)

    def _build_tables(self) -> None:
        self._build_log_tables()
        super()._build_tables()

    def _build_log_tables(self) -> None:
        order = self.q - 1
        exp = [0] * order
        log = [0] * self.q
        cur = 1
        for i in range(order):
            exp[i] = cur
            log[cur] = i
            cur = self._poly_mul(cur, self._generator)
        self._exp_table = exp
        self._log_table = log

    def coefficients(self, x: int) -> List[int]:
        coeffs = []
        for _ in range(self.degree):
            x, c = divmod(x, self.p)
            coeffs.append(c)
        return coeffs

    def _to_poly(self, x: int) -> List[int]:
        return gf_strip(self.coefficients(x)[::-1])

    def _from_poly(self, f: Sequence[int]) -> int:
        return self.from_coefficients([int(c) for c in reversed(f)])

    def _poly_mul(self, x: int, y: int) -> int:
        product = gf_mul(self._to_poly(x), self._to_poly(y), self.p, ZZ)
        return self._from_poly(gf_rem(product, self._modulus, self.p, ZZ))

    def add(self, x: int, y: int) -> int:
        p = self.p
        return sum(
            ((a + b) % p) * w
            for a, b, w in zip(self.coefficients(x), self.coefficients(y), self._powers)
        )

    def neg(self, x: int) -> int:
        p = self.p
        return sum((-c % p) * w for c, w in zip(self.coefficients(x), self._powers))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if self._exp_table is not None:
            log = self._log_table
            return self._exp_table[(log[x] + log[y]) % (self.q - 1)]
        return self._poly_mul(x, y)

    def _pow(self, x: int, n: int) -> int:
        if n == 0:
            return 1
        if x == 0:
            return 0
        if self._exp_table is not None:
            return self._exp_table[self._log_table[x] * n % (self.q - 1)]
        f = gf_pow_mod(self._to_poly(x), n, self._modulus, self.p, ZZ)
        return self._from_poly(f)

    def _sqrt_untabled(self, x: int) -> Optional[int]:
        return self._exponent_sqrt(x)


@functools.lru_cache(maxsize=None)
def smallest_irreducible(p: int, deg: int) -> Tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree deg over F_p."""
    for tail in itertools.product(range(p), repeat=deg):
        f = [1, *tail]
        if gf_irreducible_p(f, p, ZZ):
            return tuple(f)
    raise agmpy.exceptions.InvalidDegree(deg)  # pragma: no cover


def make_field(p: int, t: int = 1, *, table_limit: int = TABLE_LIMIT) -> FieldCtx:
    """Build (or fetch the cached) context for F_{p^t}."""
    if not isinstance(t, int) or isinstance(t, bool) or t < 1:
        raise agmpy.exceptions.InvalidDegree(t)
    if p == 2:
        raise agmpy.exceptions.CharTwo()
    if not isinstance(p, int) or p < 2 or not sympy.isprime(p):
        raise agmpy.exceptions.NotPrime(p)
    if p ** t > WIDTH_LIMIT:
        raise agmpy.exceptions.FieldOverflow(p, t, WIDTH_LIMIT)
    return _build_field(int(p), int(t), int(table_limit))


@functools.lru_cache(maxsize=64)
def _build_field(p: int, deg: int, table_limit: int) -> FieldCtx:
    LOGGER.debug("Building F_%s^%s", p, deg)
    if deg == 1:
        return PrimeField(p, table_limit)
    return ExtensionField(p, deg, table_limit)
