from typing import Tuple

import attr

from .basic import INFINITY, CongruenceClass, Depth, FieldElement


@attr.s(frozen=True)
class FieldSpec:
    """Order q = p**t of a field with odd characteristic p."""

    p: int = attr.ib()
    t: int = attr.ib(default=1)
    q: int = attr.ib(
        default=attr.Factory(lambda self: self.p ** self.t, takes_self=True),
        eq=False,
    )

    @property
    def q_mod_8(self) -> int:
        return self.q - 8 * (self.q // 8)

    @property
    def congruence_class(self) -> CongruenceClass:
        return CongruenceClass.of_order(self.q)

    def __str__(self):
        return f"F_{self.q}"


@attr.s(frozen=True, order=True)
class Node:
    """Vertex (a, b) of the AGM graph."""

    a: FieldElement = attr.ib()
    b: FieldElement = attr.ib()

    def encode(self, q: int) -> int:
        return self.a * q + self.b

    @classmethod
    def decode(cls, value: int, q: int) -> "Node":
        return cls(*divmod(value, q))

    @classmethod
    def parse(cls, label: str) -> "Node":
        """Inverse of str(): '(a,b)' -> Node(a, b)."""
        a, b = label.strip().strip("()").split(",")
        return cls(int(a), int(b))

    def reversal(self) -> "Node":
        return Node(self.b, self.a)

    def __iter__(self):
        return iter((self.a, self.b))

    def __str__(self):
        return f"({self.a},{self.b})"


@attr.s(frozen=True, order=True)
class KEdge:
    """k-advancement k1 -> k2, i.e. (1 + k1)^2 k2^2 = 4 k1."""

    k1: FieldElement = attr.ib()
    k2: FieldElement = attr.ib()

    def as_tuple(self) -> Tuple[FieldElement, FieldElement]:
        return self.k1, self.k2


@attr.s(frozen=True)
class AdvClass:
    adv_depth: Depth = attr.ib()
    back_depth: Depth = attr.ib()

    @property
    def cyclic(self) -> bool:
        return self.adv_depth == INFINITY and self.back_depth == INFINITY

    @property
    def tentacle(self) -> bool:
        return self.adv_depth == INFINITY and self.back_depth != INFINITY

    @property
    def colon(self) -> bool:
        return self.back_depth == INFINITY and self.adv_depth != INFINITY
