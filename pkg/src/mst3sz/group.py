"""The group of triples acting on the Suzuki curve at infinity.

Elements are triples (a, b, c) over GF(q), a != 0, composing by

    (a1,b1,c1) * (a2,b2,c2)
        = (a1*a2, a2*b1 + b2, a2^(2q0+1)*c1 + a2*b2^(2q0)*b1 + c2)

which matches composition of the affine maps

    x -> a*x + b,   y -> a^(2q0+1)*y + a*b^(2q0)*x + c

in the order "apply g1's map first, then g2's".  The group has order
q^2*(q-1); the elements (1, 0, c) form the designated q-element center
(``in_center``) and (1, b, c) the q^2-element subgroup whose products add
b-coordinates -- both facts carry the cryptosystem.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .field import BinaryField, FieldParams

# Constraint names for random_element / cover generation.
ANY = "any"
NON_CENTRAL = "non-central"
ALL_NONZERO = "all-coordinates-nonzero"


@dataclass(frozen=True, slots=True)
class GroupElement:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("group element needs a != 0")


@dataclass(frozen=True, slots=True)
class CurvePoint:
    x: int
    y: int


@dataclass(frozen=True)
class GroupStats:
    group_order: int
    center_order: int
    full_aut_order: int
    genus: int
    rational_places: int


IDENTITY = GroupElement(1, 0, 0)


class SuzukiGroup:
    """Group operations over a fixed ``FieldParams``."""

    def __init__(self, params: FieldParams):
        self.params = params

    def __repr__(self) -> str:
        return f"SuzukiGroup(n={self.params.n})"

    def __eq__(self, other) -> bool:
        return isinstance(other, SuzukiGroup) and self.params == other.params

    def __hash__(self) -> int:
        return hash(("SuzukiGroup", self.params))

    def identity(self) -> GroupElement:
        return IDENTITY

    def mul(self, g1: GroupElement, g2: GroupElement) -> GroupElement:
        f = self.params
        a2, b2 = g2.a, g2.b
        return GroupElement(
            f.mul(g1.a, a2),
            f.mul(a2, g1.b) ^ b2,
            f.mul(f.pow_2q0_plus_1(a2), g1.c)
            ^ f.mul(f.mul(a2, f.pow_2q0(b2)), g1.b)
            ^ g2.c,
        )

    def inv(self, g: GroupElement) -> GroupElement:
        f = self.params
        ai = f.inv(g.a)
        t = f.mul(ai, g.b)
        return GroupElement(
            ai,
            t,
            f.pow_2q0_plus_1(t) ^ f.mul(f.pow_2q0_plus_1(ai), g.c),
        )

    def product(self, gs) -> GroupElement:
        """Left-to-right product of an iterable of elements."""
        acc = IDENTITY
        for g in gs:
            acc = self.mul(acc, g)
        return acc

    def apply_point(self, g: GroupElement, p: CurvePoint) -> CurvePoint:
        f = self.params
        return CurvePoint(
            f.mul(g.a, p.x) ^ g.b,
            f.mul(f.pow_2q0_plus_1(g.a), p.y)
            ^ f.mul(f.mul(g.a, f.pow_2q0(g.b)), p.x)
            ^ g.c,
        )

    def on_curve(self, p: CurvePoint, field: BinaryField | None = None) -> bool:
        """Check y^q + y = x^(2q0) * (x^q + x).

        Over GF(q) itself every point passes (x^q = x); pass an extension
        field to test points with coordinates outside GF(q).
        """
        f = field if field is not None else self.params
        n, s = self.params.n, self.params.s
        lhs = f.frob_pow(p.y, n) ^ p.y
        rhs = f.mul(f.frob_pow(p.x, s + 1), f.frob_pow(p.x, n) ^ p.x)
        return lhs == rhs

    def in_center(self, g: GroupElement) -> bool:
        return g.a == 1 and g.b == 0

    def f1(self, g: GroupElement) -> GroupElement:
        """(a, b, c) -> (1, a, b)."""
        return GroupElement(1, g.a, g.b)

    def f2(self, g: GroupElement) -> GroupElement:
        """(a, b, c) -> (1, 0, b); defined on all triples, not just a = 1."""
        return GroupElement(1, 0, g.b)

    def stats(self) -> GroupStats:
        q = self.params.q
        q0 = self.params.q0
        return GroupStats(
            group_order=q * q * (q - 1),
            center_order=q,
            full_aut_order=(q * q + 1) * q * q * (q - 1),
            genus=q0 * (q - 1),
            rational_places=q * q + 1,
        )

    def random_element(self, rng, constraint: str = ANY) -> GroupElement:
        f = self.params
        if constraint == ANY:
            return GroupElement(
                f.random_nonzero(rng), f.random_element(rng), f.random_element(rng)
            )
        if constraint == NON_CENTRAL:
            while True:
                a = f.random_nonzero(rng)
                b = f.random_element(rng)
                if a != 1 or b != 0:
                    return GroupElement(a, b, f.random_element(rng))
        if constraint == ALL_NONZERO:
            return GroupElement(
                f.random_nonzero(rng), f.random_nonzero(rng), f.random_nonzero(rng)
            )
        raise ValueError(f"unknown constraint {constraint!r}")

    def elements(self) -> Iterator[GroupElement]:
        """All q^2*(q-1) elements; only sensible for small q."""
        q = self.params.q
        for a in range(1, q):
            for b in range(q):
                for c in range(q):
                    yield GroupElement(a, b, c)
