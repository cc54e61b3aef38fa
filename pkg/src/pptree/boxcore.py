"""Fibonacci boxes and the algebra around them.

A primitive Pythagorean triple ``(a, b, c)`` (odd leg first) is encoded by a
2x2 box::

    [ q   q' ]
    [ p   p' ]

whose columns are the two reduced half-angle tangents ``q/p = b/(c+a)`` and
``q'/p' = a/(c+b)``.  The entries satisfy ``q' = p - q`` and ``p' = p + q``,
so the uncoiled tuple ``[q', q, p, p']`` follows the Fibonacci rule.

Everything here is exact integer / rational arithmetic on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from operator import itemgetter
from typing import NamedTuple

from .errors import (
    DomainError,
    InvalidTriple,
    InvariantViolation,
    NotPrimitive,
    NotPrimitiveHat,
    NotPythagorean,
)

__all__ = [
    "PptTriple",
    "FibBox",
    "Hat",
    "Radii",
    "NonPrimitiveReport",
    "ROOT_TRIPLE",
    "ROOT_BOX",
    "hats_of_triple",
    "box_from_hat",
    "box_from_triple",
    "triple_from_box",
    "is_primitive_box",
    "normalize_box",
    "radii_of",
    "area_perimeter_of",
    "pell_shift",
    "family_plato",
    "family_pythagoras",
    "family_fermat",
    "classify_non_primitive",
    "primitive_boxes",
]


class PptTriple(tuple):
    """Primitive Pythagorean triple ``(a, b, c)`` with ``a`` odd and ``b`` even.

    Compares equal to the plain tuple ``(a, b, c)``.  Use :meth:`from_sides`
    to accept the legs in either order.
    """

    __slots__ = ()

    def __new__(cls, a: int, b: int, c: int) -> "PptTriple":
        a, b, c = _as_int(a), _as_int(b), _as_int(c)
        if a <= 0 or b <= 0 or c <= 0:
            raise InvalidTriple(f"sides must be positive: {(a, b, c)}")
        if a * a + b * b != c * c:
            raise InvalidTriple(f"{(a, b, c)} does not satisfy a^2 + b^2 = c^2")
        if a % 2 == 0 or b % 2 == 1:
            raise InvalidTriple(f"{(a, b, c)} is not in (odd, even, hyp) order")
        if gcd(a, b) != 1:
            raise InvalidTriple(f"{(a, b, c)} is not primitive")
        return tuple.__new__(cls, (a, b, c))

    @classmethod
    def from_sides(cls, x: int, y: int, c: int) -> "PptTriple":
        if x % 2 == 0:
            x, y = y, x
        return cls(x, y, c)

    a = property(itemgetter(0))
    b = property(itemgetter(1))
    c = property(itemgetter(2))

    def __repr__(self) -> str:
        return f"PptTriple({self[0]}, {self[1]}, {self[2]})"

    def __getnewargs__(self):
        return tuple(self)


def _as_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        try:
            ix = int(x)
        except (TypeError, ValueError):
            raise InvalidTriple(f"not an integer: {x!r}") from None
        if ix != x:
            raise InvalidTriple(f"not an integer: {x!r}")
        return ix
    return x


@dataclass(frozen=True)
class Hat:
    """Reduced half-angle tangent ``num/den`` with ``0 < num < den``."""

    num: int
    den: int

    def __post_init__(self):
        if self.num <= 0 or self.den <= 0:
            raise NotPrimitiveHat(f"{self.num}/{self.den}: entries must be positive")
        if self.num >= self.den:
            raise NotPrimitiveHat(f"{self.num}/{self.den}: need num < den")
        if gcd(self.num, self.den) != 1:
            raise NotPrimitiveHat(f"{self.num}/{self.den} is not reduced")

    @classmethod
    def reduce(cls, num: int, den: int) -> "Hat":
        g = gcd(num, den)
        return cls(num // g, den // g)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class FibBox:
    """The box ``[[q, q'], [p, p']]``; only the key equations are enforced.

    Non-primitive boxes are valid values (see :func:`normalize_box`).
    """

    q: int
    q_prime: int
    p: int
    p_prime: int

    def __post_init__(self):
        if not 0 < self.q < self.p:
            raise DomainError(f"box needs 0 < q < p, got q={self.q}, p={self.p}")
        if self.q_prime != self.p - self.q or self.p_prime != self.p + self.q:
            raise DomainError(f"{self} violates q' = p - q, p' = p + q")

    @classmethod
    def from_column(cls, q: int, p: int) -> "FibBox":
        """Complete a box from its first column."""
        return cls(q, p - q, p, p + q)

    @classmethod
    def from_uncoiled(cls, k) -> "FibBox":
        """Build from ``K = [q', q, p, p']``."""
        q_prime, q, p, p_prime = k
        return cls(q, q_prime, p, p_prime)

    def uncoiled(self) -> tuple[int, int, int, int]:
        return (self.q_prime, self.q, self.p, self.p_prime)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.q, self.q_prime, self.p, self.p_prime)

    def __str__(self) -> str:
        return f"[{self.q} {self.q_prime} / {self.p} {self.p_prime}]"


class Radii(NamedTuple):
    """In-radius ``r1``, ex-radii ``r2``, ``r3`` and the largest ex-radius ``r4``."""

    r1: int
    r2: int
    r3: int
    r4: int


class NonPrimitiveReport(NamedTuple):
    divisor: int
    core: PptTriple


ROOT_TRIPLE = PptTriple(3, 4, 5)
ROOT_BOX = FibBox(1, 1, 2, 3)


def hats_of_triple(t: PptTriple) -> tuple[Hat, Hat]:
    a, b, c = t
    primary = Hat.reduce(b, c + a)
    secondary = Hat.reduce(a, c + b)
    # (c - a)/b and (c - b)/a are the same angles
    if primary.as_fraction() != Fraction(c - a, b) or secondary.as_fraction() != Fraction(c - b, a):
        raise InvariantViolation(f"half-angle forms disagree for {t}", t)
    if primary.den >= secondary.den:
        raise InvariantViolation(f"primary HAT denominator not smaller for {t}", t)
    return primary, secondary


def box_from_hat(h: Hat) -> FibBox:
    if (h.num + h.den) % 2 == 0:
        raise NotPrimitiveHat(f"{h}: numerator and denominator have the same parity")
    return FibBox.from_column(h.num, h.den)


def box_from_triple(t: PptTriple) -> FibBox:
    if not isinstance(t, PptTriple):
        t = PptTriple(*t)
    primary, secondary = hats_of_triple(t)
    box = box_from_hat(primary)
    if (box.q_prime, box.p_prime) != (secondary.num, secondary.den):
        raise InvariantViolation(f"second column of {box} is not the secondary HAT of {t}", t)
    q, p = box.q, box.p
    if (p * p - q * q, 2 * p * q, p * p + q * q) != tuple(t):
        raise InvariantViolation(f"{box} does not regenerate {t}", t)
    return box


def triple_from_box(box: FibBox):
    """Mixed-product triple ``(q'p', 2pq, qp' + q'p)``.

    Returns a :class:`PptTriple` for a primitive box and a plain
    ``(a, b, c)`` tuple otherwise.
    """
    q, qq, p, pp = box.entries()
    a, b, c = qq * pp, 2 * p * q, q * pp + qq * p
    if c != p * pp - q * qq or (a, b, c) != (p * p - q * q, 2 * p * q, p * p + q * q):
        raise InvariantViolation(f"hypotenuse forms disagree for {box}", box)
    if is_primitive_box(box):
        return PptTriple(a, b, c)
    return (a, b, c)


def is_primitive_box(box: FibBox) -> bool:
    return box.q_prime % 2 == 1 and box.p_prime % 2 == 1 and gcd(box.q, box.p) == 1


def normalize_box(box: FibBox) -> tuple[FibBox, int]:
    """Reduce to a primitive box; return it with the triple multiplier.

    Each common factor ``k`` removes ``k**2`` from the triple and each
    halving of an even second column removes 2.
    """
    m = 1
    while True:
        k = gcd(gcd(box.q, box.q_prime), gcd(box.p, box.p_prime))
        if k > 1:
            box = FibBox(box.q // k, box.q_prime // k, box.p // k, box.p_prime // k)
            m *= k * k
            continue
        if box.q_prime % 2 == 0:
            # q' + 2q = p', so p' is even too
            box = FibBox.from_column(box.q_prime // 2, box.p_prime // 2)
            m *= 2
            continue
        return box, m


def _require_primitive(box: FibBox) -> None:
    if not is_primitive_box(box):
        raise NotPrimitive(f"{box} is not a primitive box")


def radii_of(box: FibBox) -> Radii:
    _require_primitive(box)
    q, qq, p, pp = box.entries()
    r = Radii(q * qq, qq * p, q * pp, p * pp)
    a, b, c = triple_from_box(box)
    if (r.r1 + r.r2, r.r1 + r.r3, r.r2 + r.r3) != (a, b, c) or r.r1 + r.r2 + r.r3 != r.r4:
        raise InvariantViolation(f"radius sums disagree with the triple for {box}", box)
    return r


def area_perimeter_of(box: FibBox) -> tuple[int, int]:
    r = radii_of(box)
    a, b, c = triple_from_box(box)
    area = box.q * box.q_prime * box.p * box.p_prime
    perimeter = r.r1 + r.r2 + r.r3 + r.r4
    if 2 * area != a * b or perimeter != a + b + c or perimeter != 2 * r.r4:
        raise InvariantViolation(f"area/perimeter mismatch for {box}", box)
    return area, perimeter


def pell_shift(box: FibBox) -> FibBox:
    """Promote the second row to the first: ``[.., .., x, y] -> [y, x, .., ..]``."""
    _require_primitive(box)
    return FibBox.from_column(box.p, box.p + box.p_prime)


def family_plato(n: int) -> PptTriple:
    """``(4n^2 - 1, 4n, 4n^2 + 1)``: the triples with ``c - a = 2``."""
    if n < 1:
        raise DomainError(f"Plato index must be >= 1, got {n}")
    return PptTriple(4 * n * n - 1, 4 * n, 4 * n * n + 1)


def family_pythagoras(n: int) -> PptTriple:
    """``(2n + 1, 2n(n + 1), 2n(n + 1) + 1)``: the triples with ``c - b = 1``."""
    if n < 1:
        raise DomainError(f"Pythagoras index must be >= 1, got {n}")
    b = 2 * n * (n + 1)
    return PptTriple(2 * n + 1, b, b + 1)


def family_fermat(n: int) -> PptTriple:
    """Triple of the root box after ``n`` Pell shifts; ``|a - b| = 1``."""
    if n < 0:
        raise DomainError(f"shift count must be >= 0, got {n}")
    box = ROOT_BOX
    for _ in range(n):
        box = pell_shift(box)
    return triple_from_box(box)


def classify_non_primitive(a: int, b: int, c: int) -> NonPrimitiveReport:
    a, b, c = (int(x) for x in (a, b, c))
    if min(a, b, c) <= 0 or a * a + b * b != c * c:
        raise NotPythagorean(f"{(a, b, c)} is not a Pythagorean triple")
    d = gcd(gcd(a, b), c)
    return NonPrimitiveReport(d, PptTriple.from_sides(a // d, b // d, c // d))


def primitive_boxes(max_p_prime: int):
    """Yield every primitive box with ``p' <= max_p_prime`` ordered by ``(p, q)``."""
    for p in range(2, max_p_prime):
        for q in range(1 + p % 2, min(p, max_p_prime - p + 1), 2):
            if gcd(p, q) == 1:
                yield FibBox.from_column(q, p)
