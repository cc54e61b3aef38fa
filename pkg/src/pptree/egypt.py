"""Egyptian-fraction identities carried by a Fibonacci box.

With radii ``r1..r4`` of a primitive box::

    2/r1 = 1/r1 + 1/r3 + 1/r2 + 1/r4      (denominators sum to the perimeter)
    1/r1 = 1/r3 + 1/r2 + 1/r4
    c/area = 1/r2 + 1/r3

and ``2/(q'p') = 1/(q'p) + 1/(pp')``, which scaled by odd multipliers gives
two-term expansions of ``2/n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .boxcore import FibBox, area_perimeter_of, radii_of, triple_from_box
from .errors import DomainError, InvariantViolation


@dataclass(frozen=True)
class EgyptianDecomposition:
    target: Fraction
    terms: tuple[int, ...]

    def __post_init__(self):
        if any(d <= 0 for d in self.terms):
            raise ValueError(f"unit fraction denominators must be positive: {self.terms}")
        if any(x >= y for x, y in zip(self.terms, self.terms[1:])):
            raise ValueError(f"denominators must be strictly increasing: {self.terms}")
        if sum(Fraction(1, d) for d in self.terms) != self.target:
            raise InvariantViolation(f"{self.terms} does not sum to {self.target}", self)

    def __str__(self) -> str:
        return f"{self.target} = " + " + ".join(f"1/{d}" for d in self.terms)


def _decomp(target: Fraction, denominators) -> EgyptianDecomposition:
    return EgyptianDecomposition(target, tuple(sorted(denominators)))


def ef_four_term(box: FibBox) -> EgyptianDecomposition:
    r = radii_of(box)
    out = _decomp(Fraction(2, r.r1), r)
    _, perimeter = area_perimeter_of(box)
    if sum(out.terms) != perimeter:
        raise InvariantViolation(f"denominators of {out} do not sum to the perimeter", box)
    return out


def ef_three_term(box: FibBox) -> EgyptianDecomposition:
    r = radii_of(box)
    return _decomp(Fraction(1, r.r1), (r.r2, r.r3, r.r4))


def ef_two_term_hypotenuse(box: FibBox) -> EgyptianDecomposition:
    r = radii_of(box)
    area, _ = area_perimeter_of(box)
    c = triple_from_box(box)[2]
    return _decomp(Fraction(c, area), (r.r2, r.r3))


def rhind_two_term(n: int) -> list[EgyptianDecomposition]:
    """Two-term expansions ``2/n = 1/x + 1/y`` built from boxes.

    For each divisor ``k >= 3`` of ``n`` and each split ``k = q'p'`` with
    ``q' < p'`` take ``p = (q' + p')/2`` and scale ``1/(q'p) + 1/(pp')`` by
    ``n/k``.  Sorted by the smaller denominator.
    """
    if n < 3 or n % 2 == 0:
        raise DomainError(f"n must be odd and >= 3, got {n}")
    target = Fraction(2, n)
    pairs = set()
    for k in _divisors(n):
        if k < 3:
            continue
        m = n // k
        for qq in _divisors(k):
            pp = k // qq
            if qq >= pp:
                break
            p = (qq + pp) // 2
            pairs.add((m * qq * p, m * p * pp))
    return [EgyptianDecomposition(target, pair) for pair in sorted(pairs)]


def rhind_brute_force(n: int) -> set[tuple[int, int]]:
    """Every ``(x, y)``, ``x < y``, with ``2/n = 1/x + 1/y``, by direct search."""
    out = set()
    # x < y forces n/2 < x < n
    for x in range(n // 2 + 1, n):
        num, den = n * x, 2 * x - n
        if den > 0 and num % den == 0:
            out.add((x, num // den))
    return out


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]
