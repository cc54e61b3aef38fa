from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pptree.boxcore import (
    ROOT_BOX,
    FibBox,
    Hat,
    PptTriple,
    area_perimeter_of,
    box_from_hat,
    box_from_triple,
    classify_non_primitive,
    family_fermat,
    family_plato,
    family_pythagoras,
    hats_of_triple,
    is_primitive_box,
    normalize_box,
    pell_shift,
    primitive_boxes,
    radii_of,
    triple_from_box,
)
from pptree.errors import DomainError, InvalidTriple, NotPrimitive, NotPrimitiveHat, NotPythagorean
from pptree.verify import check_box, check_normalize

from conftest import primitive_boxes_st


def box(q, qq, p, pp):
    return FibBox(q, qq, p, pp)


class TestPptTriple:
    def test_compares_as_tuple(self):
        t = PptTriple(3, 4, 5)
        assert t == (3, 4, 5)
        assert (t.a, t.b, t.c) == (3, 4, 5)

    @pytest.mark.parametrize("bad", [(4, 3, 5), (6, 8, 10), (3, 4, 6), (0, 1, 1), (-3, 4, 5)])
    def test_rejects(self, bad):
        with pytest.raises(InvalidTriple):
            PptTriple(*bad)

    def test_from_sides_swaps(self):
        assert PptTriple.from_sides(12, 5, 13) == (5, 12, 13)

    def test_big_ints(self):
        f = PptTriple(4565486027761, 1061652293520, 4687298610289)
        assert f.c == 4687298610289


@pytest.mark.parametrize("t, primary, secondary", [
    ((3, 4, 5), (1, 2), (1, 3)),
    ((15, 8, 17), (1, 4), (3, 5)),
    ((5, 12, 13), (2, 3), (1, 5)),
])
def test_hats_of_triple(t, primary, secondary):
    h1, h2 = hats_of_triple(PptTriple(*t))
    assert (h1.num, h1.den) == primary
    assert (h2.num, h2.den) == secondary


def test_box_from_hat():
    assert box_from_hat(Hat(1, 2)) == box(1, 1, 2, 3)
    assert box_from_hat(Hat(5, 8)) == box(5, 3, 8, 13)
    with pytest.raises(NotPrimitiveHat):
        box_from_hat(Hat(1, 1))
    with pytest.raises(NotPrimitiveHat):
        box_from_hat(Hat(1, 3))
    with pytest.raises(NotPrimitiveHat):
        Hat(2, 4)


@pytest.mark.parametrize("t, entries", [
    ((3, 4, 5), (1, 1, 2, 3)),
    ((21, 20, 29), (2, 3, 5, 7)),
    ((39, 80, 89), (5, 3, 8, 13)),
    ((5, 12, 13), (2, 1, 3, 5)),
    ((15, 8, 17), (1, 3, 4, 5)),
    ((7, 24, 25), (3, 1, 4, 7)),
])
def test_box_from_triple(t, entries):
    b = box_from_triple(PptTriple(*t))
    assert b.entries() == entries
    assert triple_from_box(b) == t


def test_triple_from_box():
    assert triple_from_box(box(2, 1, 3, 5)) == (5, 12, 13)
    t = triple_from_box(box(1, 3, 4, 5))
    assert t == (15, 8, 17)
    assert 17 == 1 * 5 + 3 * 4 == 4 * 5 - 1 * 3
    nonprim = triple_from_box(box(2, 2, 4, 6))
    assert nonprim == (12, 16, 20) and not isinstance(nonprim, PptTriple)


def test_key_equations_enforced():
    with pytest.raises(DomainError):
        FibBox(1, 2, 2, 3)
    with pytest.raises(DomainError):
        FibBox(2, 0, 2, 4)


def test_is_primitive_box():
    assert is_primitive_box(box(1, 1, 2, 3))
    assert not is_primitive_box(box(2, 2, 4, 6))
    assert not is_primitive_box(box(1, 2, 3, 4))
    assert triple_from_box(box(1, 2, 3, 4)) == (8, 6, 10)


@pytest.mark.parametrize("entries, core, m", [
    ((2, 2, 4, 6), (1, 1, 2, 3), 4),
    ((1, 2, 3, 4), (1, 1, 2, 3), 2),
    ((1, 1, 2, 3), (1, 1, 2, 3), 1),
])
def test_normalize_box(entries, core, m):
    got, mult = normalize_box(box(*entries))
    assert got.entries() == core
    assert mult == m


def test_normalize_exhaustive():
    # every box, primitive or not, with p' <= 200
    assert check_normalize(200) == sum(min(p, 200 - p + 1) - 1 for p in range(2, 200))


@given(st.integers(1, 40), st.integers(2, 60), st.integers(1, 59))
def test_normalize_scaled_boxes(k, p, q):
    q = q % (p - 1) + 1
    b = FibBox.from_column(k * q, k * p)
    core, m = normalize_box(b)
    big, small = triple_from_box(b), triple_from_box(core)
    assert sorted(big[:2]) == sorted(m * v for v in small[:2]) and big[2] == m * small[2]
    g = gcd(big[0], big[1])
    assert m == g


def test_radii_examples():
    # oracle: in-radius s-c, ex-radii s-b, s-a, s
    for t, expected in [((5, 12, 13), (2, 3, 10, 15)), ((3, 4, 5), (1, 2, 3, 6)), ((7, 24, 25), (3, 4, 21, 28))]:
        a, b, c = t
        s = (a + b + c) // 2
        assert sorted(expected) == sorted((s - c, s - b, s - a, s))
        assert radii_of(box_from_triple(PptTriple(*t))) == expected
    with pytest.raises(NotPrimitive):
        radii_of(box(2, 2, 4, 6))


@pytest.mark.parametrize("t, area, perimeter", [
    ((5, 12, 13), 30, 30),
    ((3, 4, 5), 6, 12),
    ((21, 20, 29), 210, 70),
])
def test_area_perimeter(t, area, perimeter):
    assert area == t[0] * t[1] // 2 and perimeter == sum(t)
    assert area_perimeter_of(box_from_triple(PptTriple(*t))) == (area, perimeter)


def test_pell_shift_chain():
    k = ROOT_BOX
    chain = []
    for _ in range(3):
        k = pell_shift(k)
        chain.append(k.uncoiled())
    assert chain == [(3, 2, 5, 7), (7, 5, 12, 17), (17, 12, 29, 41)]
    with pytest.raises(NotPrimitive):
        pell_shift(box(2, 2, 4, 6))


def test_pell_shift_thirty_steps():
    # after n shifts K = [Q(n+1), P(n+1), P(n+2), Q(n+2)], both sequences x -> 2x + prev
    P, Q = [0, 1], [1, 1]
    while len(P) < 34:
        P.append(2 * P[-1] + P[-2])
        Q.append(2 * Q[-1] + Q[-2])
    k = ROOT_BOX
    for n in range(1, 31):
        k = pell_shift(k)
        assert k.uncoiled() == (Q[n + 1], P[n + 1], P[n + 2], Q[n + 2])
        a, b, _c = triple_from_box(k)
        assert is_primitive_box(k) and abs(a - b) == 1
    assert triple_from_box(k)[2] > 2**63


def test_families():
    assert family_plato(1) == (3, 4, 5)
    assert family_plato(2) == (15, 8, 17)
    assert family_plato(3) == (35, 12, 37)
    assert family_pythagoras(1) == (3, 4, 5)
    assert family_pythagoras(3) == (7, 24, 25)
    assert family_pythagoras(7) == (15, 112, 113)
    assert family_fermat(0) == (3, 4, 5)
    assert family_fermat(1) == (21, 20, 29)
    assert family_fermat(2) == (119, 120, 169)
    for f, bad in [(family_plato, 0), (family_pythagoras, 0), (family_fermat, -1)]:
        with pytest.raises(DomainError):
            f(bad)


@given(st.integers(1, 10**6))
def test_family_defining_relations(n):
    a, b, c = family_plato(n)
    assert c - a == 2
    a, b, c = family_pythagoras(n)
    assert c - b == 1


def test_classify_non_primitive():
    assert classify_non_primitive(6, 8, 10) == (2, (3, 4, 5))
    assert classify_non_primitive(3, 4, 5) == (1, (3, 4, 5))
    assert classify_non_primitive(16, 12, 20) == (4, (3, 4, 5))
    with pytest.raises(NotPythagorean):
        classify_non_primitive(9, 12, 16)


@given(primitive_boxes_st())
def test_box_identities_random(b):
    check_box(b)


@given(primitive_boxes_st())
def test_hat_identities(b):
    x, y = Fraction(b.q, b.p), Fraction(b.q_prime, b.p_prime)
    assert x * y + x + y == 1


def test_round_trip_on_all_small_ppts(small_ppts):
    for t in small_ppts:
        b = box_from_triple(PptTriple(*t))
        assert triple_from_box(b) == t
        assert box_from_triple(triple_from_box(b)) == b


def test_box_triples_equal_brute_force():
    # {triple(b) : b primitive, p <= 100} vs coprime opposite-parity (p, q), p <= 100
    P = 100
    from_boxes = set()
    for p in range(2, P + 1):
        for q in range(1, p):
            try:
                b = box_from_hat(Hat(q, p))
            except NotPrimitiveHat:
                continue
            from_boxes.add(tuple(triple_from_box(b)))
    oracle = {(p * p - q * q, 2 * p * q, p * p + q * q)
              for p in range(2, P + 1) for q in range(1, p) if gcd(p, q) == 1 and (p - q) % 2}
    assert from_boxes == oracle


def test_primitive_boxes_generator():
    boxes = list(primitive_boxes(20))
    assert all(is_primitive_box(b) and b.p_prime <= 20 for b in boxes)
    expected = {(q, p) for p in range(2, 20) for q in range(1, p)
                if p + q <= 20 and gcd(p, q) == 1 and (p - q) % 2}
    assert {(b.q, b.p) for b in boxes} == expected
