from fractions import Fraction

import pytest
from hypothesis import given

from pptree.boxcore import PptTriple, box_from_triple, primitive_boxes
from pptree.egypt import (
    EgyptianDecomposition,
    ef_four_term,
    ef_three_term,
    ef_two_term_hypotenuse,
    rhind_brute_force,
    rhind_two_term,
)
from pptree.errors import DomainError, NotPrimitive
from pptree.boxcore import FibBox
from pptree.verify import check_egypt

from conftest import primitive_boxes_st


def box_of(*t):
    return box_from_triple(PptTriple(*t))


def unit_sum(terms):
    return sum(Fraction(1, d) for d in terms)


def test_four_term_examples():
    d = ef_four_term(box_of(3, 4, 5))
    assert (d.target, d.terms) == (Fraction(2), (1, 2, 3, 6))
    assert sum(d.terms) == 12
    d = ef_four_term(box_of(5, 12, 13))
    assert (d.target, d.terms) == (Fraction(2, 2), (2, 3, 10, 15))
    assert sum(d.terms) == 30


def test_three_term_examples():
    assert ef_three_term(box_of(3, 4, 5)).terms == (2, 3, 6)
    d = ef_three_term(box_of(5, 12, 13))
    assert (d.target, d.terms) == (Fraction(1, 2), (3, 10, 15))
    d = ef_three_term(box_of(21, 20, 29))
    assert (d.target, d.terms) == (Fraction(1, 6), (14, 15, 35))
    assert unit_sum(d.terms) == Fraction(1, 6)


def test_two_term_examples():
    assert ef_two_term_hypotenuse(box_of(3, 4, 5)) == EgyptianDecomposition(Fraction(5, 6), (2, 3))
    assert ef_two_term_hypotenuse(box_of(5, 12, 13)) == EgyptianDecomposition(Fraction(13, 30), (3, 10))
    assert ef_two_term_hypotenuse(box_of(7, 24, 25)) == EgyptianDecomposition(Fraction(25, 84), (4, 21))


def test_not_primitive():
    with pytest.raises(NotPrimitive):
        ef_four_term(FibBox(2, 2, 4, 6))


def test_decomposition_validates():
    with pytest.raises(AssertionError):
        EgyptianDecomposition(Fraction(1, 2), (3, 4))
    with pytest.raises(ValueError):
        EgyptianDecomposition(Fraction(1), (2, 2))


@given(primitive_boxes_st())
def test_identities_random_boxes(b):
    four = ef_four_term(b)
    assert unit_sum(four.terms) == Fraction(2, b.q * b.q_prime)
    assert len(set(four.terms)) == 4
    two = ef_two_term_hypotenuse(b)
    assert unit_sum(two.terms) == two.target


def test_identities_all_boxes_500():
    assert check_egypt(500, rhind_max=3) == sum(1 for _ in primitive_boxes(500))


def test_rhind_examples():
    assert [d.terms for d in rhind_two_term(3)] == [(2, 6)]
    assert [d.terms for d in rhind_two_term(5)] == [(3, 15)]
    assert {d.terms for d in rhind_two_term(15)} == {(8, 120), (12, 20), (9, 45), (10, 30)}
    assert str(rhind_two_term(5)[0]) == "2/5 = 1/3 + 1/15"


@pytest.mark.parametrize("n", [0, 1, 2, 4, 100])
def test_rhind_domain(n):
    with pytest.raises(DomainError):
        rhind_two_term(n)


def test_rhind_brute_force_oracle_itself():
    # direct double loop for a few n, independent of the y = nx/(2x - n) solve
    for n in (3, 5, 9, 15, 21):
        found = {(x, y) for x in range(1, 4 * n) for y in range(x + 1, n * n + 1)
                 if Fraction(1, x) + Fraction(1, y) == Fraction(2, n)}
        assert found == rhind_brute_force(n)


@pytest.mark.parametrize("n", range(3, 102, 2))
def test_rhind_complete(n):
    got = rhind_two_term(n)
    assert {d.terms for d in got} == rhind_brute_force(n)
    assert all(d.target == Fraction(2, n) for d in got)


def test_classical_rhind_entries():
    known = {5: (3, 15), 7: (4, 28), 9: (6, 18), 11: (6, 66), 15: (10, 30), 23: (12, 276)}
    for n, pair in known.items():
        assert pair in {d.terms for d in rhind_two_term(n)}
