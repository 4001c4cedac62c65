import random
from fractions import Fraction

import pytest

from superchar.cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi, hermitian_term


def test_basic_root_identities():
    i = Cyclotomic.root(4)
    assert i * i == -1
    z3 = Cyclotomic.root(3)
    assert (1 + z3 + z3 * z3).is_zero()
    z8 = Cyclotomic.root(8)
    assert z8.conjugate() == Cyclotomic.root(8, 7)
    assert Cyclotomic.root(6, 3) == -1
    assert Cyclotomic.root(5, 7) == Cyclotomic.root(5, 2)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    for e in range(1, 30):
        assert len(cyclotomic_polynomial(e)) == euler_phi(e) + 1


def test_hermitian_term_examples():
    i = Cyclotomic.root(4)
    assert hermitian_term(i, i) == 1
    a = 1 + Cyclotomic.root(3)
    assert hermitian_term(a, a) == 1
    zero = Cyclotomic.zero(3)
    assert hermitian_term(zero, a).is_zero()


def test_order_lifting_and_equality():
    one2 = Cyclotomic.one(2)
    one4 = Cyclotomic.one(4)
    assert one2 == one4
    z4 = Cyclotomic.root(4)
    z8sq = Cyclotomic.root(8) * Cyclotomic.root(8)
    assert z4 == z8sq
    assert z4 + Cyclotomic.root(6, 3) == z4 - 1


def test_ring_axioms_on_random_values():
    rng = random.Random(7)

    def rand_value(order):
        coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(order)]
        return Cyclotomic(order, coeffs)

    for order in (3, 4, 6, 8, 12):
        for _ in range(15):
            a, b, c = (rand_value(order) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a
            assert a * b == b * a
            assert (a - a).is_zero()
            assert abs((a * b).approx() - a.approx() * b.approx()) < 1e-9


def test_conjugation_is_an_automorphism():
    rng = random.Random(11)
    for order in (5, 8, 12):
        for _ in range(10):
            a = Cyclotomic(order, [rng.randint(-3, 3) for _ in range(order)])
            b = Cyclotomic(order, [rng.randint(-3, 3) for _ in range(order)])
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()
            assert (a + b).conjugate() == a.conjugate() + b.conjugate()
            assert a.conjugate().conjugate() == a


def test_galois_requires_coprime_exponent():
    z6 = Cyclotomic.root(6)
    with pytest.raises(ValueError):
        z6.galois(2)
    assert z6.galois(5) == z6.conjugate()


def test_display_and_parse_round_trip():
    rng = random.Random(3)
    for order in (1, 2, 4, 6, 8, 12):
        for _ in range(20):
            v = Cyclotomic(
                order,
                [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(order)],
            )
            assert Cyclotomic.parse(str(v), order) == v
    assert Cyclotomic.parse("0", 4).is_zero()
    assert Cyclotomic.parse("-z", 4) == -Cyclotomic.root(4)
    assert Cyclotomic.parse("1 - z^2", 8) == 1 - Cyclotomic.root(8, 2)


def test_parse_rejects_garbage():
    for bad in ("", "z**2", "1 +", "q", "1//2"):
        with pytest.raises(ValueError):
            Cyclotomic.parse(bad, 4)


def test_json_round_trip():
    v = Fraction(2, 3) * Cyclotomic.root(8) - 1
    assert Cyclotomic.from_json(v.to_json()) == v


def test_rational_extraction():
    v = Cyclotomic.from_rational(Fraction(7, 2), 12)
    assert v.is_rational() and v.rational_value() == Fraction(7, 2)
    with pytest.raises(ValueError):
        v.integer_value()
    with pytest.raises(ValueError):
        Cyclotomic.root(8).rational_value()


def test_division_by_rationals():
    z = Cyclotomic.root(4)
    assert (z + z) / 2 == z
    assert z / Fraction(1, 3) == 3 * z
    with pytest.raises(TypeError):
        z / z
