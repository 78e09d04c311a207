# test_poly.py ---
#
# Filename: test_poly.py
#
# Commentary:
#
# Exact polynomial arithmetic, basis changes and interpolation.
#
import random
from unittest import TestCase

import pytest
from sympy.functions.combinatorial.numbers import stirling

from polyzoo.errors import InterpolationError
from polyzoo.poly import (BiPoly, FFPoly, UniPoly, ff_to_standard, newton_interpolate,
                          standard_to_ff, stirling2)


class TestUniPoly(TestCase):

    def test_arithmetic(self):
        k = UniPoly([0, 1])
        self.assertEqual((k - 1) * (k + 1), k ** 2 - 1)
        self.assertEqual(UniPoly([1, 2, 0, 0]).degree, 1, "Trailing zeros are trimmed")
        self.assertEqual(UniPoly().degree, -1)
        self.assertEqual(3 - k, UniPoly([3, -1]))
        self.assertEqual(UniPoly([5]), 5)

    def test_eval_and_compose(self):
        p = UniPoly([1, -3, 2])
        self.assertEqual(p.eval(4), 21)
        self.assertEqual(p(0), 1)
        self.assertEqual(p.compose(UniPoly([1, 1])), UniPoly([0, 1, 2]))

    def test_falling_factorial(self):
        self.assertEqual(UniPoly.falling_factorial(3), UniPoly([0, 2, -3, 1]))
        self.assertEqual(UniPoly.falling_factorial(0), UniPoly([1]))

    def test_rendering(self):
        self.assertEqual(UniPoly([0, -1, 1]).to_text(), "-k + k^2")
        self.assertEqual(UniPoly([1, 3]).to_text('X'), "1 + 3*X")
        self.assertEqual(UniPoly().to_text(), "0")
        self.assertEqual(UniPoly([0, 0, 2]).to_latex('x'), "2 x^{2}")
        self.assertEqual(UniPoly([7, 0, -1]).to_json(), ["7", "0", "-1"])

    def test_big_integers_stay_exact(self):
        big = UniPoly([10 ** 40, 1])
        self.assertEqual((big * big).coeff(0), 10 ** 80)


class TestBiPoly(TestCase):

    def test_arithmetic_and_eval(self):
        x, y = BiPoly.x(), BiPoly.y()
        p = (x + y) * (x + y)
        self.assertEqual(p.coeff(1, 1), 2)
        self.assertEqual(p.eval(2, 3), 25)
        self.assertEqual(p - p, BiPoly())
        self.assertEqual(x * 2 + 1, BiPoly({(1, 0): 2, (0, 0): 1}))

    def test_substitute(self):
        p = BiPoly({(2, 0): 1, (0, 1): 3})
        self.assertEqual(p.substitute(UniPoly([1, -1]), UniPoly()), UniPoly([1, -2, 1]))

    def test_rendering(self):
        p = BiPoly({(1, 0): 1, (0, 1): 1, (2, 0): 2})
        self.assertEqual(p.to_text(), "y + x + 2*x^2")
        self.assertEqual(p.to_json(), [[0, 1, "1"], [1, 0, "1"], [2, 0, "2"]])


class TestFFPoly(TestCase):

    def test_eval_matches_standard_form(self):
        p = FFPoly([0, 1, 3, 1])
        standard = ff_to_standard(p)
        for k in range(-3, 8):
            self.assertEqual(p.eval(k), standard.eval(k), f"Mismatch at k={k}")

    def test_rendering(self):
        self.assertEqual(FFPoly([0, 1, 1]).to_text(), "k_(1) + k_(2)")
        self.assertEqual(FFPoly([0, 0, 1]).to_latex(), "k^{\\underline{2}}")


def test_stirling_numbers():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert stirling2(0, 0) == 1
    for n in range(1, 10):
        for k in range(n + 1):
            assert stirling(n, k) == stirling2(n, k)


def test_basis_change_round_trip():
    rng = random.Random(5)
    for _ in range(100):
        coeffs = [rng.randint(-20, 20) for _ in range(rng.randint(0, 8))]
        p = UniPoly(coeffs)
        assert ff_to_standard(standard_to_ff(p)) == p
        f = FFPoly(coeffs)
        assert standard_to_ff(ff_to_standard(f)) == f


def test_k_power_in_ff_basis():
    assert standard_to_ff(UniPoly.monomial(2)) == FFPoly([0, 1, 1])
    assert standard_to_ff(UniPoly.monomial(3)) == FFPoly([0, 1, 3, 1])


def test_newton_interpolation():
    rng = random.Random(9)
    for _ in range(50):
        p = UniPoly([rng.randint(-9, 9) for _ in range(rng.randint(1, 7))])
        d = max(p.degree, 0)
        recovered = newton_interpolate([p.eval(k) for k in range(d + 1)])
        assert recovered.to_standard() == p


def test_interpolation_rejects_non_integral_differences():
    with pytest.raises(InterpolationError):
        newton_interpolate([0, 1, 3])

#
# test_poly.py ends here
