import random
from fractions import Fraction

import pytest

from altsign.errors import NonDivisibleError
from altsign.exactalg import (Gf, MPoly, binomial, det_fraction_free,
                              gf_from_mpoly)


def var(name):
    return MPoly.variable(name)


def det_cofactor(m):
    """Naive cofactor expansion, the independent determinant oracle."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


class TestBinomial:
    def test_examples(self):
        assert binomial(5, 2) == 10
        assert binomial(-1, 2) == 1  # (-1)(-2)/2!
        assert binomial(3, -1) == 0

    def test_pascal_and_negation_rules(self):
        for a in range(-20, 21):
            for k in range(-2, 21):
                assert binomial(a, k) == binomial(a - 1, k) + binomial(a - 1, k - 1)
                assert binomial(a, k) == (-1) ** k * binomial(k - a - 1, k) or k < 0
                if k >= 0:
                    assert binomial(a, k) == (-1) ** k * binomial(k - a - 1, k)

    def test_matches_factorial_definition(self):
        from math import comb
        for a in range(0, 15):
            for k in range(0, 15):
                assert binomial(a, k) == comb(a, k)


class TestMPoly:
    def test_shift_var(self):
        p = var("x2") - var("x1")
        assert p.shift_var("x2", 1) == var("x2") - var("x1") + 1

    def test_exact_divide(self):
        y1, y2 = var("Y1"), var("Y2")
        assert ((y2 - y1) * (y2 + y1)).exact_divide(y2 - y1) == y2 + y1

    def test_substitute_scalar(self):
        p = var("x1") * var("l")
        assert p.substitute("l", 3) == 3 * var("x1")

    def test_substitute_poly(self):
        p = var("x1") ** 2
        q = p.substitute("x1", var("l") - 3)
        assert q == var("l") ** 2 - 6 * var("l") + 9

    def test_ring_axioms_smoke(self):
        rng = random.Random(7)
        for _ in range(20):
            a, b, c = (random_poly(rng) for _ in range(3))
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c
            assert a + b == b + a
            assert a * b == b * a

    def test_exact_divide_roundtrip(self):
        rng = random.Random(11)
        for _ in range(30):
            p = random_poly(rng)
            q = random_poly(rng)
            if not q:
                continue
            assert (p * q).exact_divide(q) == p

    def test_non_divisible_reports_remainder(self):
        x = var("x1")
        with pytest.raises(NonDivisibleError) as info:
            (x ** 2 + 1).exact_divide(x)
        assert info.value.remainder

    def test_evaluate(self):
        p = var("x1") * var("x2") + Fraction(1, 2)
        assert p.evaluate({"x1": 2, "x2": 3}) == Fraction(13, 2)

    def test_str_canonical(self):
        p = var("x1") + var("x2") ** 2 - 1
        assert str(p) == "x2^2 + x1 - 1"


def random_poly(rng, names=("x1", "x2", "Y1")):
    p = MPoly.constant(0)
    for _ in range(rng.randint(0, 4)):
        term = MPoly.constant(rng.randint(-3, 3))
        for name in names:
            term = term * var(name) ** rng.randint(0, 2)
        p += term
    return p


class TestGf:
    def test_arith_and_eval(self):
        w = Gf.monomial(1, 0, 1) + Gf.monomial(0, 1, 1) + 2 * Gf.monomial(0, 0, 1)
        assert w.evaluate() == 4
        assert w.evaluate(p=2, q=3, r=1) == 7
        assert (w - w).is_zero()

    def test_p_plus_q_minus_1(self):
        b = Gf.p_plus_q_minus_1()
        assert b.evaluate() == 1
        assert b * Gf.one() == b

    def test_str_matches_handwritten_order(self):
        g = (Gf.monomial(r=2) + 4 * Gf.monomial(r=1) + Gf.monomial(p=1, r=1)
             + Gf.monomial(q=1, r=1) + Gf.one())
        assert str(g) == "R^2 + 4*R + P*R + Q*R + 1"

    def test_exact_divide(self):
        a = Gf.monomial(p=1) + Gf.one()
        b = Gf.monomial(q=1) + 2 * Gf.one()
        assert (a * b).exact_divide(a) == b
        with pytest.raises(NonDivisibleError):
            (a * b + Gf.one()).exact_divide(a)

    def test_gf_from_mpoly(self):
        p = var("P") * var("R") + 2
        assert gf_from_mpoly(p) == Gf.monomial(p=1, r=1) + 2 * Gf.one()


class TestDeterminant:
    def test_identity(self):
        m = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
        assert det_fraction_free(m) == 1

    def test_empty_and_single(self):
        assert det_fraction_free([]) == 1
        assert det_fraction_free([[5]]) == 5

    def test_gf_example(self):
        # oracle: 2x2 cofactor expansion done by hand
        R, P, Q = Gf.monomial(r=1), Gf.monomial(p=1), Gf.monomial(q=1)
        one = Gf.one()
        m = [[R + one, R],
             [R * (P + Q + 2 * one), R * (P + Q + 3 * one) + one]]
        expected = (R * R + 4 * R + P * R + Q * R + one)
        assert det_fraction_free(m) == expected
        assert det_cofactor(m) == expected

    def test_equal_rows_zero(self):
        x = var("x1")
        m = [[x, x + 1], [x, x + 1]]
        assert det_fraction_free(m) == MPoly.constant(0)

    def test_against_cofactor_random(self):
        rng = random.Random(23)
        for n in range(1, 5):
            for _ in range(8):
                m = [[random_poly(rng, ("x1", "P")) for _ in range(n)]
                     for _ in range(n)]
                assert det_fraction_free(m) == det_cofactor(m)

    def test_int_matrix(self):
        rng = random.Random(5)
        for n in range(1, 6):
            m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            assert det_fraction_free(m) == det_cofactor(m)
