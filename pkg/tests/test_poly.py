"""Exact polynomial arithmetic: pinned examples plus randomized
algebraic-law checks."""

import random

import pytest

from orediamond import (
    BiPoly,
    DomainError,
    Q,
    UniPoly,
    exact_divide,
    gcd,
    rational_roots,
    resultant,
    squarefree_decomposition,
    squarefree_part,
    uni_gcd,
    uni_resultant,
)
from util import bi, lau, random_bipoly, random_unipoly, uni


class TestExactDivide:
    def test_difference_of_squares(self):
        assert exact_divide(bi("x^2 - y^2"), bi("x - y")) == bi("x + y")

    def test_constant_term_obstructs(self):
        assert exact_divide(bi("x*y + 1"), bi("x")) is None

    def test_mixed_quotient(self):
        assert exact_divide(bi("2*x*y + x^3*y^2"), bi("x^2*y + 2")) == bi("x*y")

    def test_zero_divisor_rejected(self):
        with pytest.raises(DomainError):
            exact_divide(bi("x"), BiPoly.zero())

    def test_round_trip_random(self):
        rng = random.Random(101)
        for _ in range(200):
            p = random_bipoly(rng)
            q_ = random_bipoly(rng, nonzero=True)
            assert exact_divide(p * q_, q_) == p


class TestGcd:
    def test_linear_factor(self):
        assert gcd(bi("x^2 - 1"), bi("x - 1")) == bi("x - 1")

    def test_monomials(self):
        assert gcd(bi("x*y"), bi("x")) == bi("x")

    def test_shared_quadratic_factor(self):
        f = (bi("x*y + y - 1")) * bi("y")
        g = -bi("y^3") * bi("x*y + y - 1")
        assert gcd(f, g) == (bi("y") * bi("x*y + y - 1")).monic()

    def test_both_zero_rejected(self):
        with pytest.raises(DomainError):
            gcd(BiPoly.zero(), BiPoly.zero())

    def test_divides_both_and_common_scaling(self):
        rng = random.Random(102)
        for _ in range(40):
            p = random_bipoly(rng, maxdeg=3, nonzero=True)
            q_ = random_bipoly(rng, maxdeg=3, nonzero=True)
            r = random_bipoly(rng, maxdeg=2, nonzero=True)
            g = gcd(p, q_)
            assert exact_divide(p, g) is not None
            assert exact_divide(q_, g) is not None
            assert gcd(p * r, q_ * r) == (g * r).monic()


class TestResultant:
    def test_two_linear(self):
        assert resultant(bi("y + 1"), bi("y - 1"), "y") == UniPoly.const(Q(-2))

    def test_parabola(self):
        assert resultant(bi("y - x^2"), bi("y"), "y") == uni("x^2")

    def test_pencil_pair(self):
        assert resultant(bi("y"), bi("x*y - 1"), "y") == UniPoly.const(Q(-1))

    def test_both_constant_rejected(self):
        with pytest.raises(DomainError):
            resultant(bi("3"), bi("5"), "y")

    def test_zero_iff_common_factor(self):
        rng = random.Random(103)
        for _ in range(30):
            p = random_bipoly(rng, maxdeg=2, nonzero=True)
            q_ = random_bipoly(rng, maxdeg=2, nonzero=True)
            common = random_bipoly(rng, maxdeg=2, nonzero=True)
            if common.deg_y() < 1:
                common = common + bi("y")
            if p.deg_y() < 1:
                p = p + bi("y")
            if q_.deg_y() < 1:
                q_ = q_ + bi("y^2")
            # sharing a factor of positive y-degree forces a zero resultant
            assert resultant(p * common, q_ * common, "y").is_zero
            r = resultant(p, q_, "y")
            assert r.is_zero == (gcd(p, q_).deg_y() > 0)


class TestSquarefree:
    def test_repeated_factor_dropped(self):
        p = bi("x + y") ** 2 * bi("x - y")
        assert squarefree_part(p) == (bi("x + y") * bi("x - y")).monic()

    def test_pure_power(self):
        assert squarefree_part(bi("x^3")) == bi("x")

    def test_pencil_power(self):
        p = bi("y^2") * bi("x*y + y - 1")
        assert squarefree_part(p) == (bi("y") * bi("x*y + y - 1")).monic()

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            squarefree_part(BiPoly.zero())

    def test_known_factorizations(self):
        rng = random.Random(104)
        for _ in range(20):
            a = random_bipoly(rng, maxdeg=2, nonzero=True)
            b = random_bipoly(rng, maxdeg=2, nonzero=True)
            if a.is_constant:
                a = a + bi("x")
            if b.is_constant:
                b = b + bi("y")
            g = gcd(a, b)
            if not g.is_constant:
                continue
            sf = squarefree_part(a * a * b)
            # the square-free part divides a*b and is divided by it up to
            # repeated factors of a and b themselves
            assert exact_divide((a * b).monic(), sf) is not None


class TestRingAxioms:
    def test_bipoly_axioms(self):
        rng = random.Random(105)
        for trial in range(1000):
            maxcoef = 10**6 if trial % 10 == 0 else 10
            p = random_bipoly(rng, maxdeg=6, nterms=3, maxcoef=maxcoef)
            q_ = random_bipoly(rng, maxdeg=6, nterms=3, maxcoef=maxcoef)
            r = random_bipoly(rng, maxdeg=6, nterms=3, maxcoef=maxcoef)
            assert (p + q_) + r == p + (q_ + r)
            assert p + q_ == q_ + p
            assert (p * q_) * r == p * (q_ * r)
            assert p * q_ == q_ * p
            assert p * (q_ + r) == p * q_ + p * r

    def test_unipoly_axioms_and_divmod(self):
        rng = random.Random(106)
        for _ in range(200):
            a = random_unipoly(rng)
            b = random_unipoly(rng, nonzero=True)
            quo, rem = a.divmod(b)
            assert quo * b + rem == a
            assert rem.is_zero or rem.degree() < b.degree()

    def test_laurent_axioms(self):
        rng = random.Random(107)
        for _ in range(200):
            a = lau("x^-2") * random_bipoly(rng, maxdeg=0).coeff(0, 0) + lau("x") * Q(
                rng.randrange(-5, 6)
            )
            b = lau("x^-1") * Q(rng.randrange(-5, 6)) + lau("x^3") * Q(
                rng.randrange(-5, 6)
            )
            c = lau("1") * Q(rng.randrange(-5, 6))
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c


class TestUnivariateTools:
    def test_uni_gcd(self):
        assert uni_gcd(uni("x^2 - 1"), uni("x^2 - 2*x + 1")) == uni("x - 1")

    def test_uni_resultant_common_root(self):
        assert uni_resultant(uni("x - 2"), uni("x^2 - 4")) == 0
        assert uni_resultant(uni("x - 2"), uni("x^2 + 1")) != 0

    def test_rational_roots(self):
        p = uni("x^3 - x")  # roots 0, 1, -1
        assert sorted(rational_roots(p)) == [Q(-1), Q(0), Q(1)]
        p = uni("2*x - 1")
        assert rational_roots(p) == [Q(1, 2)]

    def test_squarefree_decomposition(self):
        p = uni("x - 1") ** 2 * uni("x + 2")
        parts = squarefree_decomposition(p)
        rebuilt = UniPoly.one()
        for factor, mult in parts:
            rebuilt = rebuilt * factor**mult
        assert rebuilt.monic() == p.monic()
        assert any(m == 2 for _, m in parts)
