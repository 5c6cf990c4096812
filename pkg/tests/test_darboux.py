"""Darboux polynomial search: pinned pencils, verification invariants,
scaling equivariance, pencil-member selection, and the independent
degree-1 brute-force oracle."""

import random

import pytest

from orediamond import (
    BiPoly,
    Derivation,
    DomainError,
    Q,
    darboux_search,
    first_integral_search,
    pencil_members_through,
)
from orediamond.darboux import INFINITY
from util import bi, degree1_darboux_oracle, in_pencil_span, random_bipoly


def pencil_triples(report):
    return {(p.p, p.q, p.cofactor) for p in report.pencils}


class TestSearchExamples:
    def test_euler(self):
        report = darboux_search(Derivation(bi("x"), bi("y")), 1)
        assert (bi("x"), bi("y"), bi("1")) in pencil_triples(report)

    def test_final_example_reduced(self):
        report = darboux_search(Derivation(bi("1"), bi("-1*y^2")), 2)
        assert (bi("y"), bi("x*y - 1"), bi("-1*y")) in pencil_triples(report)

    def test_quadratic_family(self):
        report = darboux_search(Derivation(bi("1"), bi("x*y^2")), 3)
        assert (bi("y"), bi("x^2*y + 2"), bi("x*y")) in pencil_triples(report)

    def test_zero_derivation_rejected(self):
        with pytest.raises(DomainError):
            darboux_search(Derivation(BiPoly.zero(), BiPoly.zero()), 2)

    def test_certs_verify(self):
        d = Derivation(bi("1"), bi("y"))
        report = darboux_search(d, 3)
        for cert in report.certs:
            assert d.apply(cert.p) == cert.cofactor * cert.p
        for pencil in report.pencils:
            assert d.apply(pencil.p) == pencil.cofactor * pencil.p
            assert d.apply(pencil.q) == pencil.cofactor * pencil.q
            # first-integral identity q*delta(p) - p*delta(q) = 0
            assert (pencil.q * d.apply(pencil.p) - pencil.p * d.apply(pencil.q)).is_zero


class TestFirstIntegral:
    def test_polynomial_integral(self):
        pencil = first_integral_search(Derivation(bi("1"), bi("1")), 1)
        assert (pencil.p, pencil.q, pencil.cofactor) == (bi("x - y"), bi("1"), bi("0"))

    def test_final_example(self):
        pencil = first_integral_search(Derivation(bi("1"), bi("-1*y^2")), 2)
        assert (pencil.p, pencil.q, pencil.cofactor) == (
            bi("y"),
            bi("x*y - 1"),
            bi("-1*y"),
        )

    def test_unique_darboux_excludes_pencil(self):
        assert first_integral_search(Derivation(bi("1"), bi("y")), 4) is None


class TestScalingEquivariance:
    def test_scaled_derivation(self):
        rng = random.Random(401)
        samples = [
            Derivation(bi("x"), bi("y")),
            Derivation(bi("1"), bi("-1*y^2")),
            Derivation(bi("1"), bi("x*y^2")),
            Derivation(bi("y"), bi("x")),
        ]
        for d in samples:
            base = darboux_search(d, 3)
            for alpha in (Q(2), Q(-3), Q(1, 2)):
                scaled = darboux_search(
                    Derivation(alpha * d.dx, alpha * d.dy), 3
                )
                assert {c.p for c in base.certs} == {c.p for c in scaled.certs}
                assert {(c.p, alpha * c.cofactor) for c in base.certs} == {
                    (c.p, c.cofactor) for c in scaled.certs
                }
                assert {(p.p, p.q, alpha * p.cofactor) for p in base.pencils} == {
                    (p.p, p.q, p.cofactor) for p in scaled.pencils
                }


class TestPencilMembers:
    def test_final_example_members(self):
        f = bi("x*y + y - 1") * bi("y")
        d = Derivation(f, -bi("y^2") * f)
        pencil = darboux_search(Derivation(bi("1"), bi("-1*y^2")), 2).pencils[0]
        through = pencil_members_through(pencil, [f, -bi("y^3") * bi("x*y + y - 1")])
        assert through.kind == "finite"
        assert [(t, m) for t, m in through.members] == [
            (Q(0), bi("y")),
            (Q(1), bi("x*y + y - 1")),
        ]
        assert not through.residual_nonrational

    def test_all_members_through_origin(self):
        pencil = darboux_search(Derivation(bi("x"), bi("y")), 1).pencils[0]
        assert (pencil.p, pencil.q) == (bi("x"), bi("y"))
        through = pencil_members_through(pencil, [bi("x"), bi("y")])
        assert through.kind == "all"

    def test_unit_ideal_rejected(self):
        pencil = darboux_search(Derivation(bi("1"), bi("-1*y^2")), 2).pencils[0]
        with pytest.raises(DomainError):
            pencil_members_through(pencil, [bi("1")])


class TestDegreeOneOracle:
    def test_oracle_equivalence(self):
        rng = random.Random(402)
        checked = 0
        while checked < 20:
            d = Derivation(
                random_bipoly(rng, maxdeg=2, nterms=3, maxcoef=4),
                random_bipoly(rng, maxdeg=2, nterms=3, maxcoef=4),
            )
            if d.is_zero:
                continue
            checked += 1
            solutions, infinite = degree1_darboux_oracle(d)
            report = darboux_search(d, 1)
            deg1_certs = {
                (c.p, c.cofactor) for c in report.certs if c.p.total_degree() == 1
            }
            # every oracle solution appears as a cert or inside a pencil span
            for p, c in solutions:
                assert (p, c) in deg1_certs or any(
                    pencil.cofactor == c and in_pencil_span(p, pencil)
                    for pencil in report.pencils
                ), f"oracle found {p.render()} missing from report"
            # every degree-1 cert is found by the oracle
            if not infinite:
                for p, c in deg1_certs:
                    assert (p, c) in solutions, f"report cert {p.render()} not in oracle"
            else:
                # an infinite family must surface as a pencil
                assert report.pencils or not solutions
