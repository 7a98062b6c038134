from fractions import Fraction

import pytest

from phicong.divpoly import division_polynomials
from phicong.errors import DomainError
from phicong.qexp import basis_series, denominator_report, xtilde, ytilde


class TestBasis:
    def test_valuations(self):
        b = basis_series(30)
        assert b.eta4.valuation == 1
        assert b.E4.coeff(0) == 1 and b.E6.coeff(0) == 1
        assert b.x.valuation == -2
        assert b.y.valuation == -3

    def test_weierstrass_relation(self):
        b = basis_series(30)
        assert (b.y * b.y - (b.x * b.x * b.x - 1728)).is_zero()

    def test_x_integral(self):
        b = basis_series(40)
        assert all(c.denominator == 1 for _, c in b.x.items())

    def test_support_six_torsion(self):
        b = basis_series(40)
        assert all(e % 6 == 4 for e, _ in b.x.items())
        assert all(e % 6 == 3 for e, _ in b.y.items())

    def test_first_coefficients(self):
        # x = q^-2 + 254 q^4 + ... ; check against E4/eta^8 by hand for
        # the first couple of terms: E4 = 1 + 240 q^6 + ...,
        # eta^8 = q^2 (1 - 8 q^6 + ...)
        b = basis_series(20)
        assert b.x.coeff(-2) == 1
        assert b.x.coeff(4) == 248


class TestXtilde:
    def test_N2_golden(self):
        s = xtilde(2, 17).series
        assert s.coeff(-2) == 4
        assert s.coeff(4) == 20
        assert s.coeff(10) == -28

    def test_N3_golden(self):
        s = xtilde(3, 17).series
        assert s.coeff(-2) == 9
        assert s.coeff(4) == Fraction(40, 3)
        assert s.coeff(10) == Fraction(-68, 81)

    def test_N5_golden(self):
        s = xtilde(5, 17).series
        assert s.coeff(-2) == 25
        assert s.coeff(4) == Fraction(18104, 625)
        assert s.coeff(10) == Fraction(155226332, 9765625)

    def test_defining_relation(self):
        for n in (2, 3):
            s = xtilde(n, 29).series
            b = basis_series(40)
            t = division_polynomials(n)
            eta8 = b.eta4 * b.eta4
            lhs = t.psiSq.map_coeffs(Fraction).evaluate(s) * b.E4
            rhs = t.phiPol.map_coeffs(Fraction).evaluate(s) * eta8
            assert (lhs - rhs).is_zero()

    def test_support_lattice(self):
        for n in range(2, 7):
            s = xtilde(n, 35).series
            assert all(e % 6 == 4 for e, _ in s.items())

    def test_leading_coefficient(self):
        for n in range(2, 7):
            assert xtilde(n, 17).series.coeff(-2) == n * n

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            xtilde(1, 30)
        with pytest.raises(DomainError):
            xtilde(2, 10)


class TestYtilde:
    def test_N1_is_y(self):
        assert ytilde(1, 20).coeffs == basis_series(20).y.coeffs

    def test_square_relation(self):
        for n in (2, 3):
            xt = xtilde(n, 29).series
            yt = ytilde(n, 29)
            assert (yt * yt - (xt * xt * xt - 1728)).is_zero()

    def test_leading_coefficient(self):
        for n in (2, 3, 4, 5):
            assert ytilde(n, 17).coeff(-3) == n ** 3


class TestDenominators:
    def test_N2_all_integral(self):
        rep = denominator_report(2, 173)
        for pr in rep.primes:
            assert pr.integral and pr.bound_ok
            if pr.p == 2:
                assert pr.expected_integral      # 2 || 2 but 4 does not divide
            else:
                assert pr.expected_integral

    def test_N5_unbounded_at_5(self):
        rep = denominator_report(5, 173)
        by_p = {pr.p: pr for pr in rep.primes}
        assert not by_p[5].expected_integral
        assert not by_p[5].integral
        assert by_p[5].unbounded_trend
        assert by_p[5].min_vals[2] < -4
        assert by_p[5].bound_ok
        for p in (2, 3, 7, 11):
            assert by_p[p].integral and by_p[p].expected_integral

    def test_too_few_terms(self):
        with pytest.raises(DomainError):
            denominator_report(2, 30)
