from fractions import Fraction

import numpy as np
import pytest

from phicong.errors import DomainError, UnsupportedPrimeError
from phicong.invariants import (chi_power, cusp_data_character,
                                cusp_data_cycles, dims_Gp, dims_unipotent,
                                elliptic_counts, genus_newman,
                                genus_pointstab, legendre,
                                noncongruence_report)
from phicong.symplectic import SpParams, permutation, rho_matrices


def is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


PRIMES_TO_200 = [p for p in range(11, 201) if is_prime(p)]


class TestChi:
    def test_examples_p11(self):
        assert chi_power(11, 1) == 3
        assert chi_power(11, 5) == 23          # (p-1)/2
        assert chi_power(11, 110) == 1464      # identity
        assert chi_power(11, 11) == 14         # p | d
        assert chi_power(11, 55) == 1464       # T^(p(p-1)/2) = -I acts as id

    def test_identity_value(self):
        for p in (11, 13, 17):
            assert chi_power(p, p * (p - 1)) == (p * p + 1) * (p + 1)

    def test_non_divisor_rejected(self):
        with pytest.raises(DomainError):
            chi_power(11, 3)

    def test_small_prime_rejected(self):
        with pytest.raises(UnsupportedPrimeError):
            chi_power(7, 1)

    def test_chi_matches_fixed_points(self):
        # independent verification against actual permutation powers
        p = 11
        _, T4 = rho_matrices(SpParams(p, 2))
        perm = permutation(T4, p)
        n = len(perm)
        for d in (1, 2, 5, 10, 11, 55):
            acc = np.arange(n)
            for _ in range(d):
                acc = perm[acc]
            assert chi_power(p, d) == int(np.count_nonzero(acc == np.arange(n)))


class TestCusps:
    def test_character_p11(self):
        data = cusp_data_character(11)
        assert data.total == 34
        assert data.widths == {1: 3, 5: 4, 11: 1, 55: 26}
        assert data.width_sum() == 1464

    def test_character_p13(self):
        data = cusp_data_character(13)
        assert data.total == 38
        assert data.widths == {1: 3, 6: 4, 13: 1, 78: 30}
        assert data.width_sum() == 2380

    def test_cycles_dual_oracle(self):
        for p in (11, 13):
            _, T4 = rho_matrices(SpParams(p, 2))
            cyc = cusp_data_cycles(permutation(T4, p))
            chr_ = cusp_data_character(p)
            assert cyc.widths == chr_.widths
            assert cyc.total == chr_.total

    def test_cycles_identity(self):
        data = cusp_data_cycles(np.arange(10))
        assert data.widths == {1: 10}
        assert data.total == 10

    def test_character_range(self):
        for p in PRIMES_TO_200[:10]:
            data = cusp_data_character(p)
            assert data.total == 2 * p + 12


class TestElliptic:
    def test_examples(self):
        assert elliptic_counts(13) == (16, 28)
        assert elliptic_counts(11) == (12, 0)
        assert elliptic_counts(17) == (20, 0)
        assert elliptic_counts(19) == (20, 40)
        assert elliptic_counts(23) == (24, 0)

    def test_small_prime_rejected(self):
        with pytest.raises(UnsupportedPrimeError):
            elliptic_counts(7)


class TestGenus:
    def test_table(self):
        expected = {11: 103, 13: 167, 17: 408, 19: 561, 23: 1026,
                    29: 2063, 31: 2500}
        for p, g in expected.items():
            assert genus_pointstab(p) == g

    def test_routes_agree_to_200(self):
        # genus_pointstab raises InternalConsistencyError on disagreement
        for p in PRIMES_TO_200:
            assert genus_pointstab(p) >= 0

    def test_newman(self):
        assert genus_newman(6 * 36, 6) == 1
        assert genus_newman(6, 6) == 1
        assert genus_newman(12, 4) == Fraction(3, 4)
        with pytest.raises(DomainError):
            genus_newman(0, 6)


class TestDims:
    def test_unipotent(self):
        d = dims_unipotent(1, 24, True)
        assert d.dim_M == 24 and d.dim_M_char == 1
        assert d.dim_S_char == 1 and d.dim_eis_char == 0
        d = dims_unipotent(1, 24, False)
        assert d.dim_S_char == 0 and d.dim_eis_char == 1
        d = dims_unipotent(3, 54, True)
        assert d.dim_M == 162 and d.dim_S_char == 2 and d.dim_eis_char == 1

    def test_gp(self):
        d = dims_Gp(2, 5)
        assert d.dim_M == 6 and d.genus == 0
        assert d.cusps == 3 and d.elliptic2 == 3
        d = dims_Gp(1, 17)
        assert d.dim_M == 8
        with pytest.raises(UnsupportedPrimeError):
            dims_Gp(2, 11)

    def test_gp_odd_weight(self):
        assert dims_Gp(3, 5).dim_M == 7


class TestNoncongruence:
    def test_witness(self):
        for p in (11, 13, 17):
            rep = noncongruence_report(p)
            assert rep.witness
            assert rep.psp4_order > rep.sl2_order
            assert rep.level == p * (p - 1)

    def test_p11_orders(self):
        rep = noncongruence_report(11)
        assert rep.sp4_order == 11 ** 4 * (11 ** 4 - 1) * (11 ** 2 - 1)
        assert rep.psp4_order == rep.sp4_order // 2


class TestLegendre:
    def test_values(self):
        assert legendre(1, 11) == 1
        assert legendre(0, 11) == 0
        assert legendre(2, 11) == -1
        squares = {x * x % 13 for x in range(1, 13)}
        for a in range(1, 13):
            assert legendre(a, 13) == (1 if a in squares else -1)
