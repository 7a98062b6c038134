"""Elliptic-point counts, cusp data, genus, and dimension formulas.

Covers both families: the symplectic point stabilizers (cusps via the
permutation character chi of the X(F_p) action, with a cycle-type dual
oracle) and the quasi-unipotent family (Newman-style genus formula and
dimension formulas for M_2k / S_2k).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Dict, Optional, Tuple

import numpy as np

from .errors import DomainError, InternalConsistencyError, UnsupportedPrimeError


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _divisors(n: int):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _moebius(n: int) -> int:
    mu = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


def chi_power(p: int, d: int) -> int:
    """chi(T^d), the number of Lagrangians fixed by rho(T)^d.

    d must divide p(p-1).  The value depends only on the conjugacy class
    of T^d: 3 for 1 <= d < (p-1)/2 prime to p; 2p+1 at d = (p-1)/2 and
    d = p-1; p+3 for p | d below p(p-1)/2; |X(F_p)| at the identity.
    """
    if p <= 7:
        raise UnsupportedPrimeError(f"p must be a prime > 7, got {p}")
    n = p * (p - 1)
    if d < 1 or n % d != 0:
        raise DomainError(f"d = {d} does not divide p(p-1) = {n}")
    half = (p - 1) // 2
    if d in (n, n // 2):
        return p ** 3 + p ** 2 + p + 1
    if d in (half, p - 1):
        return 2 * p + 1
    if d % p == 0:
        return p + 3
    return 3


@dataclass(frozen=True)
class CuspData:
    total: int
    widths: Dict[int, int] = field(hash=False)

    def width_sum(self) -> int:
        return sum(w * m for w, m in self.widths.items())


def cusp_data_character(p: int) -> CuspData:
    """Cusp widths of the point stabilizer via Moebius inversion of chi:
    c_n = (1/n) sum_{d | n} mu(n/d) chi(T^d)."""
    n0 = p * (p - 1)
    widths: Dict[int, int] = {}
    total = 0
    for n in _divisors(n0):
        s = sum(_moebius(n // d) * chi_power(p, d) for d in _divisors(n))
        if s % n != 0 or s < 0:
            raise InternalConsistencyError(f"c_{n} is not a non-negative integer")
        c = s // n
        if c:
            widths[n] = c
            total += c
    expected = {1: 3, (p - 1) // 2: 4, p: 1, n0 // 2: 2 * p + 4}
    if total != 2 * p + 12 or widths != expected:
        raise InternalConsistencyError(f"cusp data mismatch for p={p}: {widths}")
    data = CuspData(total, widths)
    if data.width_sum() != (p * p + 1) * (p + 1):
        raise InternalConsistencyError("cusp widths do not partition X(F_p)")
    return data


def cusp_data_cycles(perm_t: np.ndarray) -> CuspData:
    """Cycle-type histogram of the T-action: the independent cusp oracle."""
    n = len(perm_t)
    seen = np.zeros(n, dtype=bool)
    widths: Dict[int, int] = {}
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = int(perm_t[j])
            length += 1
        widths[length] = widths.get(length, 0) + 1
    return CuspData(sum(widths.values()), widths)


def elliptic_counts(p: int) -> Tuple[int, int]:
    """(epsilon_2, epsilon_3) = (p+2+(-1/p), p+1+(p+1)(-3/p))."""
    if p <= 7:
        raise UnsupportedPrimeError(f"p must be a prime > 7, got {p}")
    return p + 2 + legendre(-1, p), p + 1 + (p + 1) * legendre(-3, p)


def genus_pointstab(p: int) -> int:
    """Genus of the point-stabilizer curve, by two independent routes.

    Route 1: g = 1 + index/12 - eps2/4 - eps3/3 - c/2 with
    index = (p^2+1)(p+1) and c = 2p+12.  Route 2: the closed forms by
    p mod 12.  The routes must agree.
    """
    if p <= 7:
        raise UnsupportedPrimeError(f"p must be a prime > 7, got {p}")
    eps2, eps3 = elliptic_counts(p)
    index = (p * p + 1) * (p + 1)
    c = 2 * p + 12
    g1 = 1 + Fraction(index, 12) - Fraction(eps2, 4) - Fraction(eps3, 3) - Fraction(c, 2)
    cubic = p ** 3 + p ** 2
    closed = {
        1: cubic - 22 * p - 76,
        5: cubic - 14 * p - 68,
        7: cubic - 22 * p - 70,
        11: cubic - 14 * p - 62,
    }[p % 12]
    if closed % 12 != 0:
        raise InternalConsistencyError(f"closed-form genus not integral for p={p}")
    g2 = closed // 12
    if g1 != g2:
        raise InternalConsistencyError(
            f"genus routes disagree for p={p}: {g1} vs {g2}")
    return g2


def genus_newman(index: int, N: int) -> Fraction:
    """g = 1 + index (N-6)/(24N) for a normal subgroup with branch
    schema (2,3,N); non-integrality means no such group exists."""
    if index < 1 or N < 1:
        raise DomainError("index and N must be positive")
    return 1 + Fraction(index * (N - 6), 24 * N)


@dataclass(frozen=True)
class DimsUnipotent:
    k: int
    index: int
    character_trivial: bool
    dim_M: int           # dim M_2k(G) = k * index
    dim_M_char: int      # per-character: k
    dim_S_char: int      # per-character cusp forms
    dim_eis_char: int    # per-character Eisenstein complement


def dims_unipotent(k: int, index_in_gamma_prime: int,
                   character_trivial: bool) -> DimsUnipotent:
    if k < 1 or index_in_gamma_prime < 1:
        raise DomainError("k and index must be positive")
    dim_m_char = k
    if k > 1:
        dim_s_char = k - 1
    else:
        dim_s_char = 1 if character_trivial else 0
    return DimsUnipotent(k, index_in_gamma_prime, character_trivial,
                         k * index_in_gamma_prime, dim_m_char, dim_s_char,
                         dim_m_char - dim_s_char)


@dataclass(frozen=True)
class DimsGp:
    k: int
    p: int
    dim_M: Fraction        # kp/2 + 1 - (3/2 if k odd)
    genus: int             # 0
    cusps: int             # (p+1)/2
    elliptic2: int         # 3 elliptic points of order 2


def dims_Gp(k: int, p: int) -> DimsGp:
    if p % 12 != 5:
        raise UnsupportedPrimeError(f"p = {p} is not 5 mod 12")
    if k < 1:
        raise DomainError("k must be positive")
    dim = Fraction(k * p, 2) + 1 - (Fraction(3, 2) if k % 2 else 0)
    if dim.denominator != 1:
        raise InternalConsistencyError("dimension formula gave a non-integer")
    return DimsGp(k, p, dim, 0, (p + 1) // 2, 3)


@dataclass(frozen=True)
class NoncongruenceReport:
    p: int
    level: int             # p(p-1), the putative congruence level
    sl2_order: int         # |SL_2(Z / p(p-1))|
    sp4_order: int         # |Sp_4(F_p)|
    psp4_order: int
    witness: bool          # psp4_order > sl2_order, forcing noncongruence


def noncongruence_report(p: int) -> NoncongruenceReport:
    """|SL_2(Z/p(p-1))| vs |PSp_4(F_p)|: the image is too large to factor
    through any congruence quotient of the candidate level."""
    if p <= 7:
        raise UnsupportedPrimeError(f"p must be a prime > 7, got {p}")
    n = p * (p - 1)
    primes = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)
    sl2 = n ** 3
    for ell in primes:
        sl2 = sl2 // (ell * ell) * (ell * ell - 1)
    sp4 = p ** 4 * (p ** 4 - 1) * (p ** 2 - 1)
    return NoncongruenceReport(p, n, sl2, sp4, sp4 // 2, sp4 // 2 > sl2)
