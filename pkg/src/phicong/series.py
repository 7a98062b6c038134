"""Laurent series in one variable q with exact rational coefficients.

A series is a sparse map exponent -> Fraction together with a precision
bound: coefficients at exponents < prec are known, the rest are O(q^prec).
``prec=None`` means the series is exact (a Laurent polynomial).  Sparsity
matters here because every series we build is supported on an arithmetic
progression (multiples of 6 shifted by the valuation).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Optional

from .errors import DomainError, HenselError, PrecisionError
from .rationals import rational_sqrt

_INF = math.inf


def _cap(prec: Optional[int]):
    return _INF if prec is None else prec


class LaurentSeries:
    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs: Optional[Dict[int, Fraction]] = None,
                 prec: Optional[int] = None):
        cap = _cap(prec)
        cs: Dict[int, Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c and e < cap:
                    cs[e] = c
        self.coeffs = cs
        self.prec = prec

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(prec: Optional[int] = None) -> "LaurentSeries":
        return LaurentSeries({}, prec)

    @staticmethod
    def one(prec: Optional[int] = None) -> "LaurentSeries":
        return LaurentSeries({0: Fraction(1)}, prec)

    @staticmethod
    def monomial(coeff, exp: int = 0,
                 prec: Optional[int] = None) -> "LaurentSeries":
        return LaurentSeries({exp: Fraction(coeff)}, prec)

    # -- basic queries ------------------------------------------------------

    @property
    def valuation(self):
        """Smallest exponent with nonzero (known) coefficient.

        For a series with no known nonzero terms this is the precision
        bound (or +infinity for the exact zero series).
        """
        if self.coeffs:
            return min(self.coeffs)
        return _cap(self.prec)

    def coeff(self, e: int) -> Fraction:
        if e >= _cap(self.prec):
            raise PrecisionError(
                f"coefficient of q^{e} requested but series known only to O(q^{self.prec})")
        return self.coeffs.get(e, Fraction(0))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        return sorted(self.coeffs.items())

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentSeries.monomial(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        cap = min(_cap(self.prec), _cap(o.prec))
        out = dict(self.coeffs)
        for e, c in o.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentSeries(out, None if cap == _INF else int(cap))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return LaurentSeries({e: -c for e, c in self.coeffs.items()}, self.prec)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            cap = min(_cap(self.prec) + o.valuation, _cap(o.prec) + self.valuation)
            return LaurentSeries({}, None if cap == _INF else int(cap))
        cap = min(_cap(self.prec) + o.valuation, _cap(o.prec) + self.valuation)
        out: Dict[int, Fraction] = {}
        a, b = self.coeffs, o.coeffs
        if len(a) > len(b):
            a, b = b, a
        bitems = list(b.items())
        for e1, c1 in a.items():
            for e2, c2 in bitems:
                e = e1 + e2
                if e < cap:
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentSeries(out, None if cap == _INF else int(cap))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentSeries":
        base = self.inverse() if e < 0 else self
        e = abs(e)
        acc = LaurentSeries.one(self.prec if e == 0 else None)
        while e:
            if e & 1:
                acc = acc * base
            base = base * base if e > 1 else base
            e >>= 1
        return acc

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by q^k."""
        return LaurentSeries({e + k: c for e, c in self.coeffs.items()},
                             None if self.prec is None else self.prec + k)

    def truncate(self, prec: int) -> "LaurentSeries":
        """Forget terms at exponents >= prec and set the precision there."""
        if _cap(self.prec) < prec:
            raise PrecisionError(
                f"cannot truncate O(q^{self.prec}) series at higher precision {prec}")
        return LaurentSeries(self.coeffs, prec)

    def inverse(self) -> "LaurentSeries":
        """Multiplicative inverse.

        The result of inverting a series of valuation v known to O(q^p)
        is known to O(q^(p - 2v)).
        """
        if not self.coeffs:
            raise DomainError("cannot invert a series with no nonzero terms")
        v = self.valuation
        lead = self.coeffs[v]
        if self.prec is None and len(self.coeffs) == 1:
            return LaurentSeries({-v: 1 / lead})
        if self.prec is None:
            raise PrecisionError("inverse of an exact non-monomial series is "
                                 "not a Laurent polynomial; truncate first")
        nterms = self.prec - v          # relative coefficients a_0..a_{nterms-1}
        a = {e - v: c for e, c in self.coeffs.items()}
        akeys = sorted(a)
        r: Dict[int, Fraction] = {0: 1 / lead}
        for k in range(1, nterms):
            s = Fraction(0)
            for j in akeys:
                if j == 0:
                    continue
                if j > k:
                    break
                rc = r.get(k - j)
                if rc:
                    s += a[j] * rc
            if s:
                r[k] = -s / lead
        out = {k - v: c for k, c in r.items() if c}
        return LaurentSeries(out, self.prec - 2 * v)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs and self.prec == o.prec

    def __repr__(self):
        terms = ", ".join(f"{c}*q^{e}" for e, c in self.items()[:6])
        tail = ", ..." if len(self.coeffs) > 6 else ""
        return f"LaurentSeries({terms}{tail}; O(q^{self.prec}))"


def series_sqrt(s: LaurentSeries, branch_sign: int = 1) -> LaurentSeries:
    """Square root of a Laurent series with rational coefficients.

    Requires even valuation and a leading coefficient that is a rational
    square; ``branch_sign`` (+1 or -1) picks the sign of the leading term.
    """
    if branch_sign not in (1, -1):
        raise DomainError("branch_sign must be +1 or -1")
    if not s.coeffs:
        raise DomainError("square root of a series with no known terms")
    v = s.valuation
    if v % 2 != 0:
        raise DomainError(f"square root needs even valuation, got {v}")
    lead = rational_sqrt(s.coeffs[v])
    if lead is None:
        raise DomainError(f"leading coefficient {s.coeffs[v]} is not a rational square")
    lead = branch_sign * lead
    if s.prec is None:
        raise PrecisionError("square root needs a finite precision bound")
    nterms = s.prec - v
    a = {e - v: c for e, c in s.coeffs.items()}
    akeys = sorted(a)
    r: Dict[int, Fraction] = {0: lead}
    rkeys = [0]
    two_lead = 2 * lead
    for k in range(1, nterms):
        s_k = a.get(k, Fraction(0))
        conv = Fraction(0)
        for j in rkeys:
            if j == 0 or 2 * j > k:
                continue
            rc = r.get(k - j)
            if rc:
                conv += r[j] * rc * (2 if 2 * j < k else 1)
        c = (s_k - conv) / two_lead
        if c:
            r[k] = c
            rkeys.append(k)
    out = {k + v // 2: c for k, c in r.items() if c}
    return LaurentSeries(out, s.prec - v // 2)


def hensel_root(poly_coeffs, x0, prec: int) -> LaurentSeries:
    """Newton/Hensel lift of a simple root of P(X) = sum_i poly_coeffs[i] X^i.

    ``poly_coeffs`` are Laurent series in q with non-negative valuation,
    ``x0`` a rational seed with P(x0) = 0 (mod q) and P'(x0) a unit mod q.
    Returns the unique root congruent to x0 mod q, to O(q^prec).
    """
    cs = list(poly_coeffs)
    for c in cs:
        if _cap(c.prec) < prec:
            raise PrecisionError(
                f"polynomial coefficient known only to O(q^{c.prec}), need {prec}")
        if c.coeffs and c.valuation < 0:
            raise DomainError("polynomial coefficients must have valuation >= 0")

    def eval_at(x: LaurentSeries, k: int):
        """P(x) and P'(x), both truncated to O(q^k)."""
        val = LaurentSeries.zero(k)
        der = LaurentSeries.zero(k)
        for c in reversed(cs):
            der = der * x + val
            val = val * x + c.truncate(k)
        return val, der

    x0 = Fraction(x0)
    x = LaurentSeries.monomial(x0, 0, 1)
    p0, d0 = eval_at(x, 1)
    if not p0.is_zero():
        raise DomainError(f"seed {x0} is not a root mod q")
    if d0.is_zero() or d0.valuation != 0:
        raise HenselError(f"seed {x0} is not a simple root mod q")
    k = 1
    while k < prec:
        k = min(2 * k, prec)
        # a root correct mod q^(k/2) is corrected to mod q^k by one step
        x = LaurentSeries(x.coeffs, k)
        val, der = eval_at(x, k)
        x = (x - val * der.inverse()).truncate(k)
    return x
