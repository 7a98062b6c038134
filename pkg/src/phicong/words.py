"""Words in the modular group, the representation phi, and membership tests.

SL2(Z) is generated by S = (0 -1; 1 0) and T = (1 1; 0 1).  The
representation phi sends T to diag(zeta, 1/zeta) and S to
(-zeta^3, 1; 0, zeta^3); its image consists of the upper-triangular
matrices (u, u*v; 0, 1/u) with u a twelfth root of unity and
v in Z*zeta + Z*zeta^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .cyclotomic import Cyc12, reduce_cyc
from .errors import DomainError, InternalConsistencyError, UnsupportedPrimeError
from .matrices import Matrix


class Word:
    """A normalized word in the generators S, T.

    Stored as syllables (generator, exponent) with nonzero exponents and
    distinct adjacent generators; the empty word is the identity.
    """

    __slots__ = ("syllables",)

    def __init__(self, syllables: Sequence[Tuple[str, int]] = ()):
        out: List[Tuple[str, int]] = []
        for gen, exp in syllables:
            if gen not in ("S", "T"):
                raise DomainError(f"unknown generator {gen!r}")
            if not isinstance(exp, int):
                raise DomainError(f"exponent {exp!r} is not an integer")
            if exp == 0:
                continue
            if out and out[-1][0] == gen:
                merged = out[-1][1] + exp
                out.pop()
                if merged:
                    out.append((gen, merged))
            else:
                out.append((gen, exp))
        self.syllables = tuple(out)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word([(g, -e) for g, e in reversed(self.syllables)])

    def __pow__(self, n: int) -> "Word":
        w = self.inverse() if n < 0 else self
        return Word(w.syllables * abs(n))

    def __eq__(self, other):
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    def __len__(self):
        return len(self.syllables)

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({list(self.syllables)})"


def parse_word(text: str) -> Word:
    """Parse whitespace-separated tokens S, S^-1 (or S-1), T, T^k, T^-k."""
    syllables = []
    for tok in text.split():
        if tok in ("S", "T"):
            syllables.append((tok, 1))
            continue
        gen = tok[0]
        if gen not in ("S", "T"):
            raise DomainError(f"malformed word token {tok!r}")
        rest = tok[1:]
        if rest.startswith("^"):
            rest = rest[1:]
        try:
            exp = int(rest)
        except ValueError:
            raise DomainError(f"malformed exponent in token {tok!r}") from None
        syllables.append((gen, exp))
    return Word(syllables)


def format_word(w: Word) -> str:
    parts = []
    for gen, exp in w.syllables:
        parts.append(gen if exp == 1 else f"{gen}^{exp}")
    return " ".join(parts)


def eval_word(w: Word, imgS: Matrix, imgT: Matrix) -> Matrix:
    """Evaluate the homomorphism S -> imgS, T -> imgT on a word."""
    if imgS.n != imgT.n:
        raise DomainError("generator images must have equal size")
    acc = Matrix.identity(imgS.n, *imgS._one_zero())
    for gen, exp in w.syllables:
        acc = acc * (imgS if gen == "S" else imgT) ** exp
    return acc


def relations_check(imgS: Matrix, imgT: Matrix) -> bool:
    """True iff the assignments satisfy S^4 = I and S^2 = (S T)^3."""
    if imgS.n != imgT.n:
        raise DomainError("generator images must have equal size")
    s2 = imgS * imgS
    return (s2 * s2).is_identity() and s2 == (imgS * imgT) ** 3


@dataclass(frozen=True)
class PhiImage:
    """phi(w) in coordinates: the matrix (u, u*v; 0, 1/u), u = zeta^u_exp,
    v = v[0]*zeta + v[1]*zeta^3."""

    u_exp: int
    v: Tuple[int, int]

    def compose(self, other: "PhiImage") -> "PhiImage":
        """Image of the concatenated word self * other."""
        # (u1, u1 v1; 0, 1/u1)(u2, u2 v2; 0, 1/u2) has unit u1 u2 and
        # v = v2 + zeta^(-2 u2_exp) v1
        tw = Cyc12.zeta_pow(-2 * other.u_exp)
        v1 = Cyc12(0, self.v[0], 0, self.v[1])
        v = Cyc12(0, other.v[0], 0, other.v[1]) + tw * v1
        return PhiImage((self.u_exp + other.u_exp) % 12, _v_coords(v))

    def matrix(self) -> Matrix:
        u = Cyc12.zeta_pow(self.u_exp)
        v = Cyc12(0, self.v[0], 0, self.v[1])
        zero, one = Cyc12(0), Cyc12(1)
        return Matrix([[u, u * v], [zero, one / u]])


PHI_S = Matrix([[Cyc12(0, 0, 0, -1), Cyc12(1)],
                [Cyc12(0), Cyc12(0, 0, 0, 1)]])
PHI_T = Matrix([[Cyc12(0, 1), Cyc12(0)],
                [Cyc12(0), Cyc12(0, 1).inverse()]])


def _v_coords(v: Cyc12) -> Tuple[int, int]:
    a, b, c, d = v.c
    if a != 0 or c != 0 or b.denominator != 1 or d.denominator != 1:
        raise InternalConsistencyError(f"v = {v!r} is not in Z*zeta + Z*zeta^3")
    return int(b), int(d)


def phi(w: Word) -> PhiImage:
    """Evaluate phi and decompose the result as (u, u*v; 0, 1/u)."""
    m = eval_word(w, PHI_S, PHI_T)
    a, b = m.rows[0]
    c, d = m.rows[1]
    if c != 0:
        raise InternalConsistencyError("phi image is not upper triangular")
    u_exp = next((k for k in range(12) if Cyc12.zeta_pow(k) == a), None)
    if u_exp is None or a * d != 1:
        raise InternalConsistencyError("phi image unit is not a 12th root of unity")
    return PhiImage(u_exp, _v_coords(d * b))


@dataclass(frozen=True)
class SubgroupSpec:
    """Tagged choice of subgroup family.

    kind is one of 'GammaPrime', 'GammaDoublePrime', 'GammaPrimeN', 'Gp',
    'PhiCong'; n carries the level N or the prime p where applicable.
    """

    kind: str
    n: Optional[int] = None

    def __post_init__(self):
        if self.kind in ("GammaPrime", "GammaDoublePrime"):
            if self.n is not None:
                raise DomainError(f"{self.kind} takes no parameter")
        elif self.kind in ("GammaPrimeN", "PhiCong"):
            if not isinstance(self.n, int) or self.n < 1:
                raise DomainError(f"{self.kind} needs a positive integer level")
        elif self.kind == "Gp":
            if not isinstance(self.n, int) or self.n % 12 != 5:
                raise UnsupportedPrimeError(f"Gp needs a prime p = 5 (mod 12), got {self.n}")
        else:
            raise DomainError(f"unknown subgroup kind {self.kind!r}")


def subgroup_member(w: Word, spec: SubgroupSpec) -> bool:
    img = phi(w)
    kind = spec.kind
    if kind == "GammaPrime":
        return img.u_exp in (0, 6)
    if kind == "GammaDoublePrime":
        return img.u_exp in (0, 6) and img.v == (0, 0)
    if kind == "GammaPrimeN":
        n = spec.n
        return img.u_exp in (0, 6) and img.v[0] % n == 0 and img.v[1] % n == 0
    if kind == "Gp":
        p = spec.n
        m = eval_word(w, PHI_S, PHI_T)
        u = reduce_cyc(m.rows[0][0], p)
        if u ** 4 != 1:
            return False
        v = reduce_cyc(m.rows[0][0].inverse() * m.rows[0][1], p)
        return v.in_prime_field()
    if kind == "PhiCong":
        n = spec.n
        if img.v[0] % n or img.v[1] % n:
            return False
        diff = Cyc12.zeta_pow(img.u_exp) - Cyc12(1)
        return all(c.numerator % n == 0 for c in diff.c)
    raise DomainError(f"unknown subgroup kind {kind!r}")


def index_of(spec: SubgroupSpec) -> int:
    """Index in PSL2(Z): 6N^2 for GammaPrimeN(N), 3p for Gp(p)."""
    if spec.kind == "GammaPrimeN":
        return 6 * spec.n * spec.n
    if spec.kind == "Gp":
        return 3 * spec.n
    raise DomainError(f"index_of is not defined for {spec.kind}")
