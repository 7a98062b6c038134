"""Independent closed-form oracles for the S- and R-actions on the
Lagrangian Grassmannian, transcribed case by case.  Used to cross-check
act_subspace, which works by row reduction instead."""

from phicong.symplectic import Lagrangian


def s_action(L: Lagrangian, p: int, x: int, y: int) -> Lagrangian:
    def inv(v):
        return pow(v % p, -1, p)

    if L.kind == "A":
        a, b, c = L.coords
        den = (3 * a * a + b * c) % p
        if den:
            d = inv(den)
            return Lagrangian("A", ((-a * x * y * d) % p,
                                    (-c * x * x * d) % p,
                                    (-b * y * y * d) % p))
        if b % p:
            return Lagrangian("B", ((-a * x * inv(b * y)) % p,
                                    (-x * x * inv(b)) % p))
        if a % p == 0 and b % p == 0 and c % p:
            return Lagrangian("C", ((-y * y * inv(c)) % p,))
        return Lagrangian("D", ())
    if L.kind == "B":
        a, b = L.coords
        if b % p:
            d = inv(b)
            return Lagrangian("A", ((a * x * y * d) % p,
                                    (-x * x * d) % p,
                                    (3 * a * a * y * y * d) % p))
        if a % p:
            return Lagrangian("B", ((-x * inv(3 * a * y)) % p, 0))
        return Lagrangian("C", (0,))
    if L.kind == "C":
        (a,) = L.coords
        if a % p:
            return Lagrangian("A", (0, 0, (-y * y * inv(a)) % p))
        return Lagrangian("B", (0, 0))
    return Lagrangian("A", (0, 0, 0))


def r_action(L: Lagrangian, p: int, x: int, y: int) -> Lagrangian:
    def inv(v):
        return pow(v % p, -1, p)

    if L.kind == "A":
        a, b, c = L.coords
        den = (3 * a * a + b * c) % p
        if den:
            d = inv(den)
            a2 = (-x * y * (a * x * y + b * y * y + den) * d) % p
            b2 = (x * x * (6 * a * x * y + 3 * b * y * y + 6 * a * a
                           + 2 * b * c - c * x * x) * d) % p
            c2 = (-y * y * (b * y * y + 6 * a * a + 2 * b * c) * d) % p
            return Lagrangian("A", (a2, b2, c2))
        if b % p:
            d = inv(b * y * y)
            a2 = (-x * (a * x + b * y) * d) % p
            b2 = (x * x * (6 * a * a * x * x + 6 * a * b * x * y
                           + 2 * b * b * y * y - b * x * x * y * y)
                  * inv(b * b * y * y)) % p
            return Lagrangian("B", (a2, b2))
        if a % p == 0 and b % p == 0 and c % p:
            return Lagrangian("C", ((-(y ** 4 + 2 * c * y * y) * inv(c)) % p,))
        return Lagrangian("D", ())
    if L.kind == "B":
        a, b = L.coords
        if b % p:
            d = inv(b)
            a2 = (x * y * (3 * a * a * y * y + a * x * y - b) * d) % p
            b2 = (x * x * (2 * b - 9 * a * a * y * y - 6 * a * x * y
                           - x * x) * d) % p
            c2 = (y * y * (3 * a * a * y * y - 2 * b) * d) % p
            return Lagrangian("A", (a2, b2, c2))
        if a % p:
            a2 = (-x * (3 * a * y + x) * inv(3 * a * y * y)) % p
            b2 = (x * x * (18 * a * a * y * y + 18 * a * x * y
                           + 6 * x * x) * inv(9 * a * a * y * y)) % p
            return Lagrangian("B", (a2, b2))
        return Lagrangian("C", ((-2 * y * y) % p,))
    if L.kind == "C":
        (a,) = L.coords
        if a % p:
            d = inv(a)
            return Lagrangian("A", ((-x * y * (y * y + a) * d) % p,
                                    (x * x * (3 * y * y + 2 * a) * d) % p,
                                    (-y * y * (y * y + 2 * a) * d) % p))
        return Lagrangian("B", ((-x * inv(y)) % p, (2 * x * x) % p))
    return Lagrangian("A", ((-x * y) % p, (2 * x * x) % p, (-2 * y * y) % p))
