"""Exact arithmetic in Q and in the cyclotomic field Q(omega).

omega is a primitive p-th root of unity, realized as the residue class of t
in Q[t]/(Phi_p(t)) where Phi_p is the p-th cyclotomic polynomial.  Working
modulo Phi_p rather than t^p - 1 guarantees primitivity, and it makes
equality of field elements literal equality of coefficient vectors, so
cyclotomic identities such as 1 + omega + ... + omega^{p-1} = 0 (p prime)
hold on the nose.  Coefficients are fractions.Fraction values throughout;
nothing in this package is ever approximated.

CycScalar values are immutable and hashable, and every operation is a pure
function, so they are safe to share freely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

RationalLike = Union[int, Fraction]


def _poly_trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _poly_trim(out)


def _poly_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Exact division with remainder in Q[t]; coefficient lists run low to high."""
    num = list(num)
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / lead
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    return _poly_trim(q), _poly_trim(num)


def _divisors(p: int) -> list[int]:
    return [d for d in range(1, p + 1) if p % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(p: int) -> tuple[int, ...]:
    """Coefficients of Phi_p, degree 0 upward, monic with integer entries.

    Computed by exact polynomial division:
    Phi_p(t) = (t^p - 1) / prod_{d | p, d < p} Phi_d(t).
    """
    if p < 2:
        raise ValueError(f"cyclotomic polynomial requires p >= 2, got {p}")
    if p == 1:
        return (-1, 1)
    num = [Fraction(-1)] + [Fraction(0)] * (p - 1) + [Fraction(1)]
    den = [Fraction(-1), Fraction(1)]  # Phi_1 = t - 1
    for d in _divisors(p)[1:-1]:
        den = _poly_mul(den, [Fraction(c) for c in cyclotomic_polynomial(d)])
    q, r = _poly_divmod(num, den)
    if r:
        raise ArithmeticError(f"cyclotomic division left a remainder for p={p}")
    out = []
    for c in q:
        if c.denominator != 1:
            raise ArithmeticError(f"non-integer coefficient in Phi_{p}")
        out.append(int(c))
    return tuple(out)


@lru_cache(maxsize=None)
def _phi_degree(p: int) -> int:
    return len(cyclotomic_polynomial(p)) - 1


@lru_cache(maxsize=None)
def _phi_fractions(p: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in cyclotomic_polynomial(p))


class CycScalar:
    """An element of Q(omega) = Q[t]/(Phi_p(t)), omega a primitive p-th root of unity.

    coeffs has fixed length deg(Phi_p) and records the residue in the basis
    1, omega, ..., omega^{deg-1}.  Two scalars are equal iff their
    coefficient tuples are equal, which is a canonical form.
    """

    __slots__ = ("p", "coeffs", "_hash")

    def __init__(self, p: int, coeffs: Iterable[RationalLike]):
        deg = _phi_degree(p)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = _reduce_mod_phi(p, cs)
        cs.extend([Fraction(0)] * (deg - len(cs)))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CycScalar is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(p: int) -> "CycScalar":
        return CycScalar(p, [])

    @staticmethod
    def one(p: int) -> "CycScalar":
        return CycScalar(p, [1])

    @staticmethod
    def from_rational(p: int, value: RationalLike) -> "CycScalar":
        return CycScalar(p, [Fraction(value)])

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_part(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other) -> "CycScalar":
        if isinstance(other, CycScalar):
            if other.p != self.p:
                raise ValueError(f"mismatched cyclotomic orders {self.p} and {other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.from_rational(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycScalar(self.p, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycScalar(self.p, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prod = _poly_mul(list(self.coeffs), list(o.coeffs))
        return CycScalar(self.p, _reduce_mod_phi(self.p, prod))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[t]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(omega)")
        phi = list(_phi_fractions(self.p))
        r0, r1 = phi, _poly_trim(list(self.coeffs))
        s0: list[Fraction] = []
        s1: list[Fraction] = [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is gcd(phi, self) which must be a nonzero constant: Phi_p is irreducible.
        if len(r0) != 1:
            raise ArithmeticError("Phi_p split unexpectedly during inversion")
        inv = [c / r0[0] for c in s0]
        return CycScalar(self.p, _reduce_mod_phi(self.p, inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = CycScalar.one(self.p)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- canonical form ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycScalar.from_rational(self.p, other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.p, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"CycScalar(p={self.p}, {self.coeffs})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*w" if c != 1 else "w")
            else:
                parts.append(f"{c}*w^{e}" if c != 1 else f"w^{e}")
        return " + ".join(parts)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _reduce_mod_phi(p: int, coeffs: list[Fraction]) -> list[Fraction]:
    deg = _phi_degree(p)
    coeffs = _poly_trim(list(coeffs))
    if len(coeffs) <= deg:
        return coeffs
    _, r = _poly_divmod(coeffs, list(_phi_fractions(p)))
    return r


def omega_power(p: int, e: int) -> CycScalar:
    """omega^(e mod p) in canonical form."""
    e %= p
    return CycScalar(p, [Fraction(0)] * e + [Fraction(1)])
