"""The finite dimensional algebras of the engine, with exact arithmetic.

Four kinds of algebra appear:

* ``trunc``:  A = k[x]/(x^p), monomials x^i, 0 <= i < p
* ``group``:  kG with G cyclic of order p, monomials g^k
* ``taft``:   T_p, monomials x^i g^k, with g x = omega x g, g^p = 1, x^p = 0
* ``tensor``: pairwise tensor products, componentwise multiplication, with an
  optional flag that reverses multiplication in the second factor (the
  enveloping algebra A ox A^op)

Monomials are index tuples, elements are sparse maps monomial -> CycScalar.
The Taft product rule used everywhere is

    (x^a g^b) (x^c g^d) = omega^(b c) x^(a+c) g^(b+d  mod p),   x^e = 0 for e >= p,

which is the convention under which all worked bracket computations and the
closed-form tables of this engine are stated (the commutation relation reads
g x = omega x g).

All values are immutable in practice: operations never mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator, Union

from gerstenhaber.scalars import CycScalar, omega_power

ScalarLike = Union[int, CycScalar]


@dataclass(frozen=True)
class AlgebraId:
    kind: str  # "trunc" | "group" | "taft" | "tensor"
    p: int
    factors: tuple["AlgebraId", ...] = ()
    opposite_second: bool = False

    def __post_init__(self):
        if self.kind not in ("trunc", "group", "taft", "tensor"):
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        if self.kind == "tensor":
            if len(self.factors) != 2:
                raise ValueError("tensor algebras are built from exactly two factors")
            for f in self.factors:
                if f.p != self.p:
                    raise ValueError("mismatched p across tensor factors")
        elif self.factors:
            raise ValueError("only tensor algebras carry factors")

    @property
    def arity(self) -> int:
        """Length of a monomial index tuple."""
        if self.kind in ("trunc", "group"):
            return 1
        if self.kind == "taft":
            return 2
        return sum(f.arity for f in self.factors)

    def basis(self) -> Iterator[tuple[int, ...]]:
        if self.kind in ("trunc", "group"):
            for i in range(self.p):
                yield (i,)
        elif self.kind == "taft":
            for i in range(self.p):
                for k in range(self.p):
                    yield (i, k)
        else:
            left, right = self.factors
            for m1, m2 in product(list(left.basis()), list(right.basis())):
                yield m1 + m2

    def unit_monomial(self) -> tuple[int, ...]:
        return (0,) * self.arity

    def split(self, mono: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        if self.kind != "tensor":
            raise ValueError("split applies to tensor algebras only")
        n = self.factors[0].arity
        return mono[:n], mono[n:]


@lru_cache(maxsize=None)
def trunc_poly(p: int) -> AlgebraId:
    return AlgebraId("trunc", p)


@lru_cache(maxsize=None)
def group_algebra(p: int) -> AlgebraId:
    return AlgebraId("group", p)


@lru_cache(maxsize=None)
def taft(p: int) -> AlgebraId:
    return AlgebraId("taft", p)


def tensor_pair(a: AlgebraId, b: AlgebraId, opposite_second: bool = False) -> AlgebraId:
    return AlgebraId("tensor", a.p, (a, b), opposite_second)


def enveloping(a: AlgebraId) -> AlgebraId:
    """A ox A^op, the algebra over which bimodules are left modules."""
    return tensor_pair(a, a, opposite_second=True)


def _mono_mul(alg: AlgebraId, m1: tuple[int, ...], m2: tuple[int, ...]) -> tuple[tuple[int, ...], CycScalar] | None:
    """Product of two basis monomials: None when it truncates to zero."""
    p = alg.p
    if alg.kind == "trunc":
        i = m1[0] + m2[0]
        return ((i,), CycScalar.one(p)) if i < p else None
    if alg.kind == "group":
        return (((m1[0] + m2[0]) % p,), CycScalar.one(p))
    if alg.kind == "taft":
        a, b = m1
        c, d = m2
        if a + c >= p:
            return None
        return ((a + c, (b + d) % p), omega_power(p, b * c))
    left, right = alg.factors
    l1, r1 = alg.split(m1)
    l2, r2 = alg.split(m2)
    first = _mono_mul(left, l1, l2)
    if first is None:
        return None
    if alg.opposite_second:
        second = _mono_mul(right, r2, r1)
    else:
        second = _mono_mul(right, r1, r2)
    if second is None:
        return None
    return (first[0] + second[0], first[1] * second[1])


class AlgElem:
    """A sparse algebra element: map from monomial tuples to CycScalar.

    Zero coefficients are never stored, so equality of term dicts is equality
    of elements.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AlgebraId, terms: dict | None = None):
        self.algebra = algebra
        clean: dict[tuple[int, ...], CycScalar] = {}
        if terms:
            for mono, c in terms.items():
                if not isinstance(c, CycScalar):
                    c = CycScalar.from_rational(algebra.p, c)
                if not c.is_zero():
                    if len(mono) != algebra.arity:
                        raise ValueError(f"monomial {mono} has wrong arity for {algebra.kind}")
                    clean[tuple(mono)] = clean.get(tuple(mono), CycScalar.zero(algebra.p)) + c
        self.terms = {m: c for m, c in clean.items() if not c.is_zero()}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(algebra: AlgebraId) -> "AlgElem":
        return AlgElem(algebra)

    @staticmethod
    def one(algebra: AlgebraId) -> "AlgElem":
        return AlgElem.monomial(algebra, algebra.unit_monomial())

    @staticmethod
    def monomial(algebra: AlgebraId, mono: tuple[int, ...], coeff: ScalarLike = 1) -> "AlgElem":
        if not isinstance(coeff, CycScalar):
            coeff = CycScalar.from_rational(algebra.p, coeff)
        return AlgElem(algebra, {tuple(mono): coeff})

    # -- linear structure --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, CycScalar.zero(self.algebra.p)) + c
        return AlgElem(self.algebra, out)

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + (-other)

    def __neg__(self) -> "AlgElem":
        return AlgElem(self.algebra, {m: -c for m, c in self.terms.items()})

    def scale(self, c: ScalarLike) -> "AlgElem":
        if not isinstance(c, CycScalar):
            c = CycScalar.from_rational(self.algebra.p, c)
        return AlgElem(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, CycScalar)):
            return self.scale(other)
        self._check(other)
        out: dict[tuple[int, ...], CycScalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                r = _mono_mul(self.algebra, m1, m2)
                if r is None:
                    continue
                m, w = r
                out[m] = out.get(m, CycScalar.zero(self.algebra.p)) + c1 * c2 * w
        return AlgElem(self.algebra, out)

    def __rmul__(self, other):
        if isinstance(other, (int, CycScalar)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def _check(self, other: "AlgElem"):
        if self.algebra != other.algebra:
            raise ValueError("elements of different algebras")

    def coefficient(self, mono: tuple[int, ...]) -> CycScalar:
        return self.terms.get(tuple(mono), CycScalar.zero(self.algebra.p))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"({c})*{_mono_str(self.algebra, m)}" for m, c in sorted(self.terms.items())]
        return " + ".join(bits)


def _mono_str(alg: AlgebraId, mono: tuple[int, ...]) -> str:
    if alg.kind == "trunc":
        return f"x^{mono[0]}"
    if alg.kind == "group":
        return f"g^{mono[0]}"
    if alg.kind == "taft":
        return f"x^{mono[0]}g^{mono[1]}"
    l, r = alg.split(mono)
    return f"{_mono_str(alg.factors[0], l)}(x){_mono_str(alg.factors[1], r)}"


# ---------------------------------------------------------------------------
# Hopf structure of the Taft algebra
# ---------------------------------------------------------------------------


def counit(a: AlgElem) -> CycScalar:
    """eps(x^i g^k) = 1 if i = 0 else 0, extended linearly."""
    if a.algebra.kind != "taft":
        raise ValueError("counit is defined on Taft elements")
    total = CycScalar.zero(a.algebra.p)
    for (i, _k), c in a.terms.items():
        if i == 0:
            total = total + c
    return total


@lru_cache(maxsize=None)
def _comul_mono(p: int, i: int, k: int) -> "AlgElem":
    """Delta(x^i g^k) in T_p ox T_p, computed from Delta(x) = 1 ox x + x ox g
    and Delta(g) = g ox g by multiplicativity."""
    tp2 = tensor_pair(taft(p), taft(p))
    if i == 0 and k == 0:
        return AlgElem.one(tp2)
    if i > 0:
        dx = AlgElem(tp2, {
            (0, 0, 1, 0): CycScalar.one(p),   # 1 ox x
            (1, 0, 0, 1): CycScalar.one(p),   # x ox g
        })
        return dx * _comul_mono(p, i - 1, k)
    dg = AlgElem(tp2, {(0, 1, 0, 1): CycScalar.one(p)})
    return dg * _comul_mono(p, 0, k - 1)


def comultiply(a: AlgElem) -> AlgElem:
    """Delta as an algebra map, valued in T_p ox T_p (componentwise product)."""
    if a.algebra.kind != "taft":
        raise ValueError("comultiply is defined on Taft elements")
    p = a.algebra.p
    out = AlgElem.zero(tensor_pair(taft(p), taft(p)))
    for (i, k), c in a.terms.items():
        out = out + _comul_mono(p, i, k).scale(c)
    return out


@lru_cache(maxsize=None)
def _antipode_mono(p: int, i: int, k: int) -> "AlgElem":
    """S(x^i g^k) = S(g)^k S(x)^i with S(g) = g^(p-1), S(x) = -x g^(p-1)."""
    t = taft(p)
    out = AlgElem.one(t)
    sg = AlgElem.monomial(t, (0, p - 1))
    sx = AlgElem.monomial(t, (1, p - 1), -1)
    for _ in range(k):
        out = out * sg
    for _ in range(i):
        out = out * sx
    return out


def antipode(a: AlgElem) -> AlgElem:
    if a.algebra.kind != "taft":
        raise ValueError("antipode is defined on Taft elements")
    out = AlgElem.zero(a.algebra)
    for (i, k), c in a.terms.items():
        out = out + _antipode_mono(a.algebra.p, i, k).scale(c)
    return out


SweedlerTable = dict[tuple[tuple[int, ...], ...], CycScalar]


@lru_cache(maxsize=None)
def _sweedler_mono(p: int, mono: tuple[int, int], legs: int) -> tuple[tuple[tuple[tuple[int, int], ...], CycScalar], ...]:
    """Iterated comultiplication of a Taft monomial into the given number of
    legs, fully expanded over the monomial basis.  legs = 1 is the identity;
    higher iterates apply Delta to the rightmost leg, matching the
    (id ox Delta)Delta convention used throughout."""
    if legs < 1:
        raise ValueError("need at least one leg")
    if legs == 1:
        return (((mono,), CycScalar.one(p)),)
    out: dict[tuple[tuple[int, int], ...], CycScalar] = {}
    for heads, c in _sweedler_mono(p, mono, legs - 1):
        last = heads[-1]
        for full, c2 in _comul_mono(p, last[0], last[1]).terms.items():
            m1, m2 = (full[0], full[1]), (full[2], full[3])
            key = heads[:-1] + (m1, m2)
            prev = out.get(key, CycScalar.zero(p))
            out[key] = prev + c * c2
    return tuple((k, v) for k, v in out.items() if not v.is_zero())


def sweedler(a: AlgElem, legs: int) -> SweedlerTable:
    """Delta^(legs-1) of a Taft element as a table keyed by leg monomials."""
    if a.algebra.kind != "taft":
        raise ValueError("sweedler expansion is defined on Taft elements")
    p = a.algebra.p
    out: SweedlerTable = {}
    for mono, c in a.terms.items():
        for key, c2 in _sweedler_mono(p, mono, legs):
            prev = out.get(key, CycScalar.zero(p))
            val = prev + c * c2
            if val.is_zero():
                out.pop(key, None)
            else:
                out[key] = val
    return out
