"""Cochains on the small resolutions, the phi circle product, cup, and classes.

A cochain in degree n is determined by its value on the degree n generator,
since each term of the small resolutions is free of rank one.  The circle
product follows the contracting-homotopy recipe: expand the iterated
diagonal, keep triples whose middle factor has the inner cochain's degree,
substitute the inner value onto the left of the right-hand factor, apply
phi, apply the outer cochain.

Two convention tracks run through everything Taft-related:

* ``graded``: Koszul signs (-1)^(n |left factor|) at the substitution step,
  the parity-twisted group action, and cochain evaluation by honest Taft
  multiplication.  This is the track the bar-resolution oracle validates.
* ``plain``: no substitution signs, the untwisted action, and formal
  evaluation where x-powers and group powers concatenate independently.
  This is the track in which the published Taft closed-form table for the
  mixed-degree brackets is stated.

For k[x]/(x^p) the tracks differ only in the Koszul signs; the closed-form
table there requires ``graded``, which is also the default everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from gerstenhaber.algebras import AlgElem, taft, trunc_poly
from gerstenhaber.diagonal import diag, diag2
from gerstenhaber.homotopy import build_phi
from gerstenhaber.resolution import (
    SMALL_A,
    SMALL_TAFT,
    ComplexId,
    ResElem,
    differential,
    generator,
    left_mul_small,
    small_a,
    small_taft,
)
from gerstenhaber.scalars import CycScalar, omega_power

GRADED = "graded"
PLAIN = "plain"


class SmallCochain:
    """A hom-complex element in one degree: the image of xi_degree."""

    __slots__ = ("complex", "degree", "value")

    def __init__(self, complex: ComplexId, degree: int, value: AlgElem):
        if complex.kind not in (SMALL_A, SMALL_TAFT):
            raise ValueError("small cochains live on the small resolutions")
        if value.algebra != complex.coefficient_algebra():
            raise ValueError("cochain value lies in the wrong algebra")
        self.complex = complex
        self.degree = degree
        self.value = value

    def __eq__(self, other):
        if not isinstance(other, SmallCochain):
            return NotImplemented
        return (
            self.complex == other.complex
            and self.degree == other.degree
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.complex, self.degree, self.value))

    def __add__(self, other: "SmallCochain") -> "SmallCochain":
        if self.complex != other.complex or self.degree != other.degree:
            raise ValueError("cochains of different complexes or degrees")
        return SmallCochain(self.complex, self.degree, self.value + other.value)

    def __sub__(self, other: "SmallCochain") -> "SmallCochain":
        return self + (-other)

    def __neg__(self) -> "SmallCochain":
        return SmallCochain(self.complex, self.degree, -self.value)

    def scale(self, c) -> "SmallCochain":
        return SmallCochain(self.complex, self.degree, self.value.scale(c))

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def evaluate(self, e: ResElem, convention: str = GRADED) -> AlgElem:
        """Value on an arbitrary element of the resolution in this degree."""
        if e.complex != self.complex or e.degree != self.degree:
            raise ValueError("cochain evaluated on a mismatched element")
        p = self.complex.p
        alg = self.value.algebra
        out = AlgElem.zero(alg)
        for key, coeff in e.terms.items():
            if self.complex.kind == SMALL_A:
                i, j = key
                for (s,), vc in self.value.terms.items():
                    if i + s + j < p:
                        out = out + AlgElem.monomial(alg, (i + s + j,), vc * coeff)
            else:
                i, j, k = key
                for (s, t), vc in self.value.terms.items():
                    if i + s + j >= p:
                        continue
                    if convention == GRADED:
                        # x^i (x^s g^t) (x^j g^k): the g^t crosses x^j
                        w = omega_power(p, t * j)
                    else:
                        w = CycScalar.one(p)
                    out = out + AlgElem.monomial(alg, (i + s + j, (t + k) % p), vc * coeff * w)
        return out

    def __repr__(self):
        return f"SmallCochain({self.complex.kind}, deg={self.degree}, value={self.value!r})"


# ---------------------------------------------------------------------------
# Basis cochains
# ---------------------------------------------------------------------------


def a_cochain(p: int, degree: int, j: int, coeff=1) -> SmallCochain:
    """x^j xi_degree^* on the k[x]/(x^p) resolution."""
    return SmallCochain(small_a(p), degree, AlgElem.monomial(trunc_poly(p), (j,), coeff))


def taft_cochain(p: int, degree: int, i: int, j: int, coeff=1) -> SmallCochain:
    """The cochain with value x^i g^j on the Taft resolution."""
    return SmallCochain(small_taft(p), degree, AlgElem.monomial(taft(p), (i, j), coeff))


def taft_basis_cochain(p: int, degree: int, j: int) -> SmallCochain:
    """The degree-matched basis cochain: value g^j in even degrees and
    x g^j in odd degrees."""
    return taft_cochain(p, degree, degree % 2, j)


# ---------------------------------------------------------------------------
# Circle product, bracket, cup
# ---------------------------------------------------------------------------


def circle_phi(f: SmallCochain, g: SmallCochain, convention: str = GRADED) -> SmallCochain:
    """f of phi of (id ox g ox id) of the iterated diagonal."""
    if f.complex != g.complex:
        raise ValueError("cochains on different resolutions")
    c = f.complex
    p = c.p
    m, n = f.degree, g.degree
    total = m + n - 1
    if total < 0:
        raise ValueError("circle product needs total degree >= 1")
    if m == 0:
        # a degree 0 outer cochain has no argument slots
        return SmallCochain(c, total, AlgElem.zero(f.value.algebra))
    phi = build_phi(c.kind, p, m - 1)
    cube = diag2(c, total)
    small = c
    twisted = convention == GRADED
    pair_accum = ResElem.zero(phi.square, m - 1)
    for key, coeff in cube.terms.items():
        if c.kind == SMALL_A:
            a, b, i, u1, u2, j = key
            rest = ()
        else:
            a, b, i, u1, u2, j, k = key
            rest = (k,)
        if b != n:
            continue
        c_deg = total - a - b
        # Koszul sign for moving g past the left factor
        sign = -1 if (convention == GRADED and (n * a) % 2 == 1) else 1
        # g applied to the middle factor x^(u1) xi_b
        middle_key = (u1, 0) if c.kind == SMALL_A else (u1, 0, 0)
        middle = ResElem(small, b, {middle_key: 1})
        t_val = g.evaluate(middle, convention)
        if t_val.is_zero():
            continue
        # multiply the middle value onto the left of the right factor
        right_key = (u2, j) + rest
        right = ResElem(small, c_deg, {right_key: 1})
        acted = left_mul_small(t_val, right, twisted=twisted)
        shifted: dict[tuple, CycScalar] = {}
        for rkey, rc in acted.terms.items():
            pkey = (a, i) + rkey
            val = rc * coeff
            if sign < 0:
                val = -val
            prev = shifted.get(pkey)
            shifted[pkey] = val if prev is None else prev + val
        pair_accum = pair_accum + ResElem(phi.square, a + c_deg, shifted)
    result = phi.apply(pair_accum)
    value = f.evaluate(result, convention)
    return SmallCochain(c, total, value)


def bracket_phi(f: SmallCochain, g: SmallCochain, convention: str = GRADED) -> SmallCochain:
    """[f, g] = f o g - (-1)^((|f|-1)(|g|-1)) g o f."""
    fg = circle_phi(f, g, convention)
    gf = circle_phi(g, f, convention)
    if ((f.degree - 1) * (g.degree - 1)) % 2 == 0:
        return fg - gf
    return fg + gf


def cup(f: SmallCochain, g: SmallCochain, convention: str = GRADED) -> SmallCochain:
    """(f cup g)(xi_(m+n)) = (-1)^(mn) f(left) g(right) over the (m,n) part
    of the diagonal."""
    if f.complex != g.complex:
        raise ValueError("cochains on different resolutions")
    c = f.complex
    p = c.p
    m, n = f.degree, g.degree
    d = diag(c, m + n)
    alg = f.value.algebra
    out = AlgElem.zero(alg)
    for key, coeff in d.terms.items():
        a, i, u, j = key[:4]
        rest = key[4:]
        if a != m:
            continue
        left = ResElem(c, m, {(i, 0) + ((0,) if rest else ()): 1})
        right = ResElem(c, n, {(u, j) + rest: 1})
        fv = f.evaluate(left, convention)
        gv = g.evaluate(right, convention)
        prod = _value_mul(fv, gv, convention)
        out = out + prod.scale(coeff)
    if (m * n) % 2 == 1:
        out = -out
    return SmallCochain(c, m + n, out)


def _value_mul(a: AlgElem, b: AlgElem, convention: str) -> AlgElem:
    if convention == GRADED or a.algebra.kind == "trunc":
        return a * b
    # formal product: x-powers and group powers concatenate independently
    p = a.algebra.p
    out = AlgElem.zero(a.algebra)
    for (s1, t1), c1 in a.terms.items():
        for (s2, t2), c2 in b.terms.items():
            if s1 + s2 < p:
                out = out + AlgElem.monomial(a.algebra, (s1 + s2, (t1 + t2) % p), c1 * c2)
    return out


# ---------------------------------------------------------------------------
# Cocycles and cohomology classes
# ---------------------------------------------------------------------------


def is_cocycle(f: SmallCochain, convention: str = GRADED) -> bool:
    """True iff f composed with the next differential vanishes."""
    nxt = differential(generator(f.complex, f.degree + 1))
    return f.evaluate(nxt, convention).is_zero()


@dataclass(frozen=True)
class CohomClass:
    complex_kind: str
    degree: int
    coordinates: tuple[CycScalar, ...]
    basis_labels: tuple[str, ...]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coordinates)


def to_class(f: SmallCochain, convention: str = GRADED) -> CohomClass:
    """Coordinates of a cocycle against the fixed cohomology basis.

    k[x]/(x^p): degree 0 gets the full basis 1..x^(p-1); odd degrees the
    basis x..x^(p-1) (values must lie in the ideal (x)); positive even
    degrees the basis 1..x^(p-2) (values reduced modulo x^(p-1)).

    Taft: values must lie in the degree-parity span (g^j even, x g^j odd);
    under the graded track the odd-degree coboundary image is spanned by
    x g^j for j != 0, so odd classes keep only the j = 0 coordinate; the
    plain track has vanishing coboundaries and keeps raw coordinates.
    """
    if not is_cocycle(f, convention):
        raise ValueError("to_class needs a cocycle")
    p = f.complex.p
    n = f.degree
    if f.complex.kind == SMALL_A:
        coeffs = [f.value.coefficient((s,)) for s in range(p)]
        if n == 0:
            return CohomClass(SMALL_A, n, tuple(coeffs), tuple(f"x^{s}" for s in range(p)))
        if n % 2 == 1:
            if not coeffs[0].is_zero():
                raise RuntimeError("odd-degree cocycle value outside the ideal (x)")
            return CohomClass(SMALL_A, n, tuple(coeffs[1:]), tuple(f"x^{s}" for s in range(1, p)))
        return CohomClass(SMALL_A, n, tuple(coeffs[: p - 1]), tuple(f"x^{s}" for s in range(p - 1)))
    # Taft
    want_x = n % 2
    coords = []
    for (s, t), c in f.value.terms.items():
        if s != want_x:
            raise RuntimeError("cochain value outside the predicted parity span")
    for j in range(p):
        coords.append(f.value.coefficient((want_x, j)))
    if convention == GRADED and n % 2 == 1:
        coords = [coords[0]] + [CycScalar.zero(p)] * (p - 1)
    label = "xg" if want_x else "g"
    return CohomClass(SMALL_TAFT, n, tuple(coords), tuple(f"{label}^{j}" for j in range(p)))


def class_coordinates_equal(f: SmallCochain, g: SmallCochain, convention: str = GRADED) -> bool:
    return to_class(f, convention) == to_class(g, convention)


# ---------------------------------------------------------------------------
# The cup/bracket compatibility identity
# ---------------------------------------------------------------------------


def derivation_identity_check(
    f: SmallCochain, g: SmallCochain, h: SmallCochain, convention: str = GRADED
) -> bool:
    """[f cup g, h] = [f, h] cup g + (-1)^(|f| (|h|-1)) f cup [g, h],
    compared as cohomology classes."""
    if h.is_zero():
        return True
    lhs = bracket_phi(cup(f, g, convention), h, convention)
    term1 = cup(bracket_phi(f, h, convention), g, convention)
    term2 = cup(f, bracket_phi(g, h, convention), convention)
    if (f.degree * (h.degree - 1)) % 2 == 1:
        term2 = -term2
    rhs = term1 + term2
    return to_class(lhs, convention) == to_class(rhs, convention)


# ---------------------------------------------------------------------------
# Closed-form predictions for the two bracket tables
# ---------------------------------------------------------------------------


def predicted_bracket_a(p: int, degf: int, i: int, degg: int, j: int) -> SmallCochain:
    """The k[x]/(x^p) table: [x^i xi_1*, x^j xi_1*] = (j-i) x^(i+j-1) xi_1*,
    [x^i xi_1*, x^j xi_2*] = (j-p) x^(i+j-1) xi_2*, [x^i xi_2*, x^j xi_2*] = 0,
    with x^e = 0 outside 0 <= e < p."""
    alg = trunc_poly(p)
    deg = degf + degg - 1
    e = i + j - 1
    if degf == 1 and degg == 1:
        coeff = j - i
    elif degf == 1 and degg == 2:
        coeff = j - p
    elif degf == 2 and degg == 2:
        coeff = 0
    else:
        raise ValueError("table covers degrees (1,1), (1,2), (2,2)")
    if coeff == 0 or e < 0 or e >= p:
        return SmallCochain(small_a(p), deg, AlgElem.zero(alg))
    return SmallCochain(small_a(p), deg, AlgElem.monomial(alg, (e,), coeff))


def predicted_bracket_taft(p: int, degf: int, i: int, degg: int, j: int) -> SmallCochain:
    """The Taft table (plain track): [f~_(xg^i), f~_(xg^j)] = 0,
    [f~_(xg^i), f~_(g^j)] = -(p-2) g^j when i = 0 and (omega^(-i)+1) g^(i+j)
    otherwise, [f~_(g^i), f~_(g^j)] = 0."""
    alg = taft(p)
    deg = degf + degg - 1
    if degf == 1 and degg == 1:
        value = AlgElem.zero(alg)
    elif degf == 2 and degg == 2:
        value = AlgElem.zero(alg)
    elif degf == 1 and degg == 2:
        if i == 0:
            value = AlgElem.monomial(alg, (0, j), -(p - 2))
        else:
            coeff = omega_power(p, -i) + CycScalar.one(p)
            value = AlgElem.monomial(alg, (0, (i + j) % p), coeff)
    else:
        raise ValueError("table covers degrees (1,1), (1,2), (2,2)")
    return SmallCochain(small_taft(p), deg, value)
