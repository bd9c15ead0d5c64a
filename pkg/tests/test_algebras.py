"""Algebra arithmetic and the Hopf structure of T_p."""

import random

import pytest

from gerstenhaber.algebras import (
    AlgElem,
    antipode,
    comultiply,
    counit,
    enveloping,
    group_algebra,
    sweedler,
    taft,
    tensor_pair,
    trunc_poly,
)
from gerstenhaber.scalars import CycScalar, omega_power


def mono(alg, m, c=1):
    return AlgElem.monomial(alg, m, c)


class TestProducts:
    def test_taft_g_times_x(self):
        # g x = omega x g
        t = taft(3)
        assert mono(t, (0, 1)) * mono(t, (1, 0)) == mono(t, (1, 1), omega_power(3, 1))

    def test_trunc_truncation(self):
        a = trunc_poly(3)
        assert (mono(a, (2,)) * mono(a, (2,))).is_zero()

    def test_taft_product_rule(self):
        # (x g^2)(x g) = omega^2 x^2 g^0 at p = 3
        t = taft(3)
        assert mono(t, (1, 2)) * mono(t, (1, 1)) == mono(t, (2, 0), omega_power(3, 2))

    def test_group_wraps(self):
        g = group_algebra(5)
        assert mono(g, (3,)) * mono(g, (4,)) == mono(g, (2,))

    def test_taft_relations(self):
        for p in (3, 5):
            t = taft(p)
            g = mono(t, (0, 1))
            x = mono(t, (1, 0))
            gp = AlgElem.one(t)
            for _ in range(p):
                gp = gp * g
            assert gp == AlgElem.one(t)
            xp = AlgElem.one(t)
            for _ in range(p):
                xp = xp * x
            assert xp.is_zero()
            assert g * x == x.scale(omega_power(p, 1)) * g

    def test_enveloping_opposite(self):
        # In A ox A^op the second slots compose in reverse order.
        p = 3
        ae = enveloping(taft(p))
        a = mono(ae, (0, 0, 1, 0))  # 1 ox x
        b = mono(ae, (0, 0, 0, 1))  # 1 ox g
        # (1 ox x)(1 ox g) has second slot g * x = omega x g
        assert a * b == mono(ae, (0, 0, 1, 1), omega_power(p, 1))

    def test_plain_tensor_not_opposite(self):
        p = 3
        t2 = tensor_pair(taft(p), taft(p))
        a = mono(t2, (0, 0, 1, 0))
        b = mono(t2, (0, 0, 0, 1))
        # componentwise: second slot x * g = x g, no twist
        assert a * b == mono(t2, (0, 0, 1, 1))

    def test_mismatched_algebras(self):
        with pytest.raises(ValueError):
            mono(taft(3), (0, 0)) * mono(trunc_poly(3), (0,))

    def test_associativity_random(self):
        rng = random.Random(3)
        for alg in (trunc_poly(3), group_algebra(3), taft(3), enveloping(trunc_poly(3))):
            basis = list(alg.basis())
            for _ in range(15):
                a, b, c = (
                    AlgElem(alg, {rng.choice(basis): rng.randint(-3, 3) for _ in range(2)})
                    for _ in range(3)
                )
                assert (a * b) * c == a * (b * c)


class TestHopfStructure:
    def test_counit(self):
        t = taft(3)
        assert counit(mono(t, (0, 2))) == CycScalar.one(3)
        assert counit(mono(t, (1, 1))).is_zero()
        three_plus_2x = mono(t, (0, 0), 3) + mono(t, (1, 0), 2)
        assert counit(three_plus_2x) == CycScalar.from_rational(3, 3)

    def test_comultiply_x(self):
        p = 3
        t = taft(p)
        d = comultiply(mono(t, (1, 0)))
        t2 = tensor_pair(t, t)
        assert d == AlgElem(t2, {(0, 0, 1, 0): 1, (1, 0, 0, 1): 1})

    def test_comultiply_grouplike(self):
        p = 3
        t = taft(p)
        d = comultiply(mono(t, (0, 2)))
        t2 = tensor_pair(t, t)
        assert d == AlgElem(t2, {(0, 2, 0, 2): 1})

    def test_comultiply_x_squared(self):
        # Delta(x^2) = 1 ox x^2 + (1 + omega) x ox xg + x^2 ox g^2 at p = 3
        p = 3
        t = taft(p)
        d = comultiply(mono(t, (2, 0)))
        t2 = tensor_pair(t, t)
        expected = AlgElem(t2, {
            (0, 0, 2, 0): CycScalar.one(p),
            (1, 0, 1, 1): CycScalar.one(p) + omega_power(p, 1),
            (2, 0, 0, 2): CycScalar.one(p),
        })
        assert d == expected

    def test_antipode(self):
        p = 3
        t = taft(p)
        assert antipode(mono(t, (0, 1))) == mono(t, (0, p - 1))
        assert antipode(mono(t, (1, 0))) == mono(t, (1, p - 1), -1)
        assert antipode(AlgElem.one(t)) == AlgElem.one(t)

    @pytest.mark.parametrize("p", [3, 5])
    def test_hopf_axioms(self, p):
        """Counit, coassociativity, antipode axioms on every basis monomial."""
        t = taft(p)
        for m in t.basis():
            elem = mono(t, m)
            # (eps ox id) Delta = id = (id ox eps) Delta
            left = AlgElem.zero(t)
            right = AlgElem.zero(t)
            for (m1, m2), c in sweedler(elem, 2).items():
                left = left + mono(t, m2, c * _eps_mono(p, m1))
                right = right + mono(t, m1, c * _eps_mono(p, m2))
            assert left == elem
            assert right == elem
            # coassociativity via the two bracketings
            assert _delta2_left(elem) == sweedler(elem, 3)
            # antipode: sum S(a_1) a_2 = eps(a) 1 = sum a_1 S(a_2)
            s_left = AlgElem.zero(t)
            s_right = AlgElem.zero(t)
            for (m1, m2), c in sweedler(elem, 2).items():
                s_left = s_left + (antipode(mono(t, m1)) * mono(t, m2)).scale(c)
                s_right = s_right + (mono(t, m1) * antipode(mono(t, m2))).scale(c)
            expected = AlgElem.one(t).scale(counit(elem))
            assert s_left == expected
            assert s_right == expected


def _eps_mono(p, m):
    return CycScalar.one(p) if m[0] == 0 else CycScalar.zero(p)


def _delta2_left(elem):
    """(Delta ox id) Delta, expanded to a three-leg table."""
    t = elem.algebra
    p = t.p
    out = {}
    for (m1, m2), c in sweedler(elem, 2).items():
        for (m11, m12), c2 in sweedler(AlgElem.monomial(t, m1), 2).items():
            key = (m11, m12, m2)
            val = out.get(key, CycScalar.zero(p)) + c * c2
            if val.is_zero():
                out.pop(key, None)
            else:
                out[key] = val
    return out
