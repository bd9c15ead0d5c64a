"""The bar-resolution oracle: differentials, brackets, comparisons, classes."""

import random
from itertools import product

import pytest

from gerstenhaber.algebras import AlgElem, taft, trunc_poly
from gerstenhaber.bracket import (
    GRADED,
    a_cochain,
    bracket_phi,
    taft_basis_cochain,
)
from gerstenhaber.oracle import (
    BarCochain,
    bracket_bar,
    build_comparison,
    circle_bar,
    class_equal,
    cup_bar,
    hh_dimensions,
    hochschild_differential,
    is_bar_cocycle,
    pull_back,
    push_forward,
)
from gerstenhaber.resolution import SMALL_A, SMALL_TAFT, ResElem, generator, small_a
from gerstenhaber.scalars import CycScalar, omega_power


def rand_cochain(alg, degree, rng, density=0.3, spread=2):
    basis = list(alg.basis())
    table = {}
    for key in product(basis, repeat=degree):
        if rng.random() < density:
            mono = rng.choice(basis)
            table[key] = AlgElem.monomial(alg, mono, rng.randint(-spread, spread))
    return BarCochain(alg, degree, table)


class TestDifferential:
    def test_degree_zero_commutative(self):
        alg = trunc_poly(3)
        f = BarCochain(alg, 0, {(): AlgElem.monomial(alg, (1,))})
        assert hochschild_differential(f).is_zero()

    def test_degree_zero_taft(self):
        # (d x)(g) = g x - x g = (omega - 1) x g
        p = 3
        alg = taft(p)
        f = BarCochain(alg, 0, {(): AlgElem.monomial(alg, (1, 0))})
        df = hochschild_differential(f)
        want = AlgElem.monomial(alg, (1, 1), omega_power(p, 1) - CycScalar.one(p))
        assert df.value(((0, 1),)) == want

    def test_d_squared(self):
        rng = random.Random(31)
        for alg in (trunc_poly(3), taft(3)):
            for n in (0, 1, 2):
                f = rand_cochain(alg, n, rng)
                assert hochschild_differential(hochschild_differential(f)).is_zero()


class TestBarProducts:
    def test_self_bracket_degree_one(self):
        rng = random.Random(5)
        for alg in (trunc_poly(3), taft(3)):
            f = rand_cochain(alg, 1, rng, density=0.7)
            assert bracket_bar(f, f).is_zero()

    def test_degree_one_circle_is_composition(self):
        p = 3
        alg = trunc_poly(p)
        f = BarCochain(alg, 1, {((1,),): AlgElem.monomial(alg, (2,))})
        g = BarCochain(alg, 1, {((2,),): AlgElem.monomial(alg, (1,))})
        fg = circle_bar(f, g)
        # (f o g)(x^2) = f(x) = x^2; all else 0
        assert fg.value(((2,),)) == AlgElem.monomial(alg, (2,))
        assert fg.value(((1,),)).is_zero()

    def test_antisymmetry_sign(self):
        rng = random.Random(7)
        alg = taft(3)
        for m, n in ((1, 1), (1, 2), (2, 2)):
            f = rand_cochain(alg, m, rng)
            g = rand_cochain(alg, n, rng)
            lhs = bracket_bar(f, g)
            rhs = bracket_bar(g, f)
            sign = -1 if ((m - 1) * (n - 1)) % 2 == 0 else 1
            assert lhs == rhs.scale(sign)

    def test_graded_jacobi(self):
        """[[f,g],h] = [f,[g,h]] - (-1)^((|f|-1)(|g|-1)) [g,[f,h]], exactly."""
        rng = random.Random(11)
        for alg in (trunc_poly(3), taft(3)):
            for _ in range(4):
                m, n, l = rng.randint(1, 2), rng.randint(1, 2), rng.randint(1, 2)
                f = rand_cochain(alg, m, rng, density=0.2)
                g = rand_cochain(alg, n, rng, density=0.2)
                h = rand_cochain(alg, l, rng, density=0.2)
                lhs = bracket_bar(bracket_bar(f, g), h)
                rhs = bracket_bar(f, bracket_bar(g, h))
                correction = bracket_bar(g, bracket_bar(f, h))
                if ((m - 1) * (n - 1)) % 2 == 1:
                    rhs = rhs + correction
                else:
                    rhs = rhs - correction
                assert lhs == rhs

    def test_cup_associativity_cochain_level(self):
        rng = random.Random(13)
        alg = taft(3)
        f = rand_cochain(alg, 1, rng, density=0.4)
        g = rand_cochain(alg, 1, rng, density=0.4)
        h = rand_cochain(alg, 1, rng, density=0.4)
        assert cup_bar(cup_bar(f, g), h) == cup_bar(f, cup_bar(g, h))


class TestComparison:
    def test_iota_zero(self):
        cm = build_comparison(SMALL_A, 3, 2)
        assert cm.iota_values[0] == ResElem(cm.bar, 0, {((0,), (0,)): 1})

    def test_pi_zero(self):
        cm = build_comparison(SMALL_A, 3, 2)
        e = ResElem(cm.bar, 0, {((0,), (0,)): 1})
        assert cm.pi_apply(e) == generator(small_a(3), 0)

    def test_pi_one_on_x(self):
        cm = build_comparison(SMALL_A, 3, 2)
        assert cm.pi_interior(1, ((1,),)) == generator(small_a(3), 1)

    @pytest.mark.parametrize("kind", [SMALL_A, SMALL_TAFT])
    def test_pi_iota_identity(self, kind):
        cm = build_comparison(kind, 3, 3)
        assert cm.pi_on_identity

    def test_pullback_of_cocycle_is_cocycle(self):
        cm = build_comparison(SMALL_TAFT, 3, 3)
        for j in range(3):
            F = pull_back(taft_basis_cochain(3, 1, j), cm)
            assert is_bar_cocycle(F)
        F = pull_back(taft_basis_cochain(3, 2, 0), cm)
        assert is_bar_cocycle(F)

    def test_push_forward_section(self):
        """F o iota recovers the small cochain for pulled-back cochains."""
        cm = build_comparison(SMALL_A, 3, 2)
        f = a_cochain(3, 2, 1)
        assert push_forward(pull_back(f, cm), cm) == f


class TestClassEqual:
    def test_equal_cochains(self):
        cm = build_comparison(SMALL_A, 3, 2)
        F = pull_back(a_cochain(3, 1, 1), cm)
        assert class_equal(F, F)

    def test_shift_by_coboundary(self):
        p = 3
        alg = trunc_poly(p)
        cm = build_comparison(SMALL_A, p, 2)
        F = pull_back(a_cochain(p, 1, 1), cm)
        rng = random.Random(3)
        noise = rand_cochain(alg, 0, rng, density=1.0)
        assert class_equal(F, F + hochschild_differential(noise))

    def test_distinct_classes(self):
        p = 3
        cm = build_comparison(SMALL_A, p, 2)
        F = pull_back(a_cochain(p, 1, 1), cm)
        G = pull_back(a_cochain(p, 1, 2), cm)
        assert not class_equal(F, G)

    def test_rejects_non_cocycle(self):
        p = 3
        cm = build_comparison(SMALL_A, p, 2)
        F = pull_back(a_cochain(p, 1, 0), cm)  # not a cocycle
        with pytest.raises(ValueError):
            class_equal(F, F)


class TestDimensions:
    def test_trunc_poly_dims(self):
        assert hh_dimensions(trunc_poly(3), 3) == [3, 2, 2, 2]

    def test_taft_dims(self):
        assert hh_dimensions(taft(3), 3) == [1, 1, 1, 1]


def _a_cocycle_pairs(p):
    pairs = []
    for i in range(1, p):
        for j in range(1, p):
            pairs.append((a_cochain(p, 1, i), a_cochain(p, 1, j)))
    for i in range(1, p):
        for j in range(p):
            pairs.append((a_cochain(p, 1, i), a_cochain(p, 2, j)))
    for i in range(p):
        for j in range(p):
            pairs.append((a_cochain(p, 2, i), a_cochain(p, 2, j)))
    return pairs


def _taft_cocycle_pairs(p):
    pairs = []
    for i in range(p):
        for j in range(p):
            pairs.append((taft_basis_cochain(p, 1, i), taft_basis_cochain(p, 1, j)))
    for i in range(p):
        pairs.append((taft_basis_cochain(p, 1, i), taft_basis_cochain(p, 2, 0)))
    pairs.append((taft_basis_cochain(p, 2, 0), taft_basis_cochain(p, 2, 0)))
    return pairs


class TestOracleEquivalence:
    """The central correctness check: the phi-method bracket class equals the
    bar-resolution bracket class through the comparison maps."""

    @pytest.mark.parametrize("pair_index", range(len(_a_cocycle_pairs(3))))
    def test_trunc_poly(self, pair_index):
        p = 3
        f, g = _a_cocycle_pairs(p)[pair_index]
        cm = build_comparison(SMALL_A, p, 3)
        r = bracket_phi(f, g, GRADED)
        F, G = pull_back(f, cm), pull_back(g, cm)
        assert class_equal(pull_back(r, cm), bracket_bar(F, G))

    @pytest.mark.parametrize("pair_index", range(len(_taft_cocycle_pairs(3))))
    def test_taft(self, pair_index):
        p = 3
        f, g = _taft_cocycle_pairs(p)[pair_index]
        cm = build_comparison(SMALL_TAFT, p, 3)
        r = bracket_phi(f, g, GRADED)
        F, G = pull_back(f, cm), pull_back(g, cm)
        assert class_equal(pull_back(r, cm), bracket_bar(F, G))
