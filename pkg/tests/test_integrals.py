"""Operator engine: coordinate dictionary, integral actions, transcriptions,
characteristic operator, commutativity."""
import itertools
import random
from fractions import Fraction

import pytest

from gegenlab.scalars import (
    GaussRational,
    GR_I,
    KappaPolynomial,
    KappaRational,
    kappa,
    kr,
    lin,
)

I_SCALAR = KappaRational(KappaPolynomial([GR_I]))
from gegenlab.symfun import (
    XPolynomial,
    XRational,
    ZPolynomial,
    weighted_degree,
)
from gegenlab.integrals import (
    apply_gauge_potential,
    apply_integral,
    apply_momentum,
    calibrate,
    char_apply,
    commutator_residual,
    pair_potential,
    transcribed_operator,
)
from gegenlab.gegenbauer import char_eigenvalue, gen_eigen, l_vector


def xvar(n, j):
    return XPolynomial.variable(n, j)


def _eval_xpoly(p, xs):
    total = GaussRational(0)
    for e, c in p.terms.items():
        term = c(Fraction(0))  # coefficients here carry no coupling
        for x, k in zip(xs, e):
            if k:
                term = term * GaussRational(x ** k)
        total = total + term
    return total


def _eval_xrational(f, xs):
    num = _eval_xpoly(f.num, xs)
    den = GaussRational(1)
    for (a, b), e in f.den_pairs.items():
        den = den * GaussRational((xs[a - 1] - xs[b - 1]) ** e)
    for j, e in enumerate(f.den_mono):
        if e:
            den = den * GaussRational(xs[j] ** e)
    return num / den


class TestMomentum:
    def test_degree_shift(self):
        f = XPolynomial.monomial(3, (1, 1, 0))
        assert apply_momentum(f, 1) == f.scale(kr(1, 3))

    def test_constant_is_killed(self):
        assert apply_momentum(XPolynomial.one(3), 2).is_zero

    def test_total_momentum_vanishes(self):
        rng = random.Random(11)
        for _ in range(8):
            e = tuple(rng.randrange(0, 4) for _ in range(3))
            f = XPolynomial.monomial(3, e, kr(rng.randrange(1, 5)))
            total = XPolynomial.zero(3)
            for j in (1, 2, 3):
                total = total + apply_momentum(f, j)
            assert total.is_zero


class TestGaugePotential:
    def test_two_particles(self):
        f = XRational(XPolynomial.one(2))
        g = apply_gauge_potential(f, 1)
        assert g.den_pairs == {(1, 2): 1}
        assert g.num == (xvar(2, 1) + xvar(2, 2)).scale(I_SCALAR)

    def test_pair_antisymmetry(self):
        a = pair_potential(3, 1, 2)
        b = pair_potential(3, 2, 1)
        assert a.num == -b.num and a.den_pairs == b.den_pairs

    def test_cancellation_to_polynomial(self):
        x1, x2 = xvar(2, 1), xvar(2, 2)
        f = XRational((x1 - x2) * (x1 - x2))
        g = apply_gauge_potential(f, 1).reduce()
        assert g.is_polynomial
        assert g.num == ((x1 + x2) * (x1 - x2)).scale(I_SCALAR)


class TestCoordinateDictionary:
    """Exact identities behind the x-space realization, checked at random
    rational points."""

    def test_curvature_equals_one_plus_cotangent_squared(self):
        rng = random.Random(23)
        for _ in range(12):
            a = Fraction(rng.randrange(1, 30), rng.randrange(1, 9))
            b = Fraction(rng.randrange(1, 30), rng.randrange(1, 9))
            if a == b:
                continue
            ctg2 = -((a + b) / (a - b)) ** 2  # (i (a+b)/(a-b))^2
            lhs = Fraction(-4) * a * b / (a - b) ** 2
            assert lhs == 1 + ctg2

    def test_momentum_of_cotangent_is_curvature(self):
        # 2i x_j d/dx_j applied to the (k,j) cotangent image gives the
        # curvature image -4 x_j x_k / (x_j - x_k)^2
        rng = random.Random(29)
        for _ in range(12):
            xj = Fraction(rng.randrange(1, 20), rng.randrange(1, 7))
            xk = Fraction(rng.randrange(1, 20), rng.randrange(1, 7))
            if xj == xk:
                continue
            # derivative of (x_k + x_j)/(x_k - x_j) in x_j is 2 x_k/(x_k-x_j)^2
            lhs = -2 * xj * (2 * xk / (xk - xj) ** 2)  # (2i)(i) = -2
            assert lhs == Fraction(-4) * xj * xk / (xj - xk) ** 2

    def test_gauge_row_matches_pair_sum(self):
        rng = random.Random(31)
        xs = (Fraction(3, 2), Fraction(7), Fraction(1, 5))
        row = apply_gauge_potential(XRational(XPolynomial.one(3)), 2)
        direct = sum(
            (_eval_xrational(pair_potential(3, 2, k), xs) for k in (1, 3)),
            GaussRational(0))
        assert _eval_xrational(row, xs) == direct


class TestApplyIntegral:
    def test_order2_on_z1(self):
        p = ZPolynomial.variable(2, 1)
        assert apply_integral(2, p, 3) == p.scale(kr(4, 3) * lin(1, 3))

    def test_order2_on_constant(self):
        assert apply_integral(2, ZPolynomial.one(2), 3).is_zero
        assert apply_integral(3, ZPolynomial.one(2), 3).is_zero
        assert apply_integral(4, ZPolynomial.one(3), 4).is_zero

    def test_order3_on_z1(self):
        p = ZPolynomial.variable(2, 1)
        assert apply_integral(3, p, 3) == p.scale(kr(8, 27) * lin(2, 3) * lin(1, 3))

    def test_output_coefficients_real(self):
        out = apply_integral(3, ZPolynomial.monomial(2, (2, 1)), 3)
        assert out.is_real()

    def test_degree_filtration(self):
        for w in [(2, 1), (0, 2), (3, 0)]:
            out = apply_integral(2, ZPolynomial.monomial(2, w), 3)
            assert all(weighted_degree(v) <= weighted_degree(w) for v in out.terms)

    def test_unsupported_order(self):
        with pytest.raises(ValueError):
            apply_integral(5, ZPolynomial.one(4), 5)


class TestTranscription:
    def test_a2_order2_on_z2(self):
        op = transcribed_operator(3, 2)
        z2 = ZPolynomial.variable(2, 2)
        assert op.apply(z2) == z2.scale(kr(4, 3) * lin(1, 3))

    def test_a2_order3_on_one(self):
        assert transcribed_operator(3, 3).apply(ZPolynomial.one(2)).is_zero

    def test_a3_order2_on_z2(self):
        op = transcribed_operator(4, 2)
        z2 = ZPolynomial.variable(3, 2)
        assert op.apply(z2) == z2.scale(kr(2) * lin(1, 4))

    def test_unsupported(self):
        with pytest.raises(ValueError):
            transcribed_operator(4, 3)

    @pytest.mark.parametrize("N,order", [(3, 2), (3, 3), (4, 2)])
    def test_engine_matches_transcription(self, N, order):
        rank = N - 1
        for w in itertools.product(range(5), repeat=rank):
            if weighted_degree(w) > 4:
                continue
            m = ZPolynomial.monomial(rank, w)
            assert transcribed_operator(N, order).apply(m) == apply_integral(order, m, N)


class TestCharacteristic:
    def test_on_vacuum(self):
        cs = char_apply(ZPolynomial.one(2), 3)
        expected = [kr(0), kr(-4) * kappa() ** 2, kr(0), kr(1)]
        one = ZPolynomial.one(2)
        for got, c in zip(cs, expected):
            assert got == one.scale(c)

    def test_symbolic_factorization_on_z1(self):
        z1 = ZPolynomial.variable(2, 1)
        cs = char_apply(z1, 3)
        ev = char_eigenvalue((1, 0), 3)
        for got, c in zip(cs, ev):
            assert got == z1.scale(c)

    def test_numeric_t(self):
        z1 = ZPolynomial.variable(2, 1)
        from gegenlab.scalars import KappaPolynomial, KappaRational
        t = KappaRational(KappaPolynomial([Fraction(-2, 3), 2]))  # 2k - 2/3
        assert char_apply(z1, 3, t) == z1.scale(kr(-16) * kappa() ** 2)


class TestCalibration:
    def test_order2_scale_and_offset(self):
        cal = calibrate(3)
        assert cal.scales[2] == Fraction(-1)
        assert cal.offsets[2] == kr(-4) * kappa() ** 2

    def test_order3_offset_vanishes(self):
        assert calibrate(3).offsets[3] == kr(0)

    def test_four_particle_offset(self):
        # e_2 of the vacuum spectral vector (3k, k, -k, -3k) is -10k^2
        cal = calibrate(4)
        assert cal.offsets[2] == kr(-10) * kappa() ** 2

    def test_scales_are_rational_constants(self):
        cal = calibrate(4)
        assert set(cal.scales) == {2, 3, 4}
        for s in cal.scales.values():
            assert isinstance(s, Fraction)


class TestCommutators:
    def test_three_particles(self):
        rep = commutator_residual(2, 3, 3, 4)
        assert rep.is_zero and rep.max_norm == 0

    def test_four_particles_order_two_four(self):
        rep = commutator_residual(2, 4, 4, 3)
        assert rep.is_zero

    def test_self_commutator(self):
        assert commutator_residual(2, 2, 3, 3).is_zero
