import math

import numpy as np
import pytest

from nlsewi import (
    ConfigurationError,
    Direction,
    Field,
    Multiplier,
    Space,
    UsageError,
    apply_multiplier,
    coefficients_of,
    laplacian_propagator,
    lp_norm,
    make_grid,
    phi1,
    sobolev_norm,
    sobolev_weight,
    synthesize,
    transform,
)


def random_field(grid, seed=0):
    rng = np.random.default_rng(seed)
    values = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
    return Field(grid, values, Space.PHYSICAL)


class TestGrid:
    def test_frequencies_small_grid(self):
        g = make_grid(1, 1.0, 4)
        assert np.allclose(g.frequencies, [0.0, np.pi, -2 * np.pi, -np.pi])

    def test_spacing(self):
        g = make_grid(2, 8.0, 256)
        assert g.spacing == pytest.approx(1.0 / 16.0)
        assert make_grid(1, 16.0, 2**14).spacing == pytest.approx(2.0**-9)

    def test_point_count(self):
        assert make_grid(3, 1.0, 8).point_count == 512

    def test_frequency_pairing(self):
        # every frequency has its negative on the grid except 0 and the -n/2 mode
        g = make_grid(1, 3.0, 16)
        freqs = sorted(g.frequencies)
        unpaired = [f for f in freqs if -f not in freqs]
        assert unpaired == [min(freqs)]

    @pytest.mark.parametrize(
        "dim,L,n", [(1, 16.0, 2), (1, 16.0, 15), (0, 1.0, 8), (4, 1.0, 8), (1, -1.0, 8), (1, 0.0, 8)]
    )
    def test_rejects_bad_parameters(self, dim, L, n):
        with pytest.raises(ConfigurationError):
            make_grid(dim, L, n)

    def test_grid_equality_ignores_cache(self):
        a, b = make_grid(2, 8.0, 32), make_grid(2, 8.0, 32)
        a.mu_abs2()
        assert a == b


class TestTransform:
    def test_constant_field_has_only_dc(self):
        g = make_grid(1, 2.0, 32)
        f = Field(g, np.ones(32), Space.PHYSICAL)
        fhat = transform(f, Direction.FORWARD)
        assert fhat.values[0] == pytest.approx(32.0)
        assert np.abs(fhat.values[1:]).max() < 1e-13

    @pytest.mark.parametrize("dim,n", [(1, 64), (2, 32), (3, 16)])
    def test_round_trip(self, dim, n):
        g = make_grid(dim, 5.0, n)
        f = random_field(g, seed=dim)
        back = transform(transform(f, Direction.FORWARD), Direction.INVERSE)
        rel = np.abs(back.values - f.values).max() / np.abs(f.values).max()
        assert rel < 1e-13
        assert back.space is Space.PHYSICAL

    def test_single_mode_is_plane_wave(self):
        g = make_grid(1, 1.0, 16)
        coeffs = np.zeros(16, complex)
        coeffs[3] = 1.0
        f = synthesize(g, coeffs)
        x = g.coordinates()[0]
        assert np.abs(f.values - np.exp(1j * g.frequencies[3] * x)).max() < 1e-13

    def test_synthesize_coefficients_round_trip(self):
        g = make_grid(2, 3.0, 16)
        rng = np.random.default_rng(5)
        coeffs = rng.standard_normal((16, 16)) + 1j * rng.standard_normal((16, 16))
        assert np.abs(coefficients_of(synthesize(g, coeffs)) - coeffs).max() < 1e-12

    def test_space_tag_mismatch(self):
        g = make_grid(1, 1.0, 8)
        f = random_field(g)
        with pytest.raises(UsageError):
            transform(f, Direction.INVERSE)
        with pytest.raises(UsageError):
            transform(transform(f, Direction.FORWARD), Direction.FORWARD)

    def test_parseval(self):
        g = make_grid(2, 8.0, 64)
        f = random_field(g, seed=2)
        assert sobolev_norm(f, 0.0) == pytest.approx(lp_norm(f, 2), rel=1e-13)


class TestMultiplier:
    def test_identity_is_bitwise(self):
        g = make_grid(2, 1.0, 16)
        fhat = transform(random_field(g), Direction.FORWARD)
        out = apply_multiplier(Multiplier.identity(g), fhat)
        assert np.array_equal(out.values, fhat.values)

    def test_zero_symbol(self):
        g = make_grid(1, 1.0, 16)
        fhat = transform(random_field(g), Direction.FORWARD)
        out = apply_multiplier(Multiplier(g, np.zeros(16)), fhat)
        assert np.all(out.values == 0)

    def test_semigroup_squaring(self):
        g = make_grid(1, 2.0, 64)
        tau = 0.37
        fhat = transform(random_field(g, seed=3), Direction.FORWARD)
        once = laplacian_propagator(g, tau)
        twice = apply_multiplier(once, apply_multiplier(once, fhat))
        direct = apply_multiplier(laplacian_propagator(g, 2 * tau), fhat)
        rel = np.abs(twice.values - direct.values).max() / np.abs(fhat.values).max()
        assert rel < 1e-14

    def test_composition_commutes(self):
        g = make_grid(1, 2.0, 32)
        rng = np.random.default_rng(9)
        a = Multiplier(g, rng.standard_normal(32) + 1j * rng.standard_normal(32))
        b = Multiplier(g, rng.standard_normal(32))
        assert np.allclose((a * b).symbol, (b * a).symbol)

    def test_linearity(self):
        g = make_grid(1, 2.0, 64)
        m = laplacian_propagator(g, 0.9)
        f = transform(random_field(g, seed=4), Direction.FORWARD)
        h = transform(random_field(g, seed=5), Direction.FORWARD)
        combined = apply_multiplier(m, 1.3 * f + (-0.4 + 2j) * h)
        split = 1.3 * apply_multiplier(m, f) + (-0.4 + 2j) * apply_multiplier(m, h)
        rel = np.abs(combined.values - split.values).max() / np.abs(combined.values).max()
        assert rel < 1e-13

    def test_grid_mismatch(self):
        g1, g2 = make_grid(1, 1.0, 16), make_grid(1, 1.0, 32)
        fhat = transform(random_field(g2), Direction.FORWARD)
        with pytest.raises(UsageError):
            apply_multiplier(Multiplier.identity(g1), fhat)

    def test_requires_fourier_space(self):
        g = make_grid(1, 1.0, 16)
        with pytest.raises(UsageError):
            apply_multiplier(Multiplier.identity(g), random_field(g))


class TestLaplacianPropagator:
    def test_zero_time_is_identity(self):
        g = make_grid(2, 4.0, 16)
        assert np.allclose(laplacian_propagator(g, 0.0).symbol, 1.0)

    def test_unitary(self):
        g = make_grid(2, 4.0, 32)
        f = random_field(g, seed=6)
        fhat = transform(f, Direction.FORWARD)
        for t in (0.1, 3.7, -2.0):
            moved = transform(apply_multiplier(laplacian_propagator(g, t), fhat), Direction.INVERSE)
            assert lp_norm(moved, 2) == pytest.approx(lp_norm(f, 2), rel=1e-12)

    def test_inverse_composition(self):
        g = make_grid(1, 4.0, 64)
        t = 1.234
        prod = laplacian_propagator(g, t) * laplacian_propagator(g, -t)
        assert np.abs(prod.symbol - 1.0).max() < 1e-14


class TestPhi1:
    def test_at_zero(self):
        assert phi1(0.0) == 1.0

    def test_at_i_pi(self):
        # (e^{i pi} - 1)/(i pi) = -2/(i pi) = 2i/pi
        assert phi1(1j * np.pi) == pytest.approx(2j / np.pi, abs=1e-15)

    def test_tiny_imaginary_argument_matches_extended_precision(self):
        # independent oracle: quotient evaluated at 50 significant digits
        mpmath = pytest.importorskip("mpmath")
        mpmath.mp.dps = 50
        z = -1e-9j
        want = mpmath.mpc((mpmath.exp(mpmath.mpc(0, -1e-9)) - 1) / mpmath.mpc(0, -1e-9))
        got = phi1(z)
        assert abs(got - complex(want)) < 1e-15

    def test_branch_agreement_near_threshold(self):
        # the quotient's own cancellation error near |z| ~ 1e-2 is ~2.5e-14
        for mag in (0.9e-2, 1.1e-2):
            for angle in (0.0, 0.7, 2.1, -1.3):
                z = mag * np.exp(1j * angle)
                quotient = (np.exp(z) - 1.0) / z
                assert abs(phi1(z) - quotient) < 1e-13

    def test_imaginary_axis_bound(self):
        rng = np.random.default_rng(11)
        x = rng.uniform(-1e3, 1e3, size=1_000_000)
        mags = np.abs(phi1(1j * x))
        assert mags.max() <= 1.0 + 1e-15
        assert mags[np.abs(x) > 0.5].max() < 1.0

    def test_array_and_scalar_agree(self):
        zs = np.array([0.0, 1e-9j, 0.5 + 0.1j, -3j])
        arr = phi1(zs)
        for z, v in zip(zs, arr):
            assert phi1(complex(z)) == pytest.approx(v, abs=1e-16)


class TestSobolevWeight:
    def test_zero_order_is_identity(self):
        g = make_grid(1, 2.0, 32)
        assert np.array_equal(sobolev_weight(g, 0.0).symbol, np.ones(32))

    def test_zero_mode_value(self):
        g = make_grid(2, 2.0, 16)
        assert sobolev_weight(g, 2.0).symbol[0, 0] == 1.0

    def test_pointwise_value(self):
        g = make_grid(2, 2.0, 16)
        sym = sobolev_weight(g, 1.0).symbol
        idx = np.argmin(np.abs(g.frequencies - np.pi))
        assert sym[idx, 0] == pytest.approx(math.sqrt(1 + np.pi**2), rel=1e-14)

    def test_real_and_positive(self):
        g = make_grid(1, 2.0, 32)
        sym = sobolev_weight(g, -1.7).symbol
        assert np.isrealobj(sym) and (sym > 0).all()
