import math

import numpy as np
import pytest

from nlsewi import (
    ConfigurationError,
    PotentialKind,
    PotentialSpec,
    RegularityClass,
    UsageError,
    delta_series_potential,
    gaussian_well,
    make_grid,
    power_law_potential,
    predicted_order,
    regularity_loss,
    sampled_potential,
    sigma_window,
)


def dirichlet_kernel_samples(grid, n_ref):
    """Closed-form value of the truncated comb at grid points (independent oracle)."""
    x = grid.coordinates()[0]
    u = np.pi * x / (2.0 * grid.half_width)
    with np.errstate(invalid="ignore", divide="ignore"):
        out = -np.sin((2 * n_ref + 1) * u) / (2.0 * grid.half_width * np.sin(u))
    out[np.argmin(np.abs(x))] = -(2 * n_ref + 1) / (2.0 * grid.half_width)
    return out


class TestDeltaSeries:
    def test_value_at_origin_small_truncation(self):
        # five unit terms at x=0: -5/(2*16)
        g = make_grid(1, 16.0, 64)
        V = delta_series_potential(g, 2)
        x = g.coordinates()[0]
        assert V.values.real[np.argmin(np.abs(x))] == pytest.approx(-5.0 / 32.0, abs=1e-14)

    @pytest.mark.parametrize("n_ref", [10, 500, 2**16])
    def test_fold_matches_dirichlet_kernel(self, n_ref):
        g = make_grid(1, 16.0, 2**12)
        V = delta_series_potential(g, n_ref, aliasing="fold")
        want = dirichlet_kernel_samples(g, n_ref)
        assert np.abs(V.values.real - want).max() / np.abs(want).max() < 1e-12

    def test_imaginary_residue(self):
        g = make_grid(1, 16.0, 2**12)
        V = delta_series_potential(g, 2**16)
        assert np.abs(V.values.imag).max() <= 1e-13 * np.abs(V.values.real).max()

    def test_fold_and_restrict_agree_below_grid_modes(self):
        g = make_grid(1, 16.0, 1024)
        a = delta_series_potential(g, 300, aliasing="fold")
        b = delta_series_potential(g, 300, aliasing="restrict")
        assert np.abs(a.values - b.values).max() < 1e-12

    def test_restrict_gives_flat_grid_coefficients(self):
        # beyond the grid's mode count the restriction is the pure grid comb
        from nlsewi import coefficients_of

        g = make_grid(1, 16.0, 256)
        V = delta_series_potential(g, 2**16, aliasing="restrict")
        coeffs = coefficients_of(V)
        assert np.abs(coeffs - (-1.0 / 32.0)).max() < 1e-14

    def test_fold_strengthens_comb_beyond_grid_modes(self):
        # the fold counts every aliased copy; with n_ref = 4n that is ~8 per mode
        g = make_grid(1, 16.0, 2**14)
        folded = delta_series_potential(g, 2**16, aliasing="fold")
        peak = folded.values.real.min()
        assert peak == pytest.approx(-(2 * 2**16 + 1) / 32.0, rel=1e-12)

    def test_rejects_bad_arguments(self):
        with pytest.raises(UsageError):
            delta_series_potential(make_grid(2, 16.0, 16), 4)
        g = make_grid(1, 16.0, 16)
        with pytest.raises(ConfigurationError):
            delta_series_potential(g, 0)
        with pytest.raises(ConfigurationError):
            delta_series_potential(g, 4, aliasing="other")


class TestPowerLaw:
    def test_zero_mode_is_zero(self):
        from nlsewi import coefficients_of

        g = make_grid(2, 8.0, 16)
        coeffs = coefficients_of(power_law_potential(g, 0.5))
        # constructed exactly zero; the transform round trip leaves only roundoff
        assert np.abs(coeffs[0, 0]) < 1e-15 * np.abs(coeffs).max()

    def test_matches_direct_mode_sum(self):
        # brute-force double sum over modes as an independent oracle
        g = make_grid(2, 8.0, 8)
        gamma = 0.5
        V = power_law_potential(g, gamma)
        x = g.coordinates()[0]
        want = np.zeros((8, 8), complex)
        for la in range(-4, 4):
            for lb in range(-4, 4):
                if la == 0 and lb == 0:
                    continue
                mu = np.pi * np.hypot(la, lb) / 8.0
                phase = np.exp(1j * np.pi * (la * x[:, None] + lb * x[None, :]) / 8.0)
                want += -((16.0) ** -2) * mu**-gamma * phase
        assert np.abs(V.values - want).max() < 1e-13

    @pytest.mark.parametrize("dim,gamma", [(2, 0.5), (3, 1.5), (3, 1.25)])
    def test_real_valued(self, dim, gamma):
        g = make_grid(dim, 8.0, 16)
        V = power_law_potential(g, gamma)
        assert np.abs(V.values.imag).max() <= 1e-12 * np.abs(V.values.real).max()

    def test_even_under_reflection(self):
        g = make_grid(2, 8.0, 32)
        V = power_law_potential(g, 0.5).values.real
        # x -> -x maps grid index j to (n - j) mod n along each axis
        reflected = np.roll(V[::-1, ::-1], shift=(1, 1), axis=(0, 1))
        assert np.abs(V - reflected).max() < 1e-12

    def test_attractive_singularity_at_origin(self):
        g = make_grid(2, 8.0, 64)
        V = power_law_potential(g, 0.5).values.real
        x = g.coordinates()[0]
        i0 = np.argmin(np.abs(x))
        assert V[i0, i0] == V.min() < 0

    def test_rejects_bad_arguments(self):
        with pytest.raises(UsageError):
            power_law_potential(make_grid(1, 8.0, 16), 0.5)
        with pytest.raises(ConfigurationError):
            power_law_potential(make_grid(2, 8.0, 16), -1.0)


class TestSampled:
    def test_gaussian_well_values(self):
        g = make_grid(2, 8.0, 32)
        V = sampled_potential(g, gaussian_well(depth=2.0, width=1.5))
        x = g.coordinates()[0]
        i0 = np.argmin(np.abs(x))
        assert V.values.real[i0, i0] == pytest.approx(-2.0)
        assert V.values.real.min() >= -2.0


class TestRegularityTables:
    def test_loss_examples(self):
        assert regularity_loss(2.0, 3) == (0.0, False)
        assert regularity_loss(12.0 / 7.0, 3).value == pytest.approx(0.25)
        assert regularity_loss(12.0 / 7.0, 3).strict is False
        assert regularity_loss(1.0, 1) == (0.5, True)
        assert regularity_loss(4.0 / 3.0, 2).value == pytest.approx(0.5)
        assert regularity_loss(math.inf, 1) == (0.0, False)

    def test_loss_range_per_dimension(self):
        for p in np.linspace(1.0, 6.0, 40):
            assert 0.0 <= regularity_loss(p, 1).value <= 0.5
        for p in np.linspace(1.01, 6.0, 40):
            assert 0.0 <= regularity_loss(p, 2).value < 1.0
        for p in np.linspace(1.51, 6.0, 40):
            assert 0.0 <= regularity_loss(p, 3).value < 0.5

    def test_loss_nonincreasing_in_p(self):
        for d, lo in ((1, 1.0), (2, 1.01), (3, 1.51)):
            ps = np.linspace(lo, 5.0, 50)
            vals = [regularity_loss(p, d).value for p in ps]
            assert np.all(np.diff(vals) <= 1e-12)

    @pytest.mark.parametrize("p,d", [(0.9, 1), (1.0, 2), (1.5, 3), (0.5, 2)])
    def test_loss_rejects_illposed_range(self, p, d):
        with pytest.raises(ValueError):
            regularity_loss(p, d)

    def test_order_examples(self):
        assert predicted_order(3.0, 3) == (1.0, False)
        got = predicted_order(12.0 / 7.0, 3)
        assert got.value == pytest.approx(5.0 / 8.0) and got.strict
        got = predicted_order(4.0 / 3.0, 2)
        assert got.value == pytest.approx(0.5) and got.strict
        assert predicted_order(1.0, 1) == (0.5, True)
        # at p = 2 the first order carries a strict marker in 2D/3D only
        assert predicted_order(2.0, 1) == (1.0, False)
        assert predicted_order(2.0, 2) == (1.0, True)
        assert predicted_order(2.0, 3) == (1.0, True)

    def test_order_nondecreasing_in_p(self):
        for d, lo in ((1, 1.0), (2, 1.01), (3, 1.51)):
            ps = np.linspace(lo, 5.0, 60)
            vals = [predicted_order(p, d).value for p in ps]
            assert np.all(np.diff(vals) >= -1e-12)

    def test_sigma_window(self):
        lo, hi = sigma_window(1.0, 1)
        assert lo == pytest.approx(0.25) and math.isinf(hi)
        lo, hi = sigma_window(2.0, 3)
        assert lo == pytest.approx(0.5) and math.isinf(hi)
        lo, hi = sigma_window(12.0 / 7.0, 3)
        assert lo == pytest.approx(0.375)
        assert hi == pytest.approx(3.5)
        lo, hi = sigma_window(1.2, 2)
        assert hi == pytest.approx(3.0 / (4.0 - 3.6))

    def test_regularity_class(self):
        rc = RegularityClass(p=12.0 / 7.0, dim=3)
        assert rc.alpha.value == pytest.approx(0.25)
        assert rc.order.value == pytest.approx(0.625)
        with pytest.raises(ValueError):
            RegularityClass(p=1.0, dim=3)


class TestPotentialSpec:
    def test_build_dispatch(self):
        g1 = make_grid(1, 16.0, 64)
        g2 = make_grid(2, 8.0, 16)
        assert PotentialSpec(PotentialKind.NONE).build(g1) is None
        assert PotentialSpec(PotentialKind.DELTA_SERIES_1D, n_ref=4).build(g1) is not None
        assert PotentialSpec(PotentialKind.POWER_SYMBOL, gamma=0.5).build(g2) is not None
        spec = PotentialSpec(PotentialKind.SMOOTH_BOUNDED, sample_fn=gaussian_well())
        assert spec.build(g1) is not None

    def test_validation(self):
        with pytest.raises(ConfigurationError):
            PotentialSpec(PotentialKind.DELTA_SERIES_1D)
        with pytest.raises(ConfigurationError):
            PotentialSpec(PotentialKind.POWER_SYMBOL, gamma=0.0)
        with pytest.raises(ConfigurationError):
            PotentialSpec(PotentialKind.SMOOTH_BOUNDED)

    def test_sign_flip(self):
        g = make_grid(1, 16.0, 64)
        down = PotentialSpec(PotentialKind.DELTA_SERIES_1D, n_ref=4).build(g)
        up = PotentialSpec(PotentialKind.DELTA_SERIES_1D, n_ref=4, sign=1.0).build(g)
        assert np.abs(up.values + down.values).max() < 1e-14
