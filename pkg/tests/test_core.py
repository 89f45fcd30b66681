import math

import numpy as np
import pytest

from levyfp.core import (
    Absorbing,
    CauchySeed,
    DensityField,
    DriftField,
    GaussianNormalized,
    GaussianPaper,
    LevyParams,
    Natural,
    Uniform,
    build_grid,
    sample_initial,
)


class TestLevyParams:
    def test_create_derives_constants(self):
        p = LevyParams.create(1.0, 1.0, 0.0)
        assert p.c_alpha == pytest.approx(1.0 / math.pi, rel=1e-14)
        assert p.zeta_am1 == pytest.approx(-0.5, abs=1e-13)

    def test_rejects_stale_constants(self):
        good = LevyParams.create(1.5, 1.0)
        with pytest.raises(ValueError):
            LevyParams(alpha=1.5, eps=1.0, d=0.0, c_alpha=good.c_alpha * 1.001, zeta_am1=good.zeta_am1)
        with pytest.raises(ValueError):
            LevyParams(alpha=1.5, eps=1.0, d=0.0, c_alpha=good.c_alpha, zeta_am1=0.0)

    @pytest.mark.parametrize("alpha", [0.0, 2.0, -1.0])
    def test_rejects_alpha(self, alpha):
        with pytest.raises(ValueError):
            LevyParams.create(alpha, 1.0)

    def test_rejects_eps_and_d(self):
        with pytest.raises(ValueError):
            LevyParams.create(1.0, 0.0)
        with pytest.raises(ValueError):
            LevyParams.create(1.0, -2.0)
        with pytest.raises(ValueError):
            LevyParams.create(1.0, 1.0, -0.1)


class TestGrid:
    def test_natural_grid_nodes(self):
        grid = build_grid(Natural(50.0), 0.001)
        assert grid.J == 50000
        assert grid.size == 100001
        assert grid.nodes[0] == pytest.approx(-50.0, abs=1e-12)
        assert grid.nodes[-1] == pytest.approx(50.0, abs=1e-12)
        assert grid.nodes[grid.J] == 0.0
        assert not grid.is_absorbing

    def test_absorbing_grid(self):
        grid = build_grid(Absorbing(-1.0, 1.0), 0.5)
        assert grid.J == 2
        assert np.allclose(grid.nodes, [-1.0, -0.5, 0.0, 0.5, 1.0])
        assert grid.is_absorbing

    def test_nodes_are_read_only(self):
        grid = build_grid(Natural(1.0), 0.5)
        with pytest.raises(ValueError):
            grid.nodes[0] = 7.0

    def test_rejects_non_dividing_spacing(self):
        with pytest.raises(ValueError):
            build_grid(Natural(1.0), 0.3)

    def test_rejects_asymmetric_absorbing(self):
        with pytest.raises(ValueError):
            build_grid(Absorbing(-0.5, 1.0), 0.25)

    def test_rejects_bad_condition_params(self):
        with pytest.raises(ValueError):
            Absorbing(1.0, -1.0)
        with pytest.raises(ValueError):
            Natural(0.5)


class TestDensityField:
    def test_length_check(self):
        grid = build_grid(Natural(1.0), 0.5)
        with pytest.raises(ValueError):
            DensityField(np.zeros(4), grid, 0.0)

    def test_finiteness_check(self):
        grid = build_grid(Natural(1.0), 0.5)
        with pytest.raises(ValueError):
            DensityField(np.array([0.0, 1.0, np.nan, 1.0, 0.0]), grid, 0.0)

    def test_values_coerced_to_float(self):
        grid = build_grid(Natural(1.0), 0.5)
        f = DensityField(np.array([0, 1, 2, 1, 0]), grid, 0.0)
        assert f.values.dtype == np.float64


class TestDriftField:
    def test_zero(self):
        grid = build_grid(Natural(2.0), 0.5)
        d = DriftField.zero(grid)
        assert d.lf_speed == 0.0
        assert np.all(d.nodal_values == 0.0)

    def test_ou_speed_is_half_width(self):
        grid = build_grid(Natural(10.0), 0.5)
        d = DriftField.ornstein_uhlenbeck(grid)
        assert d.lf_speed == 10.0
        assert np.allclose(d.nodal_values, -grid.nodes)

    def test_double_well_speed_large_domain(self):
        # |x - x^3| on [-4, 4] peaks at the ends: |4 - 64| = 60
        grid = build_grid(Natural(4.0), 0.5)
        d = DriftField.double_well(grid)
        assert d.lf_speed == pytest.approx(60.0, rel=1e-14)

    def test_double_well_speed_small_domain(self):
        # interior max at x = 1/sqrt(3) is 2/(3 sqrt 3)
        grid = build_grid(Natural(1.0), 0.5)
        d = DriftField.double_well(grid)
        assert d.lf_speed == pytest.approx(2.0 / (3.0 * math.sqrt(3.0)), rel=1e-14)

    def test_tabulated_speed_and_interp(self):
        grid = build_grid(Natural(1.0), 0.5)
        d = DriftField.tabulated(grid, np.array([0.0, -3.0, 1.0, 2.0, 0.0]))
        assert d.lf_speed == 3.0
        assert d.evaluate(np.array([0.25])) == pytest.approx([1.5])

    def test_from_kind_rejects_unknown(self):
        grid = build_grid(Natural(1.0), 0.5)
        with pytest.raises(ValueError):
            DriftField.from_kind("sinusoidal", grid)


class TestInitialProfiles:
    def test_uniform_on_absorbing_interval(self):
        grid = build_grid(Absorbing(-1.0, 1.0), 0.5)
        f = sample_initial(Uniform(), grid)
        assert np.allclose(f.values, 0.5)
        assert f.time == 0.0

    def test_uniform_vanishes_outside(self):
        grid = build_grid(Natural(2.0), 0.5)
        f = sample_initial(Uniform(), grid)
        assert f.values[0] == 0.0 and f.values[-1] == 0.0
        assert f.values[grid.J] == 0.5

    def test_cauchy_seed_peak_and_time(self):
        grid = build_grid(Natural(50.0), 0.01)
        f = sample_initial(CauchySeed(), grid)
        assert f.time == 0.01
        assert f.values[grid.J] == pytest.approx(100.0 / math.pi, rel=1e-14)

    def test_cauchy_seed_rejects_nonpositive_time(self):
        with pytest.raises(ValueError):
            CauchySeed(0.0)

    def test_gaussian_paper_center_value(self):
        grid = build_grid(Natural(1.0), 0.5)
        f = sample_initial(GaussianPaper(), grid)
        assert f.values[grid.J] == pytest.approx(math.sqrt(40.0 / math.pi), rel=1e-14)

    def test_gaussian_paper_center_shift(self):
        grid = build_grid(Natural(4.0), 0.5)
        f = sample_initial(GaussianPaper(center=-1.0), grid)
        assert np.argmax(f.values) == grid.J - 2

    def test_gaussian_normalized_unit_mass(self):
        grid = build_grid(Natural(50.0), 0.001)
        f = sample_initial(GaussianNormalized(variance=20.0), grid)
        assert np.trapezoid(f.values, dx=grid.h) == pytest.approx(1.0, abs=1e-6)

    def test_gaussian_normalized_rejects_variance(self):
        with pytest.raises(ValueError):
            GaussianNormalized(variance=0.0)
