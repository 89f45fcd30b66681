import math

import numpy as np
import pytest

from levyfp.core import Absorbing, DensityField, DriftField, LevyParams, Natural, build_grid
from levyfp.operators import prepare
from levyfp.specfun import mp_threshold
from levyfp.stepper import (
    StepControl,
    euler_step,
    evolve,
    rk3_step,
    select_dt,
    select_dt_composite,
)


def _ones_field(grid, time=0.0):
    return DensityField(np.ones(grid.size), grid, time)


def _decay(P):
    return -P.values


class TestStepControl:
    def test_rejects_bad_dt(self):
        with pytest.raises(ValueError):
            StepControl(0.0)
        with pytest.raises(ValueError):
            StepControl(-0.1)

    def test_rejects_unknown_integrator(self):
        with pytest.raises(ValueError):
            StepControl(0.1, "rk4")


class TestStepSelection:
    def test_select_dt_cauchy_values(self):
        p = LevyParams.create(1.0, 1.0)
        grid = build_grid(Natural(1.0), 0.001)
        full = select_dt(p, grid, safety=1.0)
        assert full == pytest.approx(0.001 * math.pi / 5.0, rel=1e-13)
        assert select_dt(p, grid) == pytest.approx(0.5 * full, rel=1e-13)

    def test_select_dt_scales_with_h_to_alpha(self):
        p = LevyParams.create(0.5, 1.0)
        g1 = build_grid(Natural(1.0), 0.1)
        g2 = build_grid(Natural(1.0), 0.025)
        ratio = select_dt(p, g1) / select_dt(p, g2)
        assert ratio == pytest.approx(4.0**0.5, rel=1e-12)

    def test_select_dt_rejects_bad_safety(self):
        p = LevyParams.create(1.0, 1.0)
        grid = build_grid(Natural(1.0), 0.1)
        with pytest.raises(ValueError):
            select_dt(p, grid, safety=0.0)
        with pytest.raises(ValueError):
            select_dt(p, grid, safety=1.5)

    def test_composite_matches_jump_bound_without_extras(self):
        p = LevyParams.create(1.0, 1.0, 0.0)
        grid = build_grid(Natural(1.0), 0.01)
        assert select_dt_composite(p, grid) == pytest.approx(select_dt(p, grid), rel=1e-13)

    def test_composite_tightens_with_diffusion(self):
        p = LevyParams.create(1.0, 1.0, 1.0)
        grid = build_grid(Natural(1.0), 0.1)
        dt = select_dt_composite(p, grid, safety=1.0)
        c_h = 0.5 + 0.1 / (2.0 * math.pi)
        assert dt == pytest.approx(0.1**2 / (2.0 * c_h), rel=1e-12)
        assert dt < 0.1 * mp_threshold(1.0, 1.0)

    def test_composite_tightens_with_fast_drift(self):
        p = LevyParams.create(1.0, 1.0, 0.0)
        grid = build_grid(Natural(1.0), 0.1)
        drift = DriftField.tabulated(grid, 50.0 * grid.nodes)
        dt = select_dt_composite(p, grid, drift, safety=1.0)
        assert dt == pytest.approx(0.1 / 50.0, rel=1e-12)


class TestSingleSteps:
    def test_euler_linear_decay(self):
        grid = build_grid(Natural(1.0), 0.5)
        P1 = euler_step(_ones_field(grid), _decay, 0.1)
        assert np.allclose(P1.values, 0.9, rtol=1e-14)
        assert P1.time == pytest.approx(0.1)

    def test_rk3_linear_decay(self):
        grid = build_grid(Natural(1.0), 0.5)
        P1 = rk3_step(_ones_field(grid), _decay, 0.1)
        assert np.allclose(P1.values, 0.9048333333333333, rtol=1e-14)
        assert P1.time == pytest.approx(0.1)

    def test_absorbing_boundaries_pinned_each_step(self):
        grid = build_grid(Absorbing(-1.0, 1.0), 0.5)
        P0 = DensityField(np.array([0.0, 1.0, 1.0, 1.0, 0.0]), grid, 0.0)
        P1 = euler_step(P0, lambda P: np.ones(P.values.size), 0.1)
        assert P1.values[0] == 0.0 and P1.values[-1] == 0.0
        assert np.allclose(P1.values[1:-1], 1.1)

    def test_non_finite_step_rejected(self):
        grid = build_grid(Natural(1.0), 0.5)
        bad = lambda P: np.full(P.values.size, np.inf)
        with pytest.raises(FloatingPointError):
            euler_step(_ones_field(grid), bad, 0.1)


class TestEvolve:
    def test_lands_exactly_on_milestones(self):
        grid = build_grid(Natural(1.0), 0.5)
        seen = []
        out = evolve(
            _ones_field(grid),
            _decay,
            StepControl(0.013, "rk3"),
            1.0,
            observe_times=[0.25, 0.5],
            observer=lambda P: seen.append(P.time),
        )
        assert seen == [0.25, 0.5]
        assert out.time == 1.0
        assert np.allclose(out.values, math.exp(-1.0), rtol=1e-6)

    def test_observer_untouched_when_no_times(self):
        grid = build_grid(Natural(1.0), 0.5)
        seen = []
        evolve(_ones_field(grid), _decay, StepControl(0.1), 0.5, observer=lambda P: seen.append(P))
        assert seen == []

    def test_rejects_target_before_start(self):
        grid = build_grid(Natural(1.0), 0.5)
        with pytest.raises(ValueError):
            evolve(_ones_field(grid, time=1.0), _decay, StepControl(0.1), 0.5)

    def test_rejects_observation_outside_range(self):
        grid = build_grid(Natural(1.0), 0.5)
        with pytest.raises(ValueError):
            evolve(_ones_field(grid), _decay, StepControl(0.1), 0.5, observe_times=[0.7])

    def test_step_guard_trips(self):
        grid = build_grid(Natural(1.0), 0.5)
        with pytest.raises(RuntimeError):
            evolve(_ones_field(grid), _decay, StepControl(1e-6), 1.0, max_steps=3)

    def test_euler_first_order(self):
        grid = build_grid(Natural(1.0), 0.5)
        errs = []
        for dt in (0.02, 0.01):
            out = evolve(_ones_field(grid), _decay, StepControl(dt, "euler"), 1.0)
            errs.append(abs(out.values[0] - math.exp(-1.0)))
        order = math.log2(errs[0] / errs[1])
        assert order == pytest.approx(1.0, abs=0.1)

    def test_rk3_third_order(self):
        grid = build_grid(Natural(1.0), 0.5)
        errs = []
        for dt in (0.02, 0.01):
            out = evolve(_ones_field(grid), _decay, StepControl(dt, "rk3"), 1.0)
            errs.append(abs(out.values[0] - math.exp(-1.0)))
        order = math.log2(errs[0] / errs[1])
        assert order == pytest.approx(3.0, abs=0.2)


class TestMonotonicity:
    def test_euler_respects_bounds_at_admissible_step(self):
        p = LevyParams.create(1.0, 1.0, 0.0)
        grid = build_grid(Natural(2.0), 0.0625)
        ws = prepare(p, grid, DriftField.zero(grid))
        vals = np.zeros(grid.size)
        vals[grid.J] = 1.0
        P = DensityField(vals, grid, 0.0)
        dt = 0.99 * grid.h**p.alpha * mp_threshold(p.alpha, p.eps)
        for _ in range(20):
            Q = euler_step(P, ws.rhs, dt)
            assert Q.values.min() >= -1e-14
            assert Q.values.max() <= P.values.max() + 1e-14
            P = Q

    def test_euler_violates_bounds_beyond_threshold(self):
        p = LevyParams.create(1.0, 1.0, 0.0)
        grid = build_grid(Natural(2.0), 0.0625)
        ws = prepare(p, grid, DriftField.zero(grid))
        vals = np.zeros(grid.size)
        vals[grid.J] = 1.0
        P = DensityField(vals, grid, 0.0)
        dt = 40.0 * grid.h**p.alpha * mp_threshold(p.alpha, p.eps)
        P = euler_step(P, ws.rhs, dt)
        assert P.values.min() < -1e-8
