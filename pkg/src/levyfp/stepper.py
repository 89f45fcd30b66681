"""Explicit time integration with monotone step-size selection.

Both integrators preserve the discrete maximum principle when the step
respects the jump-operator bound dt <= h**alpha * mp_threshold(alpha, eps):
the forward Euler update is then a convex-type combination with
nonnegative coefficients, and the three-stage third-order scheme is a
convex combination of Euler steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import DensityField, DriftField, Grid, LevyParams
from .operators import OperatorWorkspace
from .specfun import mp_threshold

__all__ = [
    "StepControl",
    "select_dt",
    "select_dt_composite",
    "euler_step",
    "rk3_step",
    "evolve",
]

RhsFn = Callable[[DensityField], np.ndarray]


@dataclass(frozen=True)
class StepControl:
    """Fixed step size plus the integrator choice ("euler" or "rk3")."""

    dt: float
    integrator: str = "rk3"

    def __post_init__(self) -> None:
        if not self.dt > 0.0:
            raise ValueError(f"step size must be positive, got {self.dt!r}")
        if self.integrator not in ("euler", "rk3"):
            raise ValueError(f"integrator must be 'euler' or 'rk3', got {self.integrator!r}")


def select_dt(params: LevyParams, grid: Grid, safety: float = 0.5) -> float:
    """Monotonicity-limited step for the pure jump part: safety * h**alpha * threshold."""
    if not 0.0 < safety <= 1.0:
        raise ValueError(f"safety factor must lie in (0, 1], got {safety!r}")
    return safety * grid.h**params.alpha * mp_threshold(params.alpha, params.eps)


def select_dt_composite(
    params: LevyParams,
    grid: Grid,
    drift: DriftField | None = None,
    safety: float = 0.5,
) -> float:
    """Step bound combining the jump, Gaussian-diffusion, and advection limits.

    The jump bound is the one from select_dt; a positive d adds the
    parabolic restriction h**2 / (2 C_h), and a nonzero drift adds the
    advective restriction h / lf_speed.
    """
    from .operators import corrected_diffusion

    if not 0.0 < safety <= 1.0:
        raise ValueError(f"safety factor must lie in (0, 1], got {safety!r}")
    bound = grid.h**params.alpha * mp_threshold(params.alpha, params.eps)
    if params.d > 0.0:
        bound = min(bound, grid.h**2 / (2.0 * corrected_diffusion(params, grid.h)))
    if drift is not None and drift.lf_speed > 0.0:
        bound = min(bound, grid.h / drift.lf_speed)
    return safety * bound


def _advance(P: DensityField, values: np.ndarray, t: float) -> DensityField:
    if P.grid.is_absorbing:
        values[0] = 0.0
        values[-1] = 0.0
    if not np.all(np.isfinite(values)):
        raise FloatingPointError(
            f"non-finite values produced while stepping from t={P.time!r} to t={t!r}"
        )
    return P.with_values(values, t)


def euler_step(P: DensityField, rhs_fn: RhsFn, dt: float) -> DensityField:
    """One forward Euler step P + dt * rhs(P)."""
    return _advance(P, P.values + dt * rhs_fn(P), P.time + dt)


def rk3_step(P: DensityField, rhs_fn: RhsFn, dt: float) -> DensityField:
    """Three-stage third-order step built from convex combinations of Euler stages.

    u1 = u + dt R(u)
    u2 = 3/4 u + 1/4 u1 + 1/4 dt R(u1)
    u(t+dt) = 1/3 u + 2/3 u2 + 2/3 dt R(u2)
    """
    u = P.values
    s1 = _advance(P, u + dt * rhs_fn(P), P.time + dt)
    s2 = _advance(P, 0.75 * u + 0.25 * s1.values + 0.25 * dt * rhs_fn(s1), P.time + 0.5 * dt)
    return _advance(P, u / 3.0 + (2.0 / 3.0) * s2.values + (2.0 / 3.0) * dt * rhs_fn(s2), P.time + dt)


def _resolve_rhs(source: OperatorWorkspace | RhsFn) -> RhsFn:
    if isinstance(source, OperatorWorkspace):
        return source.rhs
    if callable(source):
        return source
    raise TypeError(f"expected an OperatorWorkspace or a callable rhs, got {source!r}")


def evolve(
    P0: DensityField,
    ws: OperatorWorkspace | RhsFn,
    ctrl: StepControl,
    t_end: float,
    observe_times: Sequence[float] = (),
    observer: Callable[[DensityField], None] | None = None,
    max_steps: int | None = None,
) -> DensityField:
    """March from P0.time to t_end with fixed steps, landing exactly on
    every requested observation time.

    The observer is called with the current field at each time in
    ``observe_times`` (which must lie in (P0.time, t_end]); the final
    field is returned either way. Steps are shortened, never lengthened,
    so the monotone step bound is preserved, and a step-count guard
    aborts if rounding would stall the march.
    """
    t0 = P0.time
    if t_end < t0:
        raise ValueError(f"t_end={t_end!r} precedes the field time {t0!r}")
    milestones = sorted(set(float(t) for t in observe_times) | {float(t_end)})
    for t in milestones:
        if t < t0 - 1e-15 or t > t_end + 1e-15:
            raise ValueError(f"observation time {t!r} outside ({t0!r}, {t_end!r}]")

    rhs_fn = _resolve_rhs(ws)
    step = euler_step if ctrl.integrator == "euler" else rk3_step
    dt = ctrl.dt
    if max_steps is None:
        max_steps = 10 * (math.ceil((t_end - t0) / dt) + len(milestones)) + 100

    observe_set = set(float(t) for t in observe_times)
    P = P0
    steps = 0
    for target in milestones:
        while P.time < target - 1e-12 * max(1.0, abs(target)):
            if steps >= max_steps:
                raise RuntimeError(
                    f"step guard tripped after {steps} steps at t={P.time!r} (target {target!r})"
                )
            P = step(P, rhs_fn, min(dt, target - P.time))
            steps += 1
        P = P.with_values(P.values, target)  # snap accumulated roundoff
        if observer is not None and target in observe_set:
            observer(P)
    return P
