"""Exact-solution comparisons and convergence diagnostics.

The drift-free unit-intensity alpha=1 dynamics started from a point
mass has the closed-form density p(x,t) = t / (pi (t**2 + x**2)), which
anchors every quantitative check: pointwise errors, refinement orders,
domain-truncation extrapolation, mass accounting, and tail exponents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import (
    CauchySeed,
    DensityField,
    DriftField,
    Grid,
    LevyParams,
    Natural,
    build_grid,
    sample_initial,
)
from .operators import prepare
from .stepper import StepControl, evolve

__all__ = [
    "ErrorReport",
    "cauchy_exact",
    "error_report",
    "observed_order",
    "richardson_domain",
    "mass_integral",
    "tail_slope",
    "cauchy_run",
    "cauchy_point_error",
    "refinement_table",
    "richardson_refinement_table",
    "mass_sweep",
    "tail_slope_run",
]


def cauchy_exact(x: np.ndarray | float, t: float) -> np.ndarray | float:
    """Closed-form density t / (pi (t**2 + x**2)) for t > 0."""
    if not t > 0.0:
        raise ValueError(f"exact density needs t > 0, got {t!r}")
    return t / (math.pi * (t**2 + np.asarray(x, dtype=np.float64) ** 2))


@dataclass(frozen=True)
class ErrorReport:
    """Max-abs and relative 2-norm distance of a field from a reference."""

    max_abs: float
    rel_l2: float
    at_time: float


def error_report(P: DensityField, exact: Callable[[np.ndarray, float], np.ndarray]) -> ErrorReport:
    """Compare a field against exact(x, t) on its own nodes."""
    ref = np.asarray(exact(P.grid.nodes, P.time), dtype=np.float64)
    norm = float(np.linalg.norm(ref))
    if norm == 0.0:
        raise ValueError("reference solution is identically zero on the grid")
    diff = P.values - ref
    return ErrorReport(
        max_abs=float(np.max(np.abs(diff))),
        rel_l2=float(np.linalg.norm(diff) / norm),
        at_time=P.time,
    )


def observed_order(e_h: float, e_h2: float) -> float:
    """log2 |e_h / e_h2| for errors at spacing h and h/2."""
    if e_h == 0.0 or e_h2 == 0.0:
        raise ValueError("observed order is undefined for an exactly zero error")
    return math.log2(abs(e_h / e_h2))


def richardson_domain(p_l: float, p_2l: float, p_4l: float) -> float:
    """Eliminate the 1/L and 1/L**2 truncation terms from values computed
    on domains of half width L, 2L, 4L: (1/3) p_L - 2 p_2L + (8/3) p_4L."""
    return p_l / 3.0 - 2.0 * p_2l + (8.0 / 3.0) * p_4l


def mass_integral(P: DensityField) -> float:
    """Trapezoidal mass of the field over its grid."""
    return float(np.trapezoid(P.values, dx=P.grid.h))


def tail_slope(P: DensityField, x_lo: float, x_hi: float) -> float:
    """Least-squares slope of log P against log x over nodes in [x_lo, x_hi].

    Requires 0 < x_lo < x_hi and strictly positive values on the window.
    """
    if not 0.0 < x_lo < x_hi:
        raise ValueError(f"window must satisfy 0 < x_lo < x_hi, got ({x_lo!r}, {x_hi!r})")
    x = P.grid.nodes
    sel = (x >= x_lo) & (x <= x_hi)
    if np.count_nonzero(sel) < 2:
        raise ValueError("tail window contains fewer than two nodes")
    vals = P.values[sel]
    if np.any(vals <= 0.0):
        raise ValueError("tail window contains non-positive values")
    return float(np.polyfit(np.log(x[sel]), np.log(vals), 1)[0])


# ---------------------------------------------------------------------------
# Experiment drivers shared by the command-line tables and the test suite.


def cauchy_run(
    L: float,
    h: float,
    t_end: float,
    t0: float = 0.01,
    dt: float | None = None,
    integrator: str = "rk3",
    observe_times: Sequence[float] = (),
    observer: Callable[[DensityField], None] | None = None,
) -> DensityField:
    """Drift-free alpha=1 natural-condition run seeded with the exact density at t0."""
    params = LevyParams.create(alpha=1.0, eps=1.0, d=0.0)
    grid = build_grid(Natural(L), h)
    ws = prepare(params, grid, DriftField.zero(grid))
    P0 = sample_initial(CauchySeed(t0), grid)
    if dt is None:
        dt = 0.5 * h
    ctrl = StepControl(dt=dt, integrator=integrator)
    return evolve(P0, ws, ctrl, t_end, observe_times=observe_times, observer=observer)


def cauchy_point_error(L: float, h: float, x_eval: float = 0.1, t_end: float = 0.02) -> float:
    """Signed nodal error P(x_eval, t_end) - exact at the end of a cauchy_run.

    x_eval must land on a node, which holds for the spacings h = 0.1 / 2**m
    used by the refinement tables.
    """
    P = cauchy_run(L, h, t_end)
    j = int(round(x_eval / h))
    if abs(j * h - x_eval) > 1e-9:
        raise ValueError(f"evaluation point {x_eval!r} is not a node at spacing {h!r}")
    return float(P.values[P.grid.J + j]) - float(cauchy_exact(x_eval, t_end))


def _rows_with_orders(h_list: Sequence[float], errors: Sequence[float]) -> list[dict]:
    rows = []
    for i, (h, e) in enumerate(zip(h_list, errors)):
        order = observed_order(errors[i], errors[i + 1]) if i + 1 < len(errors) else math.nan
        rows.append({"h": h, "error": abs(e), "order": order})
    return rows


def refinement_table(h_list: Sequence[float], L: float = 100.0) -> list[dict]:
    """Pointwise error at (0.1, 0.02) for each spacing, with observed orders."""
    errors = [cauchy_point_error(L, h) for h in h_list]
    return _rows_with_orders(h_list, errors)


def richardson_refinement_table(h_list: Sequence[float], L: float = 100.0) -> list[dict]:
    """Same table with the domain-truncation error removed by combining
    runs on half widths L, 2L, and 4L."""
    exact = float(cauchy_exact(0.1, 0.02))
    errors = []
    for h in h_list:
        values = []
        for scale in (1.0, 2.0, 4.0):
            e = cauchy_point_error(scale * L, h)
            values.append(e + exact)
        errors.append(richardson_domain(*values) - exact)
    return _rows_with_orders(h_list, errors)


def mass_sweep(
    L_list: Sequence[float], h: float = 0.001, t_end: float = 1.0
) -> list[dict]:
    """Trapezoidal mass at t_end for a sweep of natural half widths."""
    rows = []
    for L in L_list:
        P = cauchy_run(L, h, t_end)
        rows.append({"L": float(L), "mass": mass_integral(P)})
    return rows


def tail_slope_run(
    alpha: float,
    L: float = 110.0,
    h: float = 0.01,
    t_end: float = 1.0,
    window: tuple[float, float] = (20.0, 80.0),
) -> float:
    """Log-log slope of the right tail of a drift-free natural run at t_end."""
    params = LevyParams.create(alpha=alpha, eps=1.0, d=0.0)
    grid = build_grid(Natural(L), h)
    ws = prepare(params, grid, DriftField.zero(grid))
    P0 = sample_initial(CauchySeed(0.01), grid)
    dt = 0.5 * h**alpha
    P = evolve(P0, ws, StepControl(dt=dt, integrator="rk3"), t_end)
    return tail_slope(P, *window)
