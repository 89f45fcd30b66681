"""Problem description types: coefficients, grids, fields, drifts, seeds.

These are plain frozen dataclasses with validation at construction, so
an object that exists is safe to hand to the operator and stepper
layers without re-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Union

import numpy as np

from .specfun import StabilityIndex, c_alpha, riemann_zeta

__all__ = [
    "LevyParams",
    "Absorbing",
    "Natural",
    "AuxCondition",
    "Grid",
    "build_grid",
    "DensityField",
    "DriftField",
    "GaussianPaper",
    "GaussianNormalized",
    "Uniform",
    "CauchySeed",
    "InitialProfile",
    "sample_initial",
]

_DERIVED_TOL = 1e-12


@dataclass(frozen=True)
class LevyParams:
    """Equation coefficients with the derived kernel constants attached.

    Use :meth:`create` in normal code; the constructor re-derives
    ``c_alpha`` and ``zeta_am1`` and rejects values that disagree by
    more than 1e-12, so a params object can never carry stale constants.
    """

    alpha: float
    eps: float
    d: float
    c_alpha: float
    zeta_am1: float

    def __post_init__(self) -> None:
        a = StabilityIndex(float(self.alpha)).alpha
        if not self.eps > 0.0:
            raise ValueError(f"jump intensity eps must be positive, got {self.eps!r}")
        if self.d < 0.0 or self.d != self.d:
            raise ValueError(f"diffusion coefficient d must be >= 0, got {self.d!r}")
        expected_c = c_alpha(a)
        expected_z = riemann_zeta(a - 1.0)
        if abs(self.c_alpha - expected_c) > _DERIVED_TOL * max(1.0, abs(expected_c)):
            raise ValueError(
                f"c_alpha={self.c_alpha!r} inconsistent with alpha={a!r} "
                f"(expected {expected_c!r})"
            )
        if abs(self.zeta_am1 - expected_z) > _DERIVED_TOL * max(1.0, abs(expected_z)):
            raise ValueError(
                f"zeta_am1={self.zeta_am1!r} inconsistent with alpha={a!r} "
                f"(expected {expected_z!r})"
            )

    @classmethod
    def create(cls, alpha: float, eps: float, d: float = 0.0) -> "LevyParams":
        a = StabilityIndex(float(alpha)).alpha
        return cls(
            alpha=a,
            eps=float(eps),
            d=float(d),
            c_alpha=c_alpha(a),
            zeta_am1=riemann_zeta(a - 1.0),
        )


@dataclass(frozen=True)
class Absorbing:
    """Density is pinned to zero on and outside the interval (a, b).

    Only symmetric intervals are supported directly; center a general
    interval before building the grid.
    """

    a: float = -1.0
    b: float = 1.0

    def __post_init__(self) -> None:
        if not self.a < self.b:
            raise ValueError(f"absorbing interval needs a < b, got ({self.a!r}, {self.b!r})")


@dataclass(frozen=True)
class Natural:
    """Free decay on (-L, L); the far field is truncated, not pinned."""

    L: float

    def __post_init__(self) -> None:
        if not self.L >= 1.0:
            raise ValueError(f"natural truncation needs L >= 1, got {self.L!r}")


AuxCondition = Union[Absorbing, Natural]


@dataclass(frozen=True)
class Grid:
    """Uniform symmetric grid x_j = j*h for j = -J..J."""

    h: float
    J: int
    condition: AuxCondition

    def __post_init__(self) -> None:
        if not self.h > 0.0:
            raise ValueError(f"grid spacing must be positive, got {self.h!r}")
        if self.J < 1:
            raise ValueError(f"grid needs J >= 1, got {self.J!r}")

    @property
    def half_width(self) -> float:
        return self.J * self.h

    @property
    def size(self) -> int:
        return 2 * self.J + 1

    @property
    def is_absorbing(self) -> bool:
        return isinstance(self.condition, Absorbing)

    @cached_property
    def nodes(self) -> np.ndarray:
        x = np.arange(-self.J, self.J + 1, dtype=np.int64) * self.h
        x.setflags(write=False)
        return x


def _condition_half_width(condition: AuxCondition) -> float:
    if isinstance(condition, Absorbing):
        if abs(condition.a + condition.b) > 1e-12 * max(1.0, abs(condition.b)):
            raise ValueError(
                "absorbing interval must be symmetric about the origin; "
                f"got ({condition.a!r}, {condition.b!r})"
            )
        return condition.b
    if isinstance(condition, Natural):
        return condition.L
    raise TypeError(f"unsupported condition {condition!r}")


def build_grid(condition: AuxCondition, h: float) -> Grid:
    """Build the symmetric grid covering the condition's interval.

    ``h`` must divide the half width to within 1e-12 (relative); the
    boundary nodes then land on the interval endpoints exactly.
    """
    half = _condition_half_width(condition)
    h = float(h)
    if not h > 0.0:
        raise ValueError(f"grid spacing must be positive, got {h!r}")
    J = int(round(half / h))
    if J < 1 or abs(J * h - half) > 1e-12 * max(1.0, half):
        raise ValueError(
            f"spacing h={h!r} does not divide the half width {half!r} of {condition!r}"
        )
    return Grid(h=h, J=J, condition=condition)


@dataclass(eq=False)
class DensityField:
    """Nodal density values on a grid at one instant."""

    values: np.ndarray
    grid: Grid
    time: float

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=np.float64)
        if v.shape != (self.grid.size,):
            raise ValueError(
                f"field needs {self.grid.size} values for J={self.grid.J}, got shape {v.shape}"
            )
        if not np.all(np.isfinite(v)):
            raise ValueError("field values must be finite")
        self.values = v

    def with_values(self, values: np.ndarray, time: float) -> "DensityField":
        return DensityField(values=values, grid=self.grid, time=time)


def _double_well_speed(half_width: float) -> float:
    # |x - x**3| on [-B, B] peaks at the ends or at x = 1/sqrt(3)
    candidates = [abs(half_width - half_width**3)]
    x_star = 1.0 / math.sqrt(3.0)
    if x_star <= half_width:
        candidates.append(x_star - x_star**3)
    return max(candidates)


@dataclass(frozen=True, eq=False)
class DriftField:
    """Drift sampled on the grid plus the global splitting speed.

    ``lf_speed`` is the maximum of |f| over the computational interval
    (analytic for the built-in drifts, exact nodal max for tabulated
    data); it is the wave speed used by the flux splitting.
    """

    kind: str
    grid: Grid
    nodal_values: np.ndarray
    lf_speed: float
    _func: Callable[[np.ndarray], np.ndarray] | None = field(default=None, repr=False)

    @classmethod
    def zero(cls, grid: Grid) -> "DriftField":
        return cls("zero", grid, np.zeros(grid.size), 0.0, lambda x: np.zeros_like(x))

    @classmethod
    def ornstein_uhlenbeck(cls, grid: Grid) -> "DriftField":
        x = grid.nodes
        return cls("ou", grid, -x, grid.half_width, lambda x: -x)

    @classmethod
    def double_well(cls, grid: Grid) -> "DriftField":
        x = grid.nodes
        return cls(
            "double-well",
            grid,
            x - x**3,
            _double_well_speed(grid.half_width),
            lambda x: x - x**3,
        )

    @classmethod
    def tabulated(cls, grid: Grid, values: np.ndarray) -> "DriftField":
        v = np.asarray(values, dtype=np.float64)
        if v.shape != (grid.size,):
            raise ValueError(f"tabulated drift needs {grid.size} values, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("tabulated drift must be finite")
        return cls("tabulated", grid, v, float(np.max(np.abs(v))))

    @classmethod
    def from_kind(cls, kind: str, grid: Grid) -> "DriftField":
        table = {
            "zero": cls.zero,
            "ou": cls.ornstein_uhlenbeck,
            "double-well": cls.double_well,
        }
        if kind not in table:
            raise ValueError(f"unknown drift kind {kind!r}; expected one of {sorted(table)}")
        return table[kind](grid)

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Drift at arbitrary positions (interpolated for tabulated data)."""
        x = np.asarray(x, dtype=np.float64)
        if self._func is not None:
            return self._func(x)
        return np.interp(x, self.grid.nodes, self.nodal_values, left=0.0, right=0.0)


@dataclass(frozen=True)
class GaussianPaper:
    """Bell profile sqrt(40/pi) * exp(-(x-center)**2 / 40), mass 40.

    The scale is kept literal (it is a figure-for-figure seed); use
    GaussianNormalized for a unit-mass start.
    """

    center: float = 0.0


@dataclass(frozen=True)
class GaussianNormalized:
    """Unit-mass normal density with the given variance."""

    variance: float
    center: float = 0.0

    def __post_init__(self) -> None:
        if not self.variance > 0.0:
            raise ValueError(f"variance must be positive, got {self.variance!r}")


@dataclass(frozen=True)
class Uniform:
    """Flat value 0.5 on (-1, 1), zero outside."""


@dataclass(frozen=True)
class CauchySeed:
    """Cauchy density with scale t0, the short-time profile of the
    drift-free unit-intensity alpha=1 dynamics started from a point mass."""

    t0: float = 0.01

    def __post_init__(self) -> None:
        if not self.t0 > 0.0:
            raise ValueError(f"seed time must be positive, got {self.t0!r}")


InitialProfile = Union[GaussianPaper, GaussianNormalized, Uniform, CauchySeed]


def sample_initial(profile: InitialProfile, grid: Grid) -> DensityField:
    """Evaluate a profile on the grid nodes.

    Values are the literal profile values everywhere, including the
    boundary nodes of an absorbing grid (no clipping); the first time
    step absorbs whatever the profile put there. The field time is 0,
    except for CauchySeed where it is t0.
    """
    x = grid.nodes
    t = 0.0
    if isinstance(profile, GaussianPaper):
        v = math.sqrt(40.0 / math.pi) * np.exp(-((x - profile.center) ** 2) / 40.0)
    elif isinstance(profile, GaussianNormalized):
        var = profile.variance
        v = np.exp(-((x - profile.center) ** 2) / (2.0 * var)) / math.sqrt(2.0 * math.pi * var)
    elif isinstance(profile, Uniform):
        v = np.where(np.abs(x) <= 1.0 + 1e-12, 0.5, 0.0)
    elif isinstance(profile, CauchySeed):
        t0 = profile.t0
        v = t0 / (math.pi * (t0**2 + x**2))
        t = t0
    else:
        raise TypeError(f"unsupported initial profile {profile!r}")
    return DensityField(values=v, grid=grid, time=t)
