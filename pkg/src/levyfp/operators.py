"""Semi-discrete right-hand side assembly.

The evolution of nodal densities P_j(t) combines four ingredients:

* a singular jump sum, discretized by a trapezoidal rule whose two end
  indices carry weight 1/2 and whose removed singular node is
  compensated by a zeta-function correction folded into the diffusion
  coefficient C_h = d/2 - eps*C_alpha*zeta(alpha-1)*h**(2-alpha);
* that corrected second-difference diffusion;
* for the absorbing condition, an exterior-decay coefficient E_j from
  integrating the kernel over the complement of the interval;
* flux-split advection with third-order biased (WENO) derivatives.

The jump sum over m != j is a symmetric Toeplitz convolution plus a
per-row O(1) end-weight correction, so applying the operator costs
O(J log J) per evaluation once the kernel transform is prepared.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import DensityField, DriftField, Grid, LevyParams
from .toeplitz import PreparedToeplitz, SymmetricToeplitzKernel, matvec_naive

__all__ = [
    "OperatorWorkspace",
    "prepare",
    "nonlocal_kernel_column",
    "corrected_diffusion",
    "exterior_decay",
    "nonlocal_sum",
    "weno3_plus",
    "weno3_minus",
    "split_fluxes",
    "advection_term",
    "rhs_absorbing",
    "rhs_natural",
]


def nonlocal_kernel_column(alpha: float, h: float, J: int) -> np.ndarray:
    """Quadrature weights w_k = h / (k*h)**(1+alpha) for k = 1..2J."""
    k = np.arange(1, 2 * J + 1, dtype=np.float64)
    return h / (k * h) ** (1.0 + alpha)


def corrected_diffusion(params: LevyParams, h: float) -> float:
    """Diffusion coefficient C_h, the d/2 part plus the quadrature correction."""
    return params.d / 2.0 - params.eps * params.c_alpha * params.zeta_am1 * h ** (
        2.0 - params.alpha
    )


def exterior_decay(params: LevyParams, grid: Grid) -> np.ndarray:
    """Absorbing-interval decay coefficients E_j, zero at the pinned boundary rows.

    E_j = (eps*C_alpha/alpha) * ((B+x_j)**-alpha + (B-x_j)**-alpha) for
    interior nodes; the two boundary entries are set to 0 because those
    rows are never evolved.
    """
    a = params.alpha
    b = grid.half_width
    x = grid.nodes[1:-1]
    e = np.zeros(grid.size)
    e[1:-1] = (params.eps * params.c_alpha / a) * ((b + x) ** (-a) + (b - x) ** (-a))
    return e


@dataclass(eq=False)
class OperatorWorkspace:
    """Precomputed pieces of the right-hand side for one (params, grid, drift).

    Prepare once, then evaluate ``rhs`` every stage of every step; the
    kernel transform and all coefficient vectors are reused.
    """

    params: LevyParams
    grid: Grid
    drift: DriftField
    weno_delta: float
    use_fft: bool
    c_h: float
    kernel: SymmetricToeplitzKernel
    s_diag: np.ndarray
    exterior: np.ndarray | None
    _w_ext: np.ndarray = field(repr=False, default=None)
    _prepared: PreparedToeplitz | None = field(repr=False, default=None)

    def rhs(self, P: DensityField) -> np.ndarray:
        """Semi-discrete dP/dt for whichever condition the grid carries."""
        if self.grid.is_absorbing:
            return rhs_absorbing(P, self)
        return rhs_natural(P, self)

    def _convolve(self, values: np.ndarray) -> np.ndarray:
        if self.use_fft:
            return self._prepared.matvec(values)
        return matvec_naive(self.kernel, values)

    def _nonlocal(self, values: np.ndarray) -> np.ndarray:
        # eps*C_alpha * (conv'' - S_j * P_j); the end-weight halving enters
        # through the correction vector and through s_diag.
        conv = self._convolve(values)
        w = self._w_ext
        conv -= 0.5 * (w * values[0] + w[::-1] * values[-1])
        conv -= self.s_diag * values
        conv *= self.params.eps * self.params.c_alpha
        return conv


def prepare(
    params: LevyParams,
    grid: Grid,
    drift: DriftField,
    weno_delta: float = 1e-6,
    use_fft: bool = True,
) -> OperatorWorkspace:
    """Assemble the workspace: kernel column, its transform, diagonal sums,
    diffusion coefficient, and (for absorbing grids) the exterior vector.

    Grids with J < 2 are rejected; everything else about the stencil is
    handled by the zero ghost convention.
    """
    if grid.J < 2:
        raise ValueError(f"operator assembly needs J >= 2, got J={grid.J}")
    if drift.grid != grid:
        raise ValueError("drift is sampled on a different grid")
    if not weno_delta > 0.0:
        raise ValueError(f"weno_delta must be positive, got {weno_delta!r}")

    J = grid.J
    w = nonlocal_kernel_column(params.alpha, grid.h, J)
    w_ext = np.concatenate(([0.0], w))  # w_ext[k] = w_k with w_0 = 0
    prefix = np.concatenate(([0.0], np.cumsum(w)))  # prefix[n] = w_1 + .. + w_n
    i = np.arange(2 * J + 1)
    # S_i = sum'' over m != i of w_|m-i|, halving the m = -J and m = +J terms
    s_diag = prefix[i] + prefix[2 * J - i] - 0.5 * (w_ext[i] + w_ext[2 * J - i])

    kernel = SymmetricToeplitzKernel(np.concatenate(([0.0], w)))
    prepared = kernel.prepare() if use_fft else None
    ext = exterior_decay(params, grid) if grid.is_absorbing else None

    ws = OperatorWorkspace(
        params=params,
        grid=grid,
        drift=drift,
        weno_delta=float(weno_delta),
        use_fft=use_fft,
        c_h=corrected_diffusion(params, grid.h),
        kernel=kernel,
        s_diag=s_diag,
        exterior=ext,
    )
    ws._w_ext = w_ext
    ws._prepared = prepared
    return ws


def _check_bound(P: DensityField, ws: OperatorWorkspace) -> None:
    if P.grid != ws.grid:
        raise ValueError("field and workspace live on different grids")


def nonlocal_sum(P: DensityField, ws: OperatorWorkspace) -> np.ndarray:
    """Jump-sum term eps*C_alpha*h * sum''_k (P_{j+k} - P_j) / |x_k|**(1+alpha).

    The sum keeps j+k inside -J..J; the boundary-index terms m = -J and
    m = +J carry weight 1/2 wherever they appear. For absorbing fields
    the caller is expected to hold zeros at the boundary nodes.
    """
    _check_bound(P, ws)
    return ws._nonlocal(P.values)


def _pad2(phi: np.ndarray) -> np.ndarray:
    q = np.zeros(phi.size + 4)
    q[2:-2] = phi
    return q


def weno3_plus(phi: np.ndarray, h: float, delta: float = 1e-6) -> np.ndarray:
    """Left-biased third-order derivative of nodal data, zero ghosts appended.

    The smoothness ratio r_- compares the second differences on the two
    candidate stencils; delta keeps the ratio finite on flat data.
    """
    phi = np.asarray(phi, dtype=np.float64)
    n = phi.size
    q = _pad2(phi)
    dq = np.diff(q)  # dq[m] = q[m+1] - q[m]
    d2 = q[2:] - 2.0 * q[1:-1] + q[:-2]  # centered at q index m+1
    central = (dq[1 : n + 1] + dq[2 : n + 2]) / (2.0 * h)
    third = dq[0:n] - 2.0 * dq[1 : n + 1] + dq[2 : n + 2]
    r = (delta + d2[0:n] ** 2) / (delta + d2[1 : n + 1] ** 2)
    omega = 1.0 / (1.0 + 2.0 * r**2)
    return central - omega * third / (2.0 * h)


def weno3_minus(phi: np.ndarray, h: float, delta: float = 1e-6) -> np.ndarray:
    """Right-biased mirror of weno3_plus."""
    phi = np.asarray(phi, dtype=np.float64)
    n = phi.size
    q = _pad2(phi)
    dq = np.diff(q)
    d2 = q[2:] - 2.0 * q[1:-1] + q[:-2]
    central = (dq[1 : n + 1] + dq[2 : n + 2]) / (2.0 * h)
    third = dq[3 : n + 3] - 2.0 * dq[2 : n + 2] + dq[1 : n + 1]
    r = (delta + d2[2 : n + 2] ** 2) / (delta + d2[1 : n + 1] ** 2)
    omega = 1.0 / (1.0 + 2.0 * r**2)
    return central - omega * third / (2.0 * h)


def split_fluxes(P: DensityField, ws: OperatorWorkspace) -> tuple[np.ndarray, np.ndarray]:
    """Global splitting (fP)^± = (fP ± lambda*P)/2 with lambda = max |f|."""
    _check_bound(P, ws)
    flux = ws.drift.nodal_values * P.values
    lam = ws.drift.lf_speed
    return 0.5 * (flux + lam * P.values), 0.5 * (flux - lam * P.values)


def advection_term(P: DensityField, ws: OperatorWorkspace) -> np.ndarray:
    """Drift contribution -[D+( (fP)^+ ) + D-( (fP)^- )].

    The plus flux moves right and takes the left-biased derivative, the
    minus flux the mirror; with f identically zero the term is exactly
    the zero vector.
    """
    _check_bound(P, ws)
    if ws.drift.lf_speed == 0.0 and not np.any(ws.drift.nodal_values):
        return np.zeros(P.values.size)
    fp, fm = split_fluxes(P, ws)
    h, delta = ws.grid.h, ws.weno_delta
    return -(weno3_plus(fp, h, delta) + weno3_minus(fm, h, delta))


def _second_difference_zero_ghosts(v: np.ndarray) -> np.ndarray:
    sd = np.empty_like(v)
    sd[1:-1] = v[:-2] - 2.0 * v[1:-1] + v[2:]
    sd[0] = v[1] - 2.0 * v[0]
    sd[-1] = v[-2] - 2.0 * v[-1]
    return sd


def rhs_absorbing(P: DensityField, ws: OperatorWorkspace) -> np.ndarray:
    """dP/dt on an absorbing grid; the two boundary rows are identically 0.

    Boundary values of P are treated as zero (they are pinned by the
    condition), so a field whose seed put nonzero mass on the boundary
    is absorbed from the first evaluation on.
    """
    _check_bound(P, ws)
    if not ws.grid.is_absorbing:
        raise ValueError("workspace was prepared for a natural grid")
    v = P.values
    if v[0] != 0.0 or v[-1] != 0.0:
        v = v.copy()
        v[0] = 0.0
        v[-1] = 0.0
    h2 = ws.grid.h**2
    out = ws._nonlocal(v)
    out += (ws.c_h / h2) * _second_difference_zero_ghosts(v)
    out -= ws.exterior * v
    if ws.drift.lf_speed != 0.0 or np.any(ws.drift.nodal_values):
        out += advection_term(P.with_values(v, P.time), ws)
    out[0] = 0.0
    out[-1] = 0.0
    return out


def rhs_natural(P: DensityField, ws: OperatorWorkspace) -> np.ndarray:
    """dP/dt on a natural grid; all 2J+1 rows evolve, ghosts beyond ±J are 0."""
    _check_bound(P, ws)
    if ws.grid.is_absorbing:
        raise ValueError("workspace was prepared for an absorbing grid")
    v = P.values
    h2 = ws.grid.h**2
    out = ws._nonlocal(v)
    out += (ws.c_h / h2) * _second_difference_zero_ghosts(v)
    if ws.drift.lf_speed != 0.0 or np.any(ws.drift.nodal_values):
        out += advection_term(P, ws)
    return out
